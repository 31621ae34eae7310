#pragma once

/// @file adders.hpp
/// @brief Builders for the ripple (CQP, MQP) and carry-look-ahead (QCLA) adders.
///
/// All three adders use 3n+1 wires and are little-endian: a(1), b(1) hold the
/// least significant bits. After a run, b(i) holds sum bit S_i and cout holds
/// the carry out. c0 is a real carry-in wire.

#include "qadd/circuit.hpp"

#include <cstddef>
#include <vector>

namespace qadd {

/// Carry block: c_out ^= a.b ^ (a^b).c_in, b <- a^b.
/// Emits CCNOT{a,b}->c_out, CNOT{a}->b, CCNOT{c_in,b}->c_out.
std::vector<Gate> carry_gate(WireIndex c_in, WireIndex a, WireIndex b, WireIndex c_out);

/// Sum block: b <- a ^ b ^ c_in. Emits CNOT{a}->b, CNOT{c_in}->b.
std::vector<Gate> sum_gate(WireIndex c_in, WireIndex a, WireIndex b);

/// CCNOT{a,b}->anc; with anc = 0 this deposits the generate bit a.b.
std::vector<Gate> and_gate(WireIndex a, WireIndex b, WireIndex anc);

/// CNOT{a}->b; leaves the propagate bit a^b on b.
std::vector<Gate> xor_gate(WireIndex a, WireIndex b);

/// Look-ahead carry for the top bit. Expects p_k on b(k), g_k on g(k) and g_n
/// already on cout. Emits one gate per product term, all targeting cout:
/// g_k.p_{k+1}..p_n for k = n-1 down to 1, then C_0.p_1..p_n.
std::vector<Gate> c_module(std::size_t n, const RegisterLayout& layout);

/// Sum bit i: turns p_i on b(i) into S_i = p_i ^ C_{i-1}. Emits
/// g_k.p_{k+1}..p_{i-1} for k = i-1 down to 1, then C_0.p_1..p_{i-1}.
std::vector<Gate> s_module(std::size_t i, const RegisterLayout& layout);

/// Conventional plain adder: ripple carries, then uncompute them so that
/// c(1..n-1) end at zero. 8n-2 gates.
Circuit build_cqp(std::size_t n);

/// Plain adder without carry uncomputation. 4n gates; c(i) keeps C_i.
Circuit build_mqp(std::size_t n);

/// Carry-look-ahead adder: AND stage, XOR stage, C_n module, then S_i modules
/// for i = n down to 1. 3n + n(n+1)/2 gates; g(i) keeps a_i.b_i.
///
/// The S modules must run in descending order: S_i overwrites p_i on b(i),
/// which every higher module still reads.
Circuit build_qcla(std::size_t n);

Circuit build_adder(AdderKind kind, std::size_t n);

}  // namespace qadd
