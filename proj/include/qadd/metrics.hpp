#pragma once

/// @file metrics.hpp
/// @brief Gate counts, processing stages and the adder comparison table.
///
/// Two stage measures are kept apart on purpose. `asap_schedule` is a strict
/// wire-disjoint schedule of the emitted gate order. `paper_stage_count` is
/// the published closed-form convention (6n, n+3, n+2). They agree for CQP
/// and MQP; for QCLA the convention counts only the C_n module's critical
/// path and is lower than any valid schedule of the built circuit.

#include "qadd/circuit.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace qadd {

/// Gates grouped into time steps; gates in one stage touch disjoint wires.
struct Schedule {
    std::vector<std::vector<std::size_t>> stages;  ///< gate indices per stage, ascending

    std::size_t depth() const noexcept { return stages.size(); }
};

/// Places each gate one stage after the latest earlier gate sharing any of
/// its wires (controls included).
Schedule asap_schedule(const Circuit& circuit);

/// True iff every gate appears exactly once, stages are wire-disjoint and
/// gates sharing a wire keep their program order.
bool is_valid_schedule(const Circuit& circuit, const Schedule& schedule);

/// Emits the gates stage by stage.
Circuit flatten_schedule(const Circuit& circuit, const Schedule& schedule);

/// 6n (CQP), n+3 (MQP), n+2 (QCLA).
std::size_t paper_stage_count(AdderKind kind, std::size_t n);

/// 8n-2 (CQP), 4n (MQP), 4n + n(n-1)/2 (QCLA).
std::size_t closed_form_gates(AdderKind kind, std::size_t n);

struct MetricsReport {
    AdderKind kind{};
    std::size_t n = 0;
    std::size_t gate_count = 0;
    std::map<std::size_t, std::size_t> arity_histogram;  ///< control count -> gates
    std::size_t asap_depth = 0;
    std::size_t paper_stages = 0;
    std::size_t closed_form_gates = 0;
    std::size_t closed_form_stages = 0;

    bool gates_match() const noexcept { return gate_count == closed_form_gates; }
};

std::map<std::size_t, std::size_t> arity_histogram(const Circuit& circuit);

MetricsReport metrics(AdderKind kind, std::size_t n);

struct Table1Row {
    std::size_t n = 0;
    std::size_t qcla_stages = 0;
    std::size_t qcla_gates = 0;
    std::size_t cqp_stages = 0;
    std::size_t cqp_gates = 0;
    std::size_t mqp_stages = 0;
    std::size_t mqp_gates = 0;
    // Strict ASAP depth of the built circuits, reported next to the convention.
    std::size_t qcla_asap = 0;
    std::size_t cqp_asap = 0;
    std::size_t mqp_asap = 0;
    /// Built gate counts equal the closed forms for all three adders.
    bool matches_closed_form = true;
};

/// One row per n = 1..n_max. Gate columns come from the built circuits.
std::vector<Table1Row> table1(std::size_t n_max);

/// Replaces every gate with more than `max_arity` controls by a CCNOT ladder:
/// k controls become 2(k-2)+1 CCNOTs over k-2 clean ancillas, which are
/// appended after the existing wires and returned to 0. Gates within
/// `max_arity` are copied unchanged.
/// @throws CircuitError if max_arity < 2.
Circuit decompose_mcx(const Circuit& circuit, std::size_t max_arity = 2);

}  // namespace qadd
