#pragma once

/// @file simulator.hpp
/// @brief Exact basis-state simulation and exhaustive adder verification.
///
/// Every gate in the IR permutes classical bit strings, so a basis state is a
/// machine word and a gate is mask-and-flip. Widths up to 64 wires.

#include "qadd/circuit.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace qadd {

class SimulationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kMaxSimulatedWidth = 64;

/// Fixed-length bit vector; bit i is wire i.
class BasisState {
  public:
    explicit BasisState(std::size_t width, std::uint64_t bits = 0);

    /// Parses a string such as "1101" where character i is wire i.
    static BasisState from_string(std::string_view bits);

    std::size_t width() const noexcept { return width_; }
    std::uint64_t bits() const noexcept { return bits_; }
    bool get(WireIndex wire) const;
    void set(WireIndex wire, bool value);

    /// Character i is wire i.
    std::string to_string() const;

    friend bool operator==(const BasisState&, const BasisState&) = default;

  private:
    std::size_t width_;
    std::uint64_t bits_;
};

/// Flips the target iff every control is 1.
BasisState apply_gate(const BasisState& state, const Gate& gate);

/// Left fold of apply_gate over the circuit in program order.
BasisState run(const Circuit& circuit, const BasisState& input);

/// A circuit lowered to (control mask, target mask) pairs for tight loops.
class CompiledCircuit {
  public:
    explicit CompiledCircuit(const Circuit& circuit);

    std::uint64_t run(std::uint64_t bits) const noexcept {
        for (const auto& [controls, target] : ops_) {
            if ((bits & controls) == controls) bits ^= target;
        }
        return bits;
    }

    std::size_t width() const noexcept { return width_; }

  private:
    std::size_t width_;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ops_;
};

struct AdderResult {
    std::uint64_t sum = 0;        ///< b-wires after the run, little-endian
    bool carry_out = false;       ///< cout wire
    std::uint64_t operand_a = 0;  ///< a-wires after the run
    bool c0 = false;              ///< c0 wire after the run
    std::vector<bool> ancilla;    ///< internal c(i)/g(i) wires, i = 1..n-1
};

/// Places a, b and c0 on a layout's wires; every other wire is 0.
std::uint64_t encode_adder_input(const RegisterLayout& layout, std::uint64_t a, std::uint64_t b, bool c0);

AdderResult decode_adder_output(const RegisterLayout& layout, std::uint64_t bits);

/// Runs the adder of the given kind on (a, b, c0).
/// @throws SimulationError if a or b does not fit in n bits.
AdderResult add(AdderKind kind, std::size_t n, std::uint64_t a, std::uint64_t b, bool c0 = false);

/// Runs any circuit carrying an adder layout.
AdderResult run_adder(const Circuit& circuit, std::uint64_t a, std::uint64_t b, bool c0 = false);

struct VerifyLimits {
    std::size_t max_adder_n = 8;
    std::size_t max_permutation_width = 16;
    std::size_t max_counterexamples = 10;
    /// Worker threads for exhaustive sweeps; 0 picks hardware concurrency.
    std::size_t workers = 1;
};

struct Counterexample {
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    bool c0 = false;
    std::string reason;
};

struct VerificationReport {
    AdderKind kind{};
    std::size_t n = 0;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::vector<Counterexample> counterexamples;  ///< first few failures only

    bool ok() const noexcept { return failures == 0; }
};

/// Checks one adder output against host arithmetic and the kind's ancilla
/// contract. Returns an empty string on success, otherwise the first violation.
std::string check_adder_output(AdderKind kind, std::size_t n, std::uint64_t a, std::uint64_t b, bool c0,
                               const AdderResult& result);

/// Sweeps every (a, b, c0) for the adder built by `kind`.
/// @throws SimulationError if n exceeds limits.max_adder_n.
VerificationReport exhaustive_verify(AdderKind kind, std::size_t n, const VerifyLimits& limits = {});

/// Same sweep on an arbitrary circuit with an adder layout (e.g. after decomposition).
/// Wires beyond the layout must start and end at 0.
VerificationReport exhaustive_verify_circuit(const Circuit& circuit, const VerifyLimits& limits = {});

/// True iff the circuit maps the 2^width basis states bijectively onto themselves.
/// @throws SimulationError if width exceeds `max_width`.
bool permutation_check(const Circuit& circuit, std::size_t max_width = 16);

}  // namespace qadd
