#include "qadd/simulator.hpp"

#include "qadd/adders.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

namespace qadd {

namespace {

std::uint64_t bit(WireIndex wire) { return std::uint64_t{1} << wire; }

void check_width(std::size_t width) {
    if (width == 0 || width > kMaxSimulatedWidth) {
        throw SimulationError("simulated width must be in 1.." + std::to_string(kMaxSimulatedWidth) + ", got " +
                              std::to_string(width));
    }
}

std::uint64_t width_mask(std::size_t width) {
    return width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

}  // namespace

// ---------------------------------------------------------------------------
// BasisState

BasisState::BasisState(std::size_t width, std::uint64_t bits) : width_(width), bits_(bits) {
    check_width(width);
    if ((bits & ~width_mask(width)) != 0) throw SimulationError("basis state has bits set beyond its width");
}

BasisState BasisState::from_string(std::string_view bits) {
    BasisState state(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != '0' && bits[i] != '1') throw SimulationError("basis state string must contain only 0 and 1");
        state.set(static_cast<WireIndex>(i), bits[i] == '1');
    }
    return state;
}

bool BasisState::get(WireIndex wire) const {
    if (wire >= width_) throw SimulationError("wire " + std::to_string(wire) + " outside state width");
    return (bits_ >> wire) & 1U;
}

void BasisState::set(WireIndex wire, bool value) {
    if (wire >= width_) throw SimulationError("wire " + std::to_string(wire) + " outside state width");
    bits_ = value ? (bits_ | bit(wire)) : (bits_ & ~bit(wire));
}

std::string BasisState::to_string() const {
    std::string out(width_, '0');
    for (std::size_t i = 0; i < width_; ++i) {
        if ((bits_ >> i) & 1U) out[i] = '1';
    }
    return out;
}

// ---------------------------------------------------------------------------
// Gate application

BasisState apply_gate(const BasisState& state, const Gate& gate) {
    if (gate.max_wire() >= state.width()) {
        throw SimulationError("gate " + gate.to_string() + " does not fit a state of width " +
                              std::to_string(state.width()));
    }
    std::uint64_t controls = 0;
    for (WireIndex c : gate.controls()) controls |= bit(c);
    std::uint64_t bits = state.bits();
    if ((bits & controls) == controls) bits ^= bit(gate.target());
    return BasisState(state.width(), bits);
}

BasisState run(const Circuit& circuit, const BasisState& input) {
    if (input.width() != circuit.width()) {
        throw SimulationError("state width " + std::to_string(input.width()) + " does not match circuit width " +
                              std::to_string(circuit.width()));
    }
    BasisState state = input;
    for (const Gate& g : circuit) state = apply_gate(state, g);
    return state;
}

CompiledCircuit::CompiledCircuit(const Circuit& circuit) : width_(circuit.width()) {
    check_width(width_);
    ops_.reserve(circuit.size());
    for (const Gate& g : circuit) {
        std::uint64_t controls = 0;
        for (WireIndex c : g.controls()) controls |= bit(c);
        ops_.emplace_back(controls, bit(g.target()));
    }
}

// ---------------------------------------------------------------------------
// Adder encode / decode

std::uint64_t encode_adder_input(const RegisterLayout& layout, std::uint64_t a, std::uint64_t b, bool c0) {
    const std::size_t n = layout.n();
    if (n < 64 && (a >> n || b >> n)) {
        throw SimulationError("operand does not fit in " + std::to_string(n) + " bits (a=" + std::to_string(a) +
                              ", b=" + std::to_string(b) + ")");
    }
    std::uint64_t bits = c0 ? bit(layout.c0()) : 0;
    for (std::size_t i = 1; i <= n; ++i) {
        if ((a >> (i - 1)) & 1U) bits |= bit(layout.a(i));
        if ((b >> (i - 1)) & 1U) bits |= bit(layout.b(i));
    }
    return bits;
}

AdderResult decode_adder_output(const RegisterLayout& layout, std::uint64_t bits) {
    const auto on = [bits](WireIndex w) { return ((bits >> w) & 1U) != 0; };
    AdderResult r;
    for (std::size_t i = 1; i <= layout.n(); ++i) {
        if (on(layout.a(i))) r.operand_a |= std::uint64_t{1} << (i - 1);
        if (on(layout.b(i))) r.sum |= std::uint64_t{1} << (i - 1);
    }
    r.carry_out = on(layout.cout());
    r.c0 = on(layout.c0());
    r.ancilla.reserve(layout.n() - 1);
    for (std::size_t i = 1; i < layout.n(); ++i) r.ancilla.push_back(on(layout.ancilla(i)));
    return r;
}

AdderResult run_adder(const Circuit& circuit, std::uint64_t a, std::uint64_t b, bool c0) {
    if (!circuit.layout()) throw SimulationError("circuit '" + circuit.name() + "' has no adder layout");
    const auto& layout = *circuit.layout();
    const std::uint64_t in = encode_adder_input(layout, a, b, c0);
    return decode_adder_output(layout, CompiledCircuit(circuit).run(in));
}

AdderResult add(AdderKind kind, std::size_t n, std::uint64_t a, std::uint64_t b, bool c0) {
    return run_adder(build_adder(kind, n), a, b, c0);
}

// ---------------------------------------------------------------------------
// Verification

std::string check_adder_output(AdderKind kind, std::size_t n, std::uint64_t a, std::uint64_t b, bool c0,
                               const AdderResult& r) {
    const std::uint64_t total = a + b + (c0 ? 1 : 0);
    const std::uint64_t mask = width_mask(n);
    std::ostringstream why;
    if (r.sum != (total & mask)) {
        why << "sum " << r.sum << " != " << (total & mask);
    } else if (r.carry_out != ((total >> n) & 1U)) {
        why << "carry_out " << r.carry_out << " != " << ((total >> n) & 1U);
    } else if (r.operand_a != a) {
        why << "a-wires changed to " << r.operand_a;
    } else if (r.c0 != c0) {
        why << "c0 wire changed";
    } else {
        bool carry = c0;
        for (std::size_t i = 1; i < n; ++i) {
            const bool ai = (a >> (i - 1)) & 1U;
            const bool bi = (b >> (i - 1)) & 1U;
            carry = (ai && bi) || ((ai != bi) && carry);
            bool expected = false;
            switch (kind) {
                case AdderKind::CQP: expected = false; break;
                case AdderKind::MQP: expected = carry; break;
                case AdderKind::QCLA: expected = ai && bi; break;
            }
            if (r.ancilla[i - 1] != expected) {
                why << "ancilla " << (kind == AdderKind::QCLA ? "g" : "c") << i << " = " << r.ancilla[i - 1]
                    << ", expected " << expected;
                break;
            }
        }
    }
    return why.str();
}

namespace {

struct Tally {
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::vector<Counterexample> counterexamples;
};

VerificationReport sweep(const Circuit& circuit, const VerifyLimits& limits) {
    const auto& layout = *circuit.layout();
    const AdderKind kind = layout.kind();
    const std::size_t n = layout.n();
    if (n > limits.max_adder_n) {
        throw SimulationError("exhaustive verification limited to n <= " + std::to_string(limits.max_adder_n) +
                              ", got n=" + std::to_string(n));
    }
    const CompiledCircuit compiled(circuit);
    std::uint64_t layout_mask = 0;
    for (const auto& [role, wire] : layout.roles()) layout_mask |= bit(wire);

    const std::uint64_t operands = std::uint64_t{1} << n;
    std::size_t workers = limits.workers == 0 ? std::max(1U, std::thread::hardware_concurrency()) : limits.workers;
    workers = std::min<std::size_t>(workers, operands);

    // Each worker owns a strided slice of `a` values and its own tally.
    std::vector<Tally> tallies(workers);
    auto work = [&](std::size_t id) {
        Tally& t = tallies[id];
        for (std::uint64_t a = id; a < operands; a += workers) {
            for (std::uint64_t b = 0; b < operands; ++b) {
                for (bool c0 : {false, true}) {
                    ++t.cases;
                    const std::uint64_t out = compiled.run(encode_adder_input(layout, a, b, c0));
                    std::string why;
                    if (out & ~layout_mask) {
                        why = "scratch wires not restored to 0";
                    } else {
                        why = check_adder_output(kind, n, a, b, c0, decode_adder_output(layout, out));
                    }
                    if (!why.empty()) {
                        ++t.failures;
                        if (t.counterexamples.size() < limits.max_counterexamples) {
                            t.counterexamples.push_back({a, b, c0, std::move(why)});
                        } else {
                            return;
                        }
                    }
                }
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t id = 0; id < workers; ++id) pool.emplace_back(work, id);
    }

    VerificationReport report{kind, n, 0, 0, {}};
    for (auto& t : tallies) {
        report.cases += t.cases;
        report.failures += t.failures;
        for (auto& ce : t.counterexamples) {
            if (report.counterexamples.size() < limits.max_counterexamples) report.counterexamples.push_back(std::move(ce));
        }
    }
    return report;
}

}  // namespace

VerificationReport exhaustive_verify(AdderKind kind, std::size_t n, const VerifyLimits& limits) {
    if (n > limits.max_adder_n) {
        throw SimulationError("exhaustive verification limited to n <= " + std::to_string(limits.max_adder_n) +
                              ", got n=" + std::to_string(n));
    }
    return sweep(build_adder(kind, n), limits);
}

VerificationReport exhaustive_verify_circuit(const Circuit& circuit, const VerifyLimits& limits) {
    if (!circuit.layout()) throw SimulationError("circuit '" + circuit.name() + "' has no adder layout");
    return sweep(circuit, limits);
}

bool permutation_check(const Circuit& circuit, std::size_t max_width) {
    if (circuit.width() > max_width) {
        throw SimulationError("permutation check limited to width <= " + std::to_string(max_width) + ", got " +
                              std::to_string(circuit.width()));
    }
    const CompiledCircuit compiled(circuit);
    const std::uint64_t states = std::uint64_t{1} << circuit.width();
    std::vector<bool> hit(states, false);
    for (std::uint64_t x = 0; x < states; ++x) {
        const std::uint64_t y = compiled.run(x);
        if (y >= states || hit[y]) return false;
        hit[y] = true;
    }
    return true;
}

}  // namespace qadd
