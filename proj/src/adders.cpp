#include "qadd/adders.hpp"

#include <set>
#include <string>

namespace qadd {

namespace {

void require_distinct(std::initializer_list<WireIndex> wires, const char* block) {
    if (std::set<WireIndex>(wires).size() != wires.size()) {
        throw CircuitError(std::string(block) + " requires distinct wires");
    }
}

void require_qcla(const RegisterLayout& layout, const char* block) {
    if (layout.kind() != AdderKind::QCLA) {
        throw CircuitError(std::string(block) + " needs a QCLA layout, got " + std::string(to_string(layout.kind())));
    }
}

void require_positive(std::size_t n) {
    if (n == 0) throw CircuitError("adder width n must be >= 1");
}

std::string circuit_name(AdderKind kind, std::size_t n) {
    std::string name(to_string(kind));
    for (char& ch : name) ch = static_cast<char>(ch - 'A' + 'a');
    return name + std::to_string(n);
}

/// One look-ahead term on `target`: controls are `head` plus p-wires b(from..to).
Gate term(const RegisterLayout& layout, WireIndex head, std::size_t from, std::size_t to, WireIndex target) {
    std::vector<WireIndex> controls{head};
    for (std::size_t j = from; j <= to; ++j) controls.push_back(layout.b(j));
    return Gate(std::move(controls), target);
}

void append(std::vector<Gate>& out, const std::vector<Gate>& more) { out.insert(out.end(), more.begin(), more.end()); }

}  // namespace

std::vector<Gate> carry_gate(WireIndex c_in, WireIndex a, WireIndex b, WireIndex c_out) {
    require_distinct({c_in, a, b, c_out}, "carry gate");
    return {Gate::ccnot(a, b, c_out), Gate::cnot(a, b), Gate::ccnot(c_in, b, c_out)};
}

std::vector<Gate> sum_gate(WireIndex c_in, WireIndex a, WireIndex b) {
    require_distinct({c_in, a, b}, "sum gate");
    return {Gate::cnot(a, b), Gate::cnot(c_in, b)};
}

std::vector<Gate> and_gate(WireIndex a, WireIndex b, WireIndex anc) {
    require_distinct({a, b, anc}, "AND gate");
    return {Gate::ccnot(a, b, anc)};
}

std::vector<Gate> xor_gate(WireIndex a, WireIndex b) {
    require_distinct({a, b}, "XOR gate");
    return {Gate::cnot(a, b)};
}

std::vector<Gate> c_module(std::size_t n, const RegisterLayout& layout) {
    require_qcla(layout, "C module");
    if (n != layout.n()) {
        throw CircuitError("C module for n=" + std::to_string(n) + " on a layout with n=" + std::to_string(layout.n()));
    }
    std::vector<Gate> gates;
    gates.reserve(n);
    for (std::size_t k = n - 1; k >= 1; --k) gates.push_back(term(layout, layout.generate(k), k + 1, n, layout.cout()));
    gates.push_back(term(layout, layout.c0(), 1, n, layout.cout()));
    return gates;
}

std::vector<Gate> s_module(std::size_t i, const RegisterLayout& layout) {
    require_qcla(layout, "S module");
    if (i < 1 || i > layout.n()) {
        throw CircuitError("S module index " + std::to_string(i) + " outside 1.." + std::to_string(layout.n()));
    }
    std::vector<Gate> gates;
    gates.reserve(i);
    for (std::size_t k = i - 1; k >= 1; --k) gates.push_back(term(layout, layout.generate(k), k + 1, i - 1, layout.b(i)));
    gates.push_back(term(layout, layout.c0(), 1, i - 1, layout.b(i)));
    return gates;
}

Circuit build_cqp(std::size_t n) {
    require_positive(n);
    const auto layout = RegisterLayout::canonical(AdderKind::CQP, n);
    std::vector<Gate> gates;
    gates.reserve(8 * n - 2);
    for (std::size_t i = 1; i <= n; ++i) {
        append(gates, carry_gate(layout.carry(i - 1), layout.a(i), layout.b(i), layout.carry(i)));
    }
    gates.push_back(Gate::cnot(layout.a(n), layout.b(n)));
    append(gates, sum_gate(layout.carry(n - 1), layout.a(n), layout.b(n)));
    for (std::size_t i = n - 1; i >= 1; --i) {
        append(gates, reversed(carry_gate(layout.carry(i - 1), layout.a(i), layout.b(i), layout.carry(i))));
        append(gates, sum_gate(layout.carry(i - 1), layout.a(i), layout.b(i)));
    }
    return Circuit(3 * n + 1, circuit_name(AdderKind::CQP, n), layout, std::move(gates));
}

Circuit build_mqp(std::size_t n) {
    require_positive(n);
    const auto layout = RegisterLayout::canonical(AdderKind::MQP, n);
    std::vector<Gate> gates;
    gates.reserve(4 * n);
    for (std::size_t i = 1; i <= n; ++i) {
        append(gates, carry_gate(layout.carry(i - 1), layout.a(i), layout.b(i), layout.carry(i)));
    }
    for (std::size_t i = 1; i <= n; ++i) gates.push_back(Gate::cnot(layout.carry(i - 1), layout.b(i)));
    return Circuit(3 * n + 1, circuit_name(AdderKind::MQP, n), layout, std::move(gates));
}

Circuit build_qcla(std::size_t n) {
    require_positive(n);
    const auto layout = RegisterLayout::canonical(AdderKind::QCLA, n);
    std::vector<Gate> gates;
    gates.reserve(3 * n + n * (n + 1) / 2);
    // g_n lands directly on cout; the C module then adds the remaining terms.
    for (std::size_t i = 1; i < n; ++i) append(gates, and_gate(layout.a(i), layout.b(i), layout.generate(i)));
    append(gates, and_gate(layout.a(n), layout.b(n), layout.cout()));
    for (std::size_t i = 1; i <= n; ++i) append(gates, xor_gate(layout.a(i), layout.b(i)));
    append(gates, c_module(n, layout));
    for (std::size_t i = n; i >= 1; --i) append(gates, s_module(i, layout));
    return Circuit(3 * n + 1, circuit_name(AdderKind::QCLA, n), layout, std::move(gates));
}

Circuit build_adder(AdderKind kind, std::size_t n) {
    switch (kind) {
        case AdderKind::CQP: return build_cqp(n);
        case AdderKind::MQP: return build_mqp(n);
        case AdderKind::QCLA: return build_qcla(n);
    }
    throw CircuitError("unknown adder kind");
}

}  // namespace qadd
