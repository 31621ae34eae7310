#include "qadd/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace qadd {

std::string_view to_string(AdderKind kind) {
    switch (kind) {
        case AdderKind::CQP: return "CQP";
        case AdderKind::MQP: return "MQP";
        case AdderKind::QCLA: return "QCLA";
    }
    return "?";
}

std::optional<AdderKind> parse_adder_kind(std::string_view text) {
    std::string upper(text);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
    for (AdderKind kind : kAllAdderKinds) {
        if (upper == to_string(kind)) return kind;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Gate

Gate::Gate(std::vector<WireIndex> controls, WireIndex target) : controls_(std::move(controls)), target_(target) {
    std::sort(controls_.begin(), controls_.end());
    if (std::adjacent_find(controls_.begin(), controls_.end()) != controls_.end()) {
        throw CircuitError("gate has duplicate control wire " +
                           std::to_string(*std::adjacent_find(controls_.begin(), controls_.end())));
    }
    if (std::binary_search(controls_.begin(), controls_.end(), target_)) {
        throw CircuitError("gate target " + std::to_string(target_) + " is also a control");
    }
}

WireIndex Gate::max_wire() const noexcept {
    return controls_.empty() ? target_ : std::max(controls_.back(), target_);
}

std::vector<WireIndex> Gate::wires() const {
    std::vector<WireIndex> out(controls_);
    out.push_back(target_);
    return out;
}

bool Gate::touches(WireIndex wire) const noexcept {
    return wire == target_ || std::binary_search(controls_.begin(), controls_.end(), wire);
}

std::string Gate::to_string() const {
    std::ostringstream os;
    switch (arity()) {
        case 0: os << "x"; break;
        case 1: os << "cx"; break;
        case 2: os << "ccx"; break;
        default: os << "c" << arity() << "x"; break;
    }
    os << "[";
    for (std::size_t i = 0; i < controls_.size(); ++i) {
        if (i) os << ",";
        os << controls_[i];
    }
    os << "->" << target_ << "]";
    return os.str();
}

// ---------------------------------------------------------------------------
// RegisterLayout

RegisterLayout::RegisterLayout(AdderKind kind, std::size_t n, std::vector<WireIndex> a, std::vector<WireIndex> b,
                               std::vector<WireIndex> ancilla, WireIndex c0, WireIndex cout)
    : kind_(kind), n_(n), a_(std::move(a)), b_(std::move(b)), ancilla_(std::move(ancilla)), c0_(c0), cout_(cout) {
    if (n_ == 0) throw CircuitError("layout operand width must be positive");
    if (a_.size() != n_ || b_.size() != n_ || ancilla_.size() != n_ - 1) {
        throw CircuitError("layout role counts do not match n=" + std::to_string(n_));
    }
    std::set<WireIndex> seen;
    auto claim = [&](WireIndex w) {
        if (!seen.insert(w).second) throw CircuitError("layout maps two roles to wire " + std::to_string(w));
    };
    for (WireIndex w : a_) claim(w);
    for (WireIndex w : b_) claim(w);
    for (WireIndex w : ancilla_) claim(w);
    claim(c0_);
    claim(cout_);
}

RegisterLayout RegisterLayout::canonical(AdderKind kind, std::size_t n) {
    if (n == 0) throw CircuitError("adder width n must be >= 1");
    std::vector<WireIndex> a(n), b(n), anc(n - 1);
    const auto w = [](std::size_t v) { return static_cast<WireIndex>(v); };
    if (kind == AdderKind::QCLA) {
        for (std::size_t i = 1; i <= n; ++i) {
            a[i - 1] = w(2 * i - 1);
            b[i - 1] = w(2 * i);
        }
        for (std::size_t i = 1; i < n; ++i) anc[i - 1] = w(2 * n + i);
        return RegisterLayout(kind, n, std::move(a), std::move(b), std::move(anc), 0, w(3 * n));
    }
    for (std::size_t i = 1; i <= n; ++i) {
        a[i - 1] = w(3 * i - 2);
        b[i - 1] = w(3 * i - 1);
        if (i < n) anc[i - 1] = w(3 * i);
    }
    return RegisterLayout(kind, n, std::move(a), std::move(b), std::move(anc), 0, w(3 * n));
}

namespace {

char ancilla_prefix(AdderKind kind) { return kind == AdderKind::QCLA ? 'g' : 'c'; }

void check_role_index(std::size_t i, std::size_t lo, std::size_t hi, const char* role) {
    if (i < lo || i > hi) {
        throw CircuitError(std::string("role ") + role + "(" + std::to_string(i) + ") out of range [" +
                           std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
}

}  // namespace

RegisterLayout RegisterLayout::from_roles(AdderKind kind, std::size_t n,
                                          std::span<const std::pair<std::string, WireIndex>> roles) {
    if (n == 0) throw CircuitError("layout operand width must be positive");
    std::map<std::string, WireIndex> by_name;
    for (const auto& [name, wire] : roles) {
        if (!by_name.emplace(name, wire).second) throw CircuitError("layout role '" + name + "' given twice");
    }
    if (by_name.size() != 3 * n + 1) {
        throw CircuitError("layout has " + std::to_string(by_name.size()) + " roles, expected " +
                           std::to_string(3 * n + 1));
    }
    auto take = [&](const std::string& name) {
        auto it = by_name.find(name);
        if (it == by_name.end()) throw CircuitError("layout is missing role '" + name + "'");
        return it->second;
    };
    std::vector<WireIndex> a, b, anc;
    for (std::size_t i = 1; i <= n; ++i) {
        a.push_back(take("a" + std::to_string(i)));
        b.push_back(take("b" + std::to_string(i)));
        if (i < n) anc.push_back(take(ancilla_prefix(kind) + std::to_string(i)));
    }
    return RegisterLayout(kind, n, std::move(a), std::move(b), std::move(anc), take("c0"), take("cout"));
}

WireIndex RegisterLayout::a(std::size_t i) const {
    check_role_index(i, 1, n_, "a");
    return a_[i - 1];
}

WireIndex RegisterLayout::b(std::size_t i) const {
    check_role_index(i, 1, n_, "b");
    return b_[i - 1];
}

WireIndex RegisterLayout::ancilla(std::size_t i) const {
    check_role_index(i, 1, n_ - 1, "ancilla");
    return ancilla_[i - 1];
}

WireIndex RegisterLayout::carry(std::size_t i) const {
    if (kind_ == AdderKind::QCLA) throw CircuitError("QCLA layout has no ripple-carry wires");
    check_role_index(i, 0, n_, "c");
    if (i == 0) return c0_;
    if (i == n_) return cout_;
    return ancilla_[i - 1];
}

WireIndex RegisterLayout::generate(std::size_t i) const {
    if (kind_ != AdderKind::QCLA) throw CircuitError("only QCLA layouts have generate wires");
    check_role_index(i, 1, n_ - 1, "g");
    return ancilla_[i - 1];
}

WireIndex RegisterLayout::max_wire() const noexcept {
    WireIndex m = std::max(c0_, cout_);
    for (const auto* v : {&a_, &b_, &ancilla_}) {
        for (WireIndex w : *v) m = std::max(m, w);
    }
    return m;
}

std::vector<std::pair<std::string, WireIndex>> RegisterLayout::roles() const {
    std::vector<std::pair<std::string, WireIndex>> out;
    out.reserve(wire_count());
    out.emplace_back("c0", c0_);
    for (std::size_t i = 1; i <= n_; ++i) {
        out.emplace_back("a" + std::to_string(i), a_[i - 1]);
        out.emplace_back("b" + std::to_string(i), b_[i - 1]);
    }
    for (std::size_t i = 1; i < n_; ++i) out.emplace_back(ancilla_prefix(kind_) + std::to_string(i), ancilla_[i - 1]);
    out.emplace_back("cout", cout_);
    return out;
}

// ---------------------------------------------------------------------------
// Circuit

namespace {

void check_gate_fits(const Gate& gate, std::size_t width) {
    if (gate.max_wire() >= width) {
        throw CircuitError("gate " + gate.to_string() + " touches wire " + std::to_string(gate.max_wire()) +
                           " outside width " + std::to_string(width));
    }
}

}  // namespace

Circuit::Circuit(std::size_t width, std::string name, std::optional<RegisterLayout> layout, std::vector<Gate> gates)
    : width_(width), name_(std::move(name)), layout_(std::move(layout)), gates_(std::move(gates)) {
    if (width_ == 0) throw CircuitError("circuit width must be >= 1");
    if (layout_ && layout_->max_wire() >= width_) {
        throw CircuitError("layout wire " + std::to_string(layout_->max_wire()) + " outside width " +
                           std::to_string(width_));
    }
    for (const Gate& g : gates_) check_gate_fits(g, width_);
}

Circuit Circuit::with_gate(const Gate& gate) const {
    check_gate_fits(gate, width_);
    Circuit out(*this);
    out.gates_.push_back(gate);
    return out;
}

Circuit Circuit::with_gates(std::span<const Gate> gates) const {
    for (const Gate& g : gates) check_gate_fits(g, width_);
    Circuit out(*this);
    out.gates_.insert(out.gates_.end(), gates.begin(), gates.end());
    return out;
}

Circuit Circuit::renamed(std::string name) const {
    Circuit out(*this);
    out.name_ = std::move(name);
    return out;
}

Circuit new_circuit(std::size_t width, std::string name, std::optional<RegisterLayout> layout) {
    return Circuit(width, std::move(name), std::move(layout));
}

Circuit append_gate(const Circuit& circuit, std::vector<WireIndex> controls, WireIndex target) {
    return circuit.with_gate(Gate(std::move(controls), target));
}

std::vector<Gate> reversed(std::span<const Gate> gates) { return {gates.rbegin(), gates.rend()}; }

Circuit reverse_circuit(const Circuit& circuit) {
    return Circuit(circuit.width(), circuit.name(), circuit.layout(), reversed(circuit.gates()));
}

Circuit concat(const Circuit& first, const Circuit& second) {
    if (first.width() != second.width()) {
        throw CircuitError("cannot concatenate circuits of width " + std::to_string(first.width()) + " and " +
                           std::to_string(second.width()));
    }
    std::vector<Gate> gates(first.gates());
    gates.insert(gates.end(), second.gates().begin(), second.gates().end());
    return Circuit(first.width(), first.name(), first.layout() ? first.layout() : second.layout(), std::move(gates));
}

}  // namespace qadd
