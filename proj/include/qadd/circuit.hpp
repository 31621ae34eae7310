#pragma once

/// @file circuit.hpp
/// @brief Reversible-circuit IR: multi-controlled-NOT gates, register layouts and circuits.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qadd {

using WireIndex = std::uint32_t;

/// Raised for any structural violation: bad gate, bad layout, bad width.
class CircuitError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

enum class AdderKind { CQP, MQP, QCLA };

inline constexpr AdderKind kAllAdderKinds[] = {AdderKind::QCLA, AdderKind::CQP, AdderKind::MQP};

/// Upper-case name ("CQP", "MQP", "QCLA").
std::string_view to_string(AdderKind kind);

/// Case-insensitive parse; std::nullopt for unknown names.
std::optional<AdderKind> parse_adder_kind(std::string_view text);

/// A NOT on `target` conditioned on every wire in `controls` being 1.
///
/// Controls are stored sorted ascending; the order they are given in is
/// irrelevant. Zero controls is a plain X.
class Gate {
  public:
    /// @throws CircuitError on duplicate controls or a target among the controls.
    Gate(std::vector<WireIndex> controls, WireIndex target);

    static Gate x(WireIndex target) { return Gate({}, target); }
    static Gate cnot(WireIndex control, WireIndex target) { return Gate({control}, target); }
    static Gate ccnot(WireIndex c1, WireIndex c2, WireIndex target) { return Gate({c1, c2}, target); }

    const std::vector<WireIndex>& controls() const noexcept { return controls_; }
    WireIndex target() const noexcept { return target_; }
    std::size_t arity() const noexcept { return controls_.size(); }

    /// Largest wire index the gate touches.
    WireIndex max_wire() const noexcept;

    /// Controls followed by the target.
    std::vector<WireIndex> wires() const;

    bool touches(WireIndex wire) const noexcept;

    friend bool operator==(const Gate&, const Gate&) = default;

    /// e.g. "ccx[1,2->3]"
    std::string to_string() const;

  private:
    std::vector<WireIndex> controls_;
    WireIndex target_;
};

/// Assignment of adder roles to wires.
///
/// Roles are a(1..n), b(1..n), c0, cout, plus n-1 internal ancillas: the
/// temporary carries c(1..n-1) for CQP/MQP or the generate bits g(1..n-1) for
/// QCLA. The map is injective and covers 3n+1 wires.
class RegisterLayout {
  public:
    /// @throws CircuitError when the role vectors have the wrong sizes or reuse a wire.
    RegisterLayout(AdderKind kind, std::size_t n, std::vector<WireIndex> a, std::vector<WireIndex> b,
                   std::vector<WireIndex> ancilla, WireIndex c0, WireIndex cout);

    /// The fixed layouts used by the adder builders.
    ///
    /// CQP/MQP: c0 at 0, then (a_i, b_i, c_i) at 3i-2, 3i-1, 3i; c_n is cout.
    /// QCLA: c0 at 0, (a_i, b_i) at 2i-1, 2i, g(1..n-1) at 2n+1..3n-1, cout at 3n.
    static RegisterLayout canonical(AdderKind kind, std::size_t n);

    /// Builds a layout from role names ("a1", "b3", "c2", "g1", "c0", "cout").
    /// @throws CircuitError on unknown, missing or duplicated roles.
    static RegisterLayout from_roles(AdderKind kind, std::size_t n,
                                     std::span<const std::pair<std::string, WireIndex>> roles);

    AdderKind kind() const noexcept { return kind_; }
    std::size_t n() const noexcept { return n_; }

    // 1-based role accessors; they throw CircuitError for indices out of range.
    WireIndex a(std::size_t i) const;
    WireIndex b(std::size_t i) const;
    /// Internal ancilla i in 1..n-1 (c_i or g_i depending on kind).
    WireIndex ancilla(std::size_t i) const;
    /// Ripple carry C_i for CQP/MQP: c0 for i=0, cout for i=n.
    WireIndex carry(std::size_t i) const;
    /// Generate ancilla g_i for QCLA, i in 1..n-1.
    WireIndex generate(std::size_t i) const;
    WireIndex c0() const noexcept { return c0_; }
    WireIndex cout() const noexcept { return cout_; }

    std::size_t wire_count() const noexcept { return 3 * n_ + 1; }
    WireIndex max_wire() const noexcept;

    /// Role name to wire, in a stable order: c0, a1, b1, ..., ancillas, cout.
    std::vector<std::pair<std::string, WireIndex>> roles() const;

    friend bool operator==(const RegisterLayout&, const RegisterLayout&) = default;

  private:
    AdderKind kind_;
    std::size_t n_;
    std::vector<WireIndex> a_;
    std::vector<WireIndex> b_;
    std::vector<WireIndex> ancilla_;
    WireIndex c0_;
    WireIndex cout_;
};

/// An immutable, validated gate list over a fixed-width register.
class Circuit {
  public:
    /// @throws CircuitError for zero width, a layout that does not fit, or a
    /// gate touching a wire >= width.
    Circuit(std::size_t width, std::string name, std::optional<RegisterLayout> layout = std::nullopt,
            std::vector<Gate> gates = {});

    const std::string& name() const noexcept { return name_; }
    std::size_t width() const noexcept { return width_; }
    const std::optional<RegisterLayout>& layout() const noexcept { return layout_; }
    const std::vector<Gate>& gates() const noexcept { return gates_; }
    std::size_t size() const noexcept { return gates_.size(); }
    bool empty() const noexcept { return gates_.empty(); }

    auto begin() const noexcept { return gates_.begin(); }
    auto end() const noexcept { return gates_.end(); }

    Circuit with_gate(const Gate& gate) const;
    Circuit with_gates(std::span<const Gate> gates) const;
    Circuit renamed(std::string name) const;

    friend bool operator==(const Circuit&, const Circuit&) = default;

  private:
    std::size_t width_;
    std::string name_;
    std::optional<RegisterLayout> layout_;
    std::vector<Gate> gates_;
};

Circuit new_circuit(std::size_t width, std::string name, std::optional<RegisterLayout> layout = std::nullopt);

/// Returns `circuit` extended by one validated gate.
Circuit append_gate(const Circuit& circuit, std::vector<WireIndex> controls, WireIndex target);

/// Gates in reverse order. Every gate is self-inverse, so this is the inverse circuit.
Circuit reverse_circuit(const Circuit& circuit);

/// Reverses a bare gate sequence.
std::vector<Gate> reversed(std::span<const Gate> gates);

/// `first` then `second`; name from `first`, layout from `first` when it has one.
/// @throws CircuitError on width mismatch.
Circuit concat(const Circuit& first, const Circuit& second);

}  // namespace qadd
