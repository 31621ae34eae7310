#pragma once

/// @file qasm_io.hpp
/// @brief OpenQASM 3.0 export and the JSON circuit document.

#include "qadd/circuit.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qadd {

/// Raised when a circuit document is malformed. The message names the
/// offending location, e.g. "gates[3].controls: duplicate control 1".
class DocumentError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

inline constexpr const char* kDocumentFormatVersion = "1.0";

/// OpenQASM 3.0 text. One `qubit[width] q;` register; gates map to
/// `x`, `cx`, `ccx` and `ctrl(k) @ x` with controls ascending, target last.
std::string export_qasm(const Circuit& circuit);

struct GateRecord {
    std::vector<WireIndex> controls;
    WireIndex target = 0;

    friend bool operator==(const GateRecord&, const GateRecord&) = default;
};

struct LayoutRecord {
    AdderKind kind{};
    std::size_t n = 0;
    std::vector<std::pair<std::string, WireIndex>> roles;

    friend bool operator==(const LayoutRecord&, const LayoutRecord&) = default;
};

/// Flat, serializable view of a Circuit.
struct CircuitDocument {
    std::string format_version = kDocumentFormatVersion;
    std::string name;
    std::size_t width = 0;
    std::optional<LayoutRecord> layout;
    std::vector<GateRecord> gates;

    friend bool operator==(const CircuitDocument&, const CircuitDocument&) = default;
};

CircuitDocument export_document(const Circuit& circuit);

/// @throws DocumentError with a positional message on any invalid gate or layout.
Circuit parse_document(const CircuitDocument& doc);

/// Pretty-printed JSON; identical circuits give identical bytes.
std::string document_to_json(const CircuitDocument& doc);

/// @throws DocumentError on malformed JSON or wrong field types.
CircuitDocument document_from_json(const std::string& text);

}  // namespace qadd
