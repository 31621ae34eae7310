#include "qadd/qasm_io.hpp"

#include <json.hpp>

#include <set>
#include <sstream>

namespace qadd {

using nlohmann::ordered_json;

std::string export_qasm(const Circuit& circuit) {
    std::ostringstream os;
    os << "OPENQASM 3.0;\n"
       << "include \"stdgates.inc\";\n"
       << "// " << circuit.name() << "\n"
       << "qubit[" << circuit.width() << "] q;\n";
    for (const Gate& g : circuit) {
        switch (g.arity()) {
            case 0: os << "x "; break;
            case 1: os << "cx "; break;
            case 2: os << "ccx "; break;
            default: os << "ctrl(" << g.arity() << ") @ x "; break;
        }
        for (WireIndex c : g.controls()) os << "q[" << c << "], ";
        os << "q[" << g.target() << "];\n";
    }
    return os.str();
}

CircuitDocument export_document(const Circuit& circuit) {
    CircuitDocument doc;
    doc.name = circuit.name();
    doc.width = circuit.width();
    if (const auto& layout = circuit.layout()) {
        doc.layout = LayoutRecord{layout->kind(), layout->n(), layout->roles()};
    }
    doc.gates.reserve(circuit.size());
    for (const Gate& g : circuit) doc.gates.push_back({g.controls(), g.target()});
    return doc;
}

Circuit parse_document(const CircuitDocument& doc) {
    if (doc.format_version != kDocumentFormatVersion) {
        throw DocumentError("format_version: unsupported version '" + doc.format_version + "'");
    }
    if (doc.width == 0) throw DocumentError("width: must be >= 1");

    std::optional<RegisterLayout> layout;
    if (doc.layout) {
        try {
            layout = RegisterLayout::from_roles(doc.layout->kind, doc.layout->n, doc.layout->roles);
        } catch (const CircuitError& e) {
            throw DocumentError(std::string("layout: ") + e.what());
        }
        if (layout->max_wire() >= doc.width) {
            throw DocumentError("layout: wire " + std::to_string(layout->max_wire()) + " outside width " +
                                std::to_string(doc.width));
        }
    }

    std::vector<Gate> gates;
    gates.reserve(doc.gates.size());
    for (std::size_t i = 0; i < doc.gates.size(); ++i) {
        const auto& rec = doc.gates[i];
        const std::string where = "gates[" + std::to_string(i) + "]";
        std::set<WireIndex> seen;
        for (WireIndex c : rec.controls) {
            if (c >= doc.width) {
                throw DocumentError(where + ".controls: wire " + std::to_string(c) + " outside width " +
                                    std::to_string(doc.width));
            }
            if (!seen.insert(c).second) throw DocumentError(where + ".controls: duplicate control " + std::to_string(c));
        }
        if (rec.target >= doc.width) {
            throw DocumentError(where + ".target: wire " + std::to_string(rec.target) + " outside width " +
                                std::to_string(doc.width));
        }
        if (seen.contains(rec.target)) {
            throw DocumentError(where + ".target: wire " + std::to_string(rec.target) + " is also a control");
        }
        gates.emplace_back(rec.controls, rec.target);
    }
    return Circuit(doc.width, doc.name, std::move(layout), std::move(gates));
}

std::string document_to_json(const CircuitDocument& doc) {
    ordered_json j;
    j["format_version"] = doc.format_version;
    j["name"] = doc.name;
    j["width"] = doc.width;
    if (doc.layout) {
        ordered_json roles = ordered_json::object();
        for (const auto& [role, wire] : doc.layout->roles) roles[role] = wire;
        j["layout"] = {{"kind", to_string(doc.layout->kind)}, {"n", doc.layout->n}, {"roles", roles}};
    } else {
        j["layout"] = nullptr;
    }
    ordered_json gates = ordered_json::array();
    for (const auto& g : doc.gates) gates.push_back({{"controls", g.controls}, {"target", g.target}});
    j["gates"] = std::move(gates);
    return j.dump(2) + "\n";
}

CircuitDocument document_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw DocumentError(std::string("invalid JSON: ") + e.what());
    }
    std::string field;
    try {
        CircuitDocument doc;
        field = "format_version";
        doc.format_version = j.at(field).get<std::string>();
        field = "name";
        doc.name = j.at(field).get<std::string>();
        field = "width";
        doc.width = j.at(field).get<std::size_t>();
        field = "layout";
        if (j.contains(field) && !j.at(field).is_null()) {
            const auto& l = j.at(field);
            field = "layout.kind";
            const auto kind = parse_adder_kind(l.at("kind").get<std::string>());
            if (!kind) throw DocumentError("layout.kind: unknown adder kind");
            LayoutRecord rec{*kind, 0, {}};
            field = "layout.n";
            rec.n = l.at("n").get<std::size_t>();
            field = "layout.roles";
            for (const auto& [role, wire] : l.at("roles").items()) rec.roles.emplace_back(role, wire.get<WireIndex>());
            doc.layout = std::move(rec);
        }
        field = "gates";
        const auto& gates = j.at(field);
        if (!gates.is_array()) throw DocumentError("gates: expected an array");
        for (std::size_t i = 0; i < gates.size(); ++i) {
            field = "gates[" + std::to_string(i) + "]";
            doc.gates.push_back({gates[i].at("controls").get<std::vector<WireIndex>>(),
                                 gates[i].at("target").get<WireIndex>()});
        }
        return doc;
    } catch (const ordered_json::exception& e) {
        throw DocumentError(field + ": " + e.what());
    }
}

}  // namespace qadd
