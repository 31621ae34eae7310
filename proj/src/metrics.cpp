#include "qadd/metrics.hpp"

#include "qadd/adders.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace qadd {

Schedule asap_schedule(const Circuit& circuit) {
    std::vector<std::size_t> wire_stage(circuit.width(), 0);  // last stage that used each wire, 1-based
    Schedule schedule;
    for (std::size_t idx = 0; idx < circuit.size(); ++idx) {
        const Gate& g = circuit.gates()[idx];
        std::size_t stage = wire_stage[g.target()];
        for (WireIndex c : g.controls()) stage = std::max(stage, wire_stage[c]);
        ++stage;
        wire_stage[g.target()] = stage;
        for (WireIndex c : g.controls()) wire_stage[c] = stage;
        if (schedule.stages.size() < stage) schedule.stages.resize(stage);
        schedule.stages[stage - 1].push_back(idx);
    }
    return schedule;
}

bool is_valid_schedule(const Circuit& circuit, const Schedule& schedule) {
    std::vector<std::size_t> stage_of(circuit.size(), 0);
    std::vector<bool> seen(circuit.size(), false);
    for (std::size_t s = 0; s < schedule.stages.size(); ++s) {
        std::set<WireIndex> used;
        for (std::size_t idx : schedule.stages[s]) {
            if (idx >= circuit.size() || seen[idx]) return false;
            seen[idx] = true;
            stage_of[idx] = s;
            for (WireIndex w : circuit.gates()[idx].wires()) {
                if (!used.insert(w).second) return false;
            }
        }
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;

    std::vector<std::optional<std::size_t>> last_on_wire(circuit.width());
    for (std::size_t idx = 0; idx < circuit.size(); ++idx) {
        for (WireIndex w : circuit.gates()[idx].wires()) {
            if (last_on_wire[w] && stage_of[*last_on_wire[w]] >= stage_of[idx]) return false;
            last_on_wire[w] = idx;
        }
    }
    return true;
}

Circuit flatten_schedule(const Circuit& circuit, const Schedule& schedule) {
    std::vector<Gate> gates;
    gates.reserve(circuit.size());
    for (const auto& stage : schedule.stages) {
        for (std::size_t idx : stage) gates.push_back(circuit.gates().at(idx));
    }
    return Circuit(circuit.width(), circuit.name(), circuit.layout(), std::move(gates));
}

std::size_t paper_stage_count(AdderKind kind, std::size_t n) {
    switch (kind) {
        case AdderKind::CQP: return 6 * n;
        case AdderKind::MQP: return n + 3;
        case AdderKind::QCLA: return n + 2;
    }
    return 0;
}

std::size_t closed_form_gates(AdderKind kind, std::size_t n) {
    switch (kind) {
        case AdderKind::CQP: return 8 * n - 2;
        case AdderKind::MQP: return 4 * n;
        case AdderKind::QCLA: return 4 * n + n * (n - 1) / 2;
    }
    return 0;
}

std::map<std::size_t, std::size_t> arity_histogram(const Circuit& circuit) {
    std::map<std::size_t, std::size_t> hist;
    for (const Gate& g : circuit) ++hist[g.arity()];
    return hist;
}

MetricsReport metrics(AdderKind kind, std::size_t n) {
    const Circuit circuit = build_adder(kind, n);
    MetricsReport r;
    r.kind = kind;
    r.n = n;
    r.gate_count = circuit.size();
    r.arity_histogram = arity_histogram(circuit);
    r.asap_depth = asap_schedule(circuit).depth();
    r.paper_stages = paper_stage_count(kind, n);
    r.closed_form_gates = closed_form_gates(kind, n);
    r.closed_form_stages = paper_stage_count(kind, n);
    return r;
}

std::vector<Table1Row> table1(std::size_t n_max) {
    if (n_max == 0) throw CircuitError("table needs n_max >= 1");
    std::vector<Table1Row> rows;
    rows.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto qcla = metrics(AdderKind::QCLA, n);
        const auto cqp = metrics(AdderKind::CQP, n);
        const auto mqp = metrics(AdderKind::MQP, n);
        rows.push_back(Table1Row{
            .n = n,
            .qcla_stages = qcla.paper_stages,
            .qcla_gates = qcla.gate_count,
            .cqp_stages = cqp.paper_stages,
            .cqp_gates = cqp.gate_count,
            .mqp_stages = mqp.paper_stages,
            .mqp_gates = mqp.gate_count,
            .qcla_asap = qcla.asap_depth,
            .cqp_asap = cqp.asap_depth,
            .mqp_asap = mqp.asap_depth,
            .matches_closed_form = qcla.gates_match() && cqp.gates_match() && mqp.gates_match(),
        });
    }
    return rows;
}

Circuit decompose_mcx(const Circuit& circuit, std::size_t max_arity) {
    if (max_arity < 2) throw CircuitError("decompose_mcx needs max_arity >= 2");
    std::size_t ancillas = 0;
    for (const Gate& g : circuit) {
        if (g.arity() > max_arity) ancillas = std::max(ancillas, g.arity() - 2);
    }
    const auto first_ancilla = static_cast<WireIndex>(circuit.width());
    std::vector<Gate> gates;
    for (const Gate& g : circuit) {
        if (g.arity() <= max_arity) {
            gates.push_back(g);
            continue;
        }
        // Conjunction chain: anc[0] = c0.c1, anc[j] = c[j+1].anc[j-1].
        const auto& c = g.controls();
        const std::size_t k = c.size();
        std::vector<Gate> chain;
        chain.push_back(Gate::ccnot(c[0], c[1], first_ancilla));
        for (std::size_t j = 1; j < k - 2; ++j) {
            chain.push_back(Gate::ccnot(c[j + 1], first_ancilla + static_cast<WireIndex>(j - 1),
                                        first_ancilla + static_cast<WireIndex>(j)));
        }
        gates.insert(gates.end(), chain.begin(), chain.end());
        gates.push_back(Gate::ccnot(c[k - 1], first_ancilla + static_cast<WireIndex>(k - 3), g.target()));
        gates.insert(gates.end(), chain.rbegin(), chain.rend());
    }
    return Circuit(circuit.width() + ancillas, circuit.name(), circuit.layout(), std::move(gates));
}

}  // namespace qadd
