#include "qadd/cli.hpp"

#include "qadd/adders.hpp"
#include "qadd/metrics.hpp"
#include "qadd/qasm_io.hpp"
#include "qadd/simulator.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace qadd::cli {

namespace {

using nlohmann::ordered_json;

constexpr std::size_t kMaxBuildN = 1024;
constexpr std::size_t kMaxSimulateN = (kMaxSimulatedWidth - 1) / 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NRange {
    std::size_t lo = 1;
    std::size_t hi = 1;
};

std::size_t parse_count(std::string_view text, const std::string& what) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw UsageError(what + ": '" + std::string(text) + "' is not a non-negative integer");
    }
    return value;
}

/// "4" or "1..6".
NRange parse_range(const std::string& text) {
    NRange r;
    if (const auto dots = text.find(".."); dots != std::string::npos) {
        r.lo = parse_count(std::string_view(text).substr(0, dots), "-n");
        r.hi = parse_count(std::string_view(text).substr(dots + 2), "-n");
    } else {
        r.lo = r.hi = parse_count(text, "-n");
    }
    if (r.lo == 0) throw UsageError("-n: operand width must be >= 1");
    if (r.hi < r.lo) throw UsageError("-n: empty range " + text);
    return r;
}

std::vector<AdderKind> parse_kinds(const std::string& text, bool allow_all) {
    if (allow_all && (text == "all" || text == "ALL")) return {std::begin(kAllAdderKinds), std::end(kAllAdderKinds)};
    if (const auto kind = parse_adder_kind(text)) return {*kind};
    throw UsageError("--kind: unknown adder '" + text + "'" + (allow_all ? " (use cqp, mqp, qcla or all)" : ""));
}

std::size_t env_limit(const char* name, std::size_t fallback) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') return fallback;
    return parse_count(raw, name);
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + path + "' for writing");
    file << text;
    if (!file.flush()) throw IoError("failed writing '" + path + "'");
}

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw IoError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << file.rdbuf();
    return ss.str();
}

std::string histogram_text(const std::map<std::size_t, std::size_t>& hist) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [arity, count] : hist) {
        os << (first ? "" : ";") << arity << ":" << count;
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Commands. Each returns an exit code; reports go to --out or `out`.

struct BuildOptions {
    std::string kind;
    std::string n;
    std::string format = "qasm";
    std::string out;
};

int cmd_build(const BuildOptions& o, std::ostream& out) {
    const auto kind = parse_kinds(o.kind, false).front();
    const auto range = parse_range(o.n);
    if (range.lo != range.hi) throw UsageError("build: -n takes a single width");
    if (range.lo > kMaxBuildN) throw UsageError("build: -n above " + std::to_string(kMaxBuildN));
    const Circuit circuit = build_adder(kind, range.lo);
    emit(o.format == "qasm" ? export_qasm(circuit) : document_to_json(export_document(circuit)), o.out, out);
    return kOk;
}

struct SimulateOptions {
    std::string kind;
    std::string n;
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    int c0 = 0;
    std::string format = "human";
    std::string out;
};

int cmd_simulate(const SimulateOptions& o, std::ostream& out) {
    const auto kind = parse_kinds(o.kind, false).front();
    const auto range = parse_range(o.n);
    if (range.lo != range.hi) throw UsageError("simulate: -n takes a single width");
    const std::size_t n = range.lo;
    if (n > kMaxSimulateN) throw UsageError("simulate: -n above " + std::to_string(kMaxSimulateN));
    const std::uint64_t limit = std::uint64_t{1} << n;
    if (o.a >= limit || o.b >= limit) {
        throw UsageError("simulate: operands must be < 2^" + std::to_string(n) + " = " + std::to_string(limit));
    }
    const AdderResult r = add(kind, n, o.a, o.b, o.c0 != 0);
    const char ancilla_name = kind == AdderKind::QCLA ? 'g' : 'c';
    std::string ancilla;
    for (bool bit : r.ancilla) ancilla += bit ? '1' : '0';

    std::ostringstream os;
    if (o.format == "json") {
        ordered_json j{{"kind", to_string(kind)}, {"n", n},        {"a", o.a},
                       {"b", o.b},                {"c0", o.c0},    {"sum", r.sum},
                       {"carry_out", r.carry_out ? 1 : 0},         {"operand_a", r.operand_a},
                       {"ancilla", ancilla}};
        os << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        os << "kind,n,a,b,c0,sum,carry_out,operand_a,ancilla\n"
           << to_string(kind) << "," << n << "," << o.a << "," << o.b << "," << o.c0 << "," << r.sum << ","
           << (r.carry_out ? 1 : 0) << "," << r.operand_a << "," << ancilla << "\n";
    } else {
        os << to_string(kind) << " n=" << n << ": " << o.a << " + " << o.b << " + " << o.c0 << "\n"
           << "  sum       " << r.sum << "\n"
           << "  carry_out " << (r.carry_out ? 1 : 0) << "\n"
           << "  a-wires   " << r.operand_a << "\n"
           << "  ancilla   ";
        if (ancilla.empty()) {
            os << "(none)\n";
        } else {
            os << ancilla << "   (" << ancilla_name << "1.." << ancilla_name << (n - 1) << ")\n";
        }
    }
    emit(os.str(), o.out, out);
    return kOk;
}

struct VerifyOptions {
    std::string kind = "all";
    std::string n = "1..6";
    std::size_t max_n = 0;
    std::size_t max_width = 0;
    std::size_t workers = 1;
    std::string format = "human";
    std::string out;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
    const auto kinds = parse_kinds(o.kind, true);
    const auto range = parse_range(o.n);
    VerifyLimits limits;
    limits.max_adder_n = o.max_n ? o.max_n : env_limit("QADD_MAX_EXHAUSTIVE_N", limits.max_adder_n);
    limits.max_permutation_width =
        o.max_width ? o.max_width : env_limit("QADD_MAX_PERMUTATION_WIDTH", limits.max_permutation_width);
    limits.workers = o.workers;
    if (range.hi > limits.max_adder_n) {
        throw UsageError("verify: n=" + std::to_string(range.hi) + " exceeds the exhaustive limit " +
                         std::to_string(limits.max_adder_n) + " (raise with --max-n or QADD_MAX_EXHAUSTIVE_N)");
    }
    if (range.hi > kMaxSimulateN) throw UsageError("verify: n above " + std::to_string(kMaxSimulateN));

    bool all_ok = true;
    std::ostringstream os;
    ordered_json rows = ordered_json::array();
    if (o.format == "csv") os << "kind,n,cases,failures,permutation\n";
    for (AdderKind kind : kinds) {
        for (std::size_t n = range.lo; n <= range.hi; ++n) {
            const auto report = exhaustive_verify(kind, n, limits);
            const Circuit circuit = build_adder(kind, n);
            std::string perm = "skipped";
            if (circuit.width() <= limits.max_permutation_width) {
                perm = permutation_check(circuit, limits.max_permutation_width) ? "ok" : "FAIL";
            }
            const bool ok = report.ok() && perm != "FAIL";
            all_ok = all_ok && ok;
            if (o.format == "json") {
                ordered_json ces = ordered_json::array();
                for (const auto& ce : report.counterexamples) {
                    ces.push_back({{"a", ce.a}, {"b", ce.b}, {"c0", ce.c0 ? 1 : 0}, {"reason", ce.reason}});
                }
                rows.push_back({{"kind", to_string(kind)},
                                {"n", n},
                                {"cases", report.cases},
                                {"failures", report.failures},
                                {"permutation", perm},
                                {"counterexamples", ces}});
            } else if (o.format == "csv") {
                os << to_string(kind) << "," << n << "," << report.cases << "," << report.failures << "," << perm
                   << "\n";
            } else {
                os << std::left << std::setw(5) << to_string(kind) << " n=" << std::setw(3) << n << std::right
                   << std::setw(8) << report.cases << " cases  " << report.failures << " failures  permutation "
                   << perm << (ok ? "" : "  <-- FAILED") << "\n";
                for (const auto& ce : report.counterexamples) {
                    os << "    a=" << ce.a << " b=" << ce.b << " c0=" << ce.c0 << ": " << ce.reason << "\n";
                }
            }
        }
    }
    if (o.format == "json") os << ordered_json{{"ok", all_ok}, {"results", rows}}.dump(2) << "\n";
    emit(os.str(), o.out, out);
    return all_ok ? kOk : kCheckFailed;
}

struct MetricsOptions {
    std::string kind = "all";
    std::string n = "1..4";
    std::string format = "human";
    std::string out;
};

int cmd_metrics(const MetricsOptions& o, std::ostream& out) {
    const auto kinds = parse_kinds(o.kind, true);
    const auto range = parse_range(o.n);
    if (range.hi > kMaxBuildN) throw UsageError("metrics: n above " + std::to_string(kMaxBuildN));

    bool all_match = true;
    std::ostringstream os;
    ordered_json rows = ordered_json::array();
    if (o.format == "csv") {
        os << "kind,n,gate_count,asap_depth,paper_stages,closed_form_gates,closed_form_stages,arity_histogram\n";
    }
    for (AdderKind kind : kinds) {
        for (std::size_t n = range.lo; n <= range.hi; ++n) {
            const auto m = metrics(kind, n);
            all_match = all_match && m.gates_match();
            if (o.format == "json") {
                ordered_json hist = ordered_json::object();
                for (const auto& [arity, count] : m.arity_histogram) hist[std::to_string(arity)] = count;
                rows.push_back({{"kind", to_string(kind)},
                                {"n", n},
                                {"gate_count", m.gate_count},
                                {"arity_histogram", hist},
                                {"asap_depth", m.asap_depth},
                                {"paper_stages", m.paper_stages},
                                {"closed_form_gates", m.closed_form_gates},
                                {"closed_form_stages", m.closed_form_stages}});
            } else if (o.format == "csv") {
                os << to_string(kind) << "," << n << "," << m.gate_count << "," << m.asap_depth << ","
                   << m.paper_stages << "," << m.closed_form_gates << "," << m.closed_form_stages << ","
                   << histogram_text(m.arity_histogram) << "\n";
            } else {
                os << to_string(kind) << " n=" << n << "\n"
                   << "  gate_count         " << m.gate_count << " (closed form " << m.closed_form_gates << ")"
                   << (m.gates_match() ? "" : "  <-- MISMATCH") << "\n"
                   << "  paper_stages       " << m.paper_stages << "\n"
                   << "  asap_depth         " << m.asap_depth << " (strict wire-disjoint schedule)\n"
                   << "  arity_histogram    " << histogram_text(m.arity_histogram) << "\n";
            }
        }
    }
    if (o.format == "json") os << rows.dump(2) << "\n";
    emit(os.str(), o.out, out);
    return all_match ? kOk : kCheckFailed;
}

struct TableOptions {
    std::size_t n_max = 4;
    std::string format = "human";
    std::string out;
};

int cmd_table(const TableOptions& o, std::ostream& out) {
    if (o.n_max == 0) throw UsageError("table: --n-max must be >= 1");
    if (o.n_max > kMaxBuildN) throw UsageError("table: --n-max above " + std::to_string(kMaxBuildN));
    const auto rows = table1(o.n_max);
    bool all_match = true;
    std::ostringstream os;
    if (o.format == "json") {
        ordered_json j = ordered_json::array();
        for (const auto& r : rows) {
            all_match = all_match && r.matches_closed_form;
            j.push_back({{"n", r.n},
                         {"qcla_stages", r.qcla_stages},
                         {"qcla_gates", r.qcla_gates},
                         {"cqp_stages", r.cqp_stages},
                         {"cqp_gates", r.cqp_gates},
                         {"mqp_stages", r.mqp_stages},
                         {"mqp_gates", r.mqp_gates},
                         {"qcla_asap_depth", r.qcla_asap},
                         {"cqp_asap_depth", r.cqp_asap},
                         {"mqp_asap_depth", r.mqp_asap},
                         {"matches_closed_form", r.matches_closed_form}});
        }
        os << j.dump(2) << "\n";
    } else if (o.format == "csv") {
        os << "n,qcla_stages,qcla_gates,cqp_stages,cqp_gates,mqp_stages,mqp_gates,"
              "qcla_asap_depth,cqp_asap_depth,mqp_asap_depth,matches_closed_form\n";
        for (const auto& r : rows) {
            all_match = all_match && r.matches_closed_form;
            os << r.n << "," << r.qcla_stages << "," << r.qcla_gates << "," << r.cqp_stages << "," << r.cqp_gates
               << "," << r.mqp_stages << "," << r.mqp_gates << "," << r.qcla_asap << "," << r.cqp_asap << ","
               << r.mqp_asap << "," << (r.matches_closed_form ? 1 : 0) << "\n";
        }
    } else {
        os << "        QCLA            CQP             MQP             | ASAP depth (strict schedule)\n"
           << "  n   stages  gates   stages  gates   stages  gates   |  QCLA   CQP   MQP\n";
        for (const auto& r : rows) {
            all_match = all_match && r.matches_closed_form;
            os << std::setw(3) << r.n << "   " << std::setw(6) << r.qcla_stages << std::setw(7) << r.qcla_gates
               << "   " << std::setw(6) << r.cqp_stages << std::setw(7) << r.cqp_gates << "   " << std::setw(6)
               << r.mqp_stages << std::setw(7) << r.mqp_gates << "   | " << std::setw(5) << r.qcla_asap
               << std::setw(6) << r.cqp_asap << std::setw(6) << r.mqp_asap
               << (r.matches_closed_form ? "" : "   <-- gate count differs from closed form") << "\n";
        }
        os << "Stage columns use the published convention (6n, n+3, n+2); gate columns count the built circuits.\n";
    }
    emit(os.str(), o.out, out);
    return all_match ? kOk : kCheckFailed;
}

struct ExportOptions {
    std::string in;
    std::string format = "qasm";
    std::size_t decompose = 0;
    std::string out;
};

int cmd_export(const ExportOptions& o, std::ostream& out) {
    Circuit circuit = parse_document(document_from_json(read_file(o.in)));
    if (o.decompose != 0) {
        if (o.decompose < 2) throw UsageError("export: --decompose needs a max arity >= 2");
        circuit = decompose_mcx(circuit, o.decompose);
    }
    emit(o.format == "qasm" ? export_qasm(circuit) : document_to_json(export_document(circuit)), o.out, out);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Reversible adder synthesis, simulation and metrics"};
    app.name(args.empty() ? "qadd" : args.front());
    app.require_subcommand(1);

    BuildOptions build;
    auto* build_cmd = app.add_subcommand("build", "Synthesize an adder as QASM or a JSON document");
    build_cmd->add_option("--kind", build.kind, "cqp | mqp | qcla")->required();
    build_cmd->add_option("-n", build.n, "Operand width in bits")->required();
    build_cmd->add_option("--format", build.format)->check(CLI::IsMember({"qasm", "json"}));
    build_cmd->add_option("--out", build.out, "Output path (default stdout)");

    SimulateOptions sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Run an adder on one input");
    sim_cmd->add_option("--kind", sim.kind, "cqp | mqp | qcla")->required();
    sim_cmd->add_option("-n", sim.n, "Operand width in bits")->required();
    sim_cmd->add_option("-a", sim.a, "First operand")->required();
    sim_cmd->add_option("-b", sim.b, "Second operand")->required();
    sim_cmd->add_option("--c0", sim.c0, "Carry-in bit")->check(CLI::Range(0, 1));
    sim_cmd->add_option("--format", sim.format)->check(CLI::IsMember({"human", "csv", "json"}));
    sim_cmd->add_option("--out", sim.out, "Output path (default stdout)");

    VerifyOptions ver;
    auto* ver_cmd = app.add_subcommand("verify", "Exhaustively check adders against integer addition");
    ver_cmd->add_option("--kind", ver.kind, "cqp | mqp | qcla | all")->capture_default_str();
    ver_cmd->add_option("-n", ver.n, "Width or range LO..HI")->capture_default_str();
    ver_cmd->add_option("--max-n", ver.max_n, "Exhaustive limit on n (env QADD_MAX_EXHAUSTIVE_N, default 8)");
    ver_cmd->add_option("--max-width", ver.max_width,
                        "Permutation-check width limit (env QADD_MAX_PERMUTATION_WIDTH, default 16)");
    ver_cmd->add_option("--workers", ver.workers, "Worker threads, 0 = all cores")->capture_default_str();
    ver_cmd->add_option("--format", ver.format)->check(CLI::IsMember({"human", "csv", "json"}));
    ver_cmd->add_option("--out", ver.out, "Output path (default stdout)");

    MetricsOptions met;
    auto* met_cmd = app.add_subcommand("metrics", "Gate counts, arities and stage counts");
    met_cmd->add_option("--kind", met.kind, "cqp | mqp | qcla | all")->capture_default_str();
    met_cmd->add_option("-n", met.n, "Width or range LO..HI")->capture_default_str();
    met_cmd->add_option("--format", met.format)->check(CLI::IsMember({"human", "csv", "json"}));
    met_cmd->add_option("--out", met.out, "Output path (default stdout)");

    TableOptions tab;
    auto* tab_cmd = app.add_subcommand("table", "Stage and gate comparison for n = 1..n-max");
    tab_cmd->add_option("--n-max", tab.n_max)->capture_default_str();
    tab_cmd->add_option("--format", tab.format)->check(CLI::IsMember({"human", "csv", "json"}));
    tab_cmd->add_option("--out", tab.out, "Output path (default stdout)");

    ExportOptions exp;
    auto* exp_cmd = app.add_subcommand("export", "Validate a JSON circuit document and re-emit it");
    exp_cmd->add_option("--in", exp.in, "Circuit document (JSON)")->required();
    exp_cmd->add_option("--format", exp.format)->check(CLI::IsMember({"qasm", "json"}));
    exp_cmd->add_option("--decompose", exp.decompose, "Lower gates above this arity to CCNOT ladders");
    exp_cmd->add_option("--out", exp.out, "Output path (default stdout)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    for (const auto& a : args) argv.push_back(a.c_str());
    if (argv.empty()) argv.push_back("qadd");

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (*build_cmd) return cmd_build(build, out);
        if (*sim_cmd) return cmd_simulate(sim, out);
        if (*ver_cmd) return cmd_verify(ver, out);
        if (*met_cmd) return cmd_metrics(met, out);
        if (*tab_cmd) return cmd_table(tab, out);
        if (*exp_cmd) return cmd_export(exp, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    } catch (const CircuitError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const SimulationError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const DocumentError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kIoError;
    }
    return kUsage;
}

}  // namespace qadd::cli
