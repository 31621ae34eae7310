#include "qadd/cli.hpp"
#include "qadd/adders.hpp"
#include "qadd/qasm_io.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qadd;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "qadd");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::size_t count_gate_lines(const std::string& qasm) {
    std::size_t n = 0;
    std::istringstream in(qasm);
    std::string line;
    while (std::getline(in, line)) {
        if (line.starts_with("cx ") || line.starts_with("ccx ") || line.starts_with("x ") ||
            line.starts_with("ctrl(")) {
            ++n;
        }
    }
    return n;
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("qadd_cli_test_" + name);
}

}  // namespace

TEST(CliBuild, QclaQasm) {
    const auto r = run_cli({"build", "--kind", "qcla", "-n", "4", "--format", "qasm"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(count_gate_lines(r.out), 22u);
}

TEST(CliBuild, ZeroWidthIsUsageError) {
    const auto r = run_cli({"build", "--kind", "cqp", "-n", "0"});
    EXPECT_EQ(r.code, 2);
    EXPECT_FALSE(r.err.empty());
}

TEST(CliBuild, MqpJsonDocument) {
    const auto r = run_cli({"build", "--kind", "mqp", "-n", "1", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["gates"].size(), 4u);
    EXPECT_EQ(j["width"], 4);
    EXPECT_EQ(parse_document(document_from_json(r.out)), build_mqp(1));
}

TEST(CliBuild, BadFlags) {
    EXPECT_EQ(run_cli({"build", "--kind", "rca", "-n", "2"}).code, 2);
    EXPECT_EQ(run_cli({"build", "-n", "2"}).code, 2);
    EXPECT_EQ(run_cli({"build", "--kind", "qcla", "-n", "2", "--format", "dot"}).code, 2);
    EXPECT_EQ(run_cli({"build", "--kind", "qcla", "-n", "1..3"}).code, 2);
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
}

TEST(CliBuild, WritesOutFile) {
    const auto path = temp_path("build.qasm");
    const auto r = run_cli({"build", "--kind", "cqp", "-n", "2", "--out", path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    EXPECT_EQ(count_gate_lines(ss.str()), 14u);
    std::filesystem::remove(path);
}

TEST(CliBuild, UnwritableOutIsIoError) {
    const auto r = run_cli({"build", "--kind", "cqp", "-n", "2", "--out", "/nonexistent-dir/x.qasm"});
    EXPECT_EQ(r.code, 1);
}

TEST(CliSimulate, Examples) {
    auto r = run_cli({"simulate", "--kind", "cqp", "-n", "4", "-a", "5", "-b", "9", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["sum"], 14);
    EXPECT_EQ(j["carry_out"], 0);
    EXPECT_EQ(j["ancilla"], "000");

    r = run_cli({"simulate", "--kind", "qcla", "-n", "4", "-a", "15", "-b", "15", "--c0", "1", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["sum"], 15);
    EXPECT_EQ(j["carry_out"], 1);
}

TEST(CliSimulate, HumanAndCsv) {
    auto r = run_cli({"simulate", "--kind", "mqp", "-n", "4", "-a", "15", "-b", "1"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("sum       0"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("carry_out 1"), std::string::npos) << r.out;
    r = run_cli({"simulate", "--kind", "mqp", "-n", "4", "-a", "15", "-b", "1", "--format", "csv"});
    EXPECT_EQ(r.out, "kind,n,a,b,c0,sum,carry_out,operand_a,ancilla\nMQP,4,15,1,0,0,1,15,111\n");
}

TEST(CliSimulate, OperandOutOfRange) {
    EXPECT_EQ(run_cli({"simulate", "--kind", "mqp", "-n", "2", "-a", "4", "-b", "0"}).code, 2);
    EXPECT_EQ(run_cli({"simulate", "--kind", "mqp", "-n", "2", "-a", "1", "-b", "0", "--c0", "2"}).code, 2);
    EXPECT_EQ(run_cli({"simulate", "--kind", "mqp", "-n", "22", "-a", "1", "-b", "0"}).code, 2);
}

TEST(CliVerify, AllKindsDefaultRange) {
    const auto r = run_cli({"verify", "--kind", "all", "-n", "1..6", "--format", "csv"});
    EXPECT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "kind,n,cases,failures,permutation");
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        EXPECT_NE(line.find(",0,"), std::string::npos) << line;
    }
    EXPECT_EQ(rows, 18u);
}

TEST(CliVerify, SingleCase) {
    const auto r = run_cli({"verify", "--kind", "cqp", "-n", "1..1", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["results"][0]["cases"], 8);
    EXPECT_EQ(j["results"][0]["permutation"], "ok");
    EXPECT_TRUE(j["ok"].get<bool>());
}

TEST(CliVerify, RangeAboveLimit) {
    const auto r = run_cli({"verify", "--kind", "qcla", "-n", "1..99"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("limit"), std::string::npos);
}

TEST(CliVerify, EnvironmentLimitOverride) {
    ::setenv("QADD_MAX_EXHAUSTIVE_N", "2", 1);
    EXPECT_EQ(run_cli({"verify", "--kind", "mqp", "-n", "3"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--kind", "mqp", "-n", "3", "--max-n", "3"}).code, 0);
    ::unsetenv("QADD_MAX_EXHAUSTIVE_N");
    EXPECT_EQ(run_cli({"verify", "--kind", "mqp", "-n", "3"}).code, 0);
}

TEST(CliExport, RoundTripAndDecompose) {
    const auto doc_path = temp_path("qcla3.json");
    ASSERT_EQ(run_cli({"build", "--kind", "qcla", "-n", "3", "--format", "json", "--out", doc_path.string()}).code, 0);

    auto r = run_cli({"export", "--in", doc_path.string(), "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(parse_document(document_from_json(r.out)), build_qcla(3));

    r = run_cli({"export", "--in", doc_path.string(), "--decompose", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.find("ctrl("), std::string::npos);
    EXPECT_NE(r.out.find("qubit[12] q;"), std::string::npos) << r.out;  // 10 wires + 2 ladder ancillas

    std::ofstream(doc_path) << R"({"format_version":"1.0","name":"x","width":3,"gates":[{"controls":[1,1],"target":2}]})";
    r = run_cli({"export", "--in", doc_path.string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("gates[0]"), std::string::npos);
    std::filesystem::remove(doc_path);

    EXPECT_EQ(run_cli({"export", "--in", "/nonexistent/file.json"}).code, 1);
}

TEST(CliTable, FourRowsMatchPublishedTable) {
    const auto r = run_cli({"table", "--n-max", "4", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "n,qcla_stages,qcla_gates,cqp_stages,cqp_gates,mqp_stages,mqp_gates,"
              "qcla_asap_depth,cqp_asap_depth,mqp_asap_depth,matches_closed_form\n"
              "1,3,4,6,6,4,4,4,6,4,1\n"
              "2,4,9,12,14,5,8,7,12,5,1\n"
              "3,5,15,18,22,6,12,11,18,6,1\n"
              "4,6,22,24,30,7,16,16,24,7,1\n");
}

TEST(CliTable, HumanAndJson) {
    auto r = run_cli({"table"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("ASAP depth"), std::string::npos);
    r = run_cli({"table", "--n-max", "2", "--format", "json"});
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.size(), 2u);
    EXPECT_EQ(j[1]["qcla_gates"], 9);
    EXPECT_EQ(run_cli({"table", "--n-max", "0"}).code, 2);
}

TEST(CliMetrics, Qcla4) {
    const auto r = run_cli({"metrics", "--kind", "qcla", "-n", "4", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j[0]["gate_count"], 22);
    EXPECT_EQ(j[0]["paper_stages"], 6);
    EXPECT_EQ(j[0]["asap_depth"], 16);
    EXPECT_EQ(j[0]["arity_histogram"]["5"], 1);
}

TEST(CliMetrics, Mqp8Csv) {
    const auto r = run_cli({"metrics", "--kind", "mqp", "-n", "8", "--format", "csv"});
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "kind,n,gate_count,asap_depth,paper_stages,closed_form_gates,closed_form_stages,arity_histogram\n"
              "MQP,8,32,11,11,32,11,1:16;2:16\n");
}

TEST(CliMetrics, AllKindsRange) {
    const auto r = run_cli({"metrics", "-n", "1..3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("QCLA n=3"), std::string::npos);
    EXPECT_NE(r.out.find("CQP n=1"), std::string::npos);
    EXPECT_EQ(run_cli({"metrics", "-n", "3..1"}).code, 2);
    EXPECT_EQ(run_cli({"metrics", "-n", "x"}).code, 2);
}
