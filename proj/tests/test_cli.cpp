#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "test_util.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct Outcome {
    int exit_code = -1;
    std::string out;
};

Outcome run_cli(const std::string& args, bool merge_stderr = false) {
    const std::string cmd = std::string(QSIM_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    Outcome o;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (pipe == nullptr) return o;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) o.out.append(buf, got);
    const int status = ::pclose(pipe);
    o.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return o;
}

void expect_schema(const Json& j) {
    ASSERT_TRUE(j.is_object());
    const std::vector<std::string> keys = {"algorithm", "parameters", "answer", "distribution", "seed", "shots", "wall_time_ms"};
    ASSERT_EQ(j.size(), keys.size());
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) EXPECT_EQ(it.key(), keys[i]);
    EXPECT_TRUE(j["algorithm"].is_string());
    EXPECT_TRUE(j["parameters"].is_object());
    EXPECT_TRUE(j["seed"].is_number_integer());
    EXPECT_TRUE(j["shots"].is_null() || j["shots"].is_number_integer());
    EXPECT_TRUE(j["wall_time_ms"].is_number());
    ASSERT_TRUE(j["distribution"].is_array());
    const auto& d = j["distribution"];
    for (std::size_t k = 0; k < d.size(); ++k) {
        ASSERT_EQ(d[k].size(), 2u);
        EXPECT_TRUE(d[k]["bitstring"].is_string());
        EXPECT_TRUE(d[k]["value"].is_number());
        if (k > 0) {
            const double prev = d[k - 1]["value"], cur = d[k]["value"];
            EXPECT_TRUE(prev > cur || (prev == cur && d[k - 1]["bitstring"] < d[k]["bitstring"]));
        }
    }
}

Json without_time(Json j) {
    j.erase("wall_time_ms");
    return j;
}

const std::vector<std::string> corpus = {
    "deutsch --f 01",
    "deutsch --f 11 --economical",
    "dj --n 3 --ones 001,011,110,111",
    "bv --s 1011",
    "bv --s 0110 --economical --shots 200",
    "simon --s 101",
    "grover --n 4 --marked 0110,1001 --variant economical",
    "grover --n 3 --marked 110 --shots 500",
    "sat --expr \"a & (c | (!b & c))\" --m 2",
    "shor --N 21",
    "shor --N 15 --mode mc",
    "dlog --N 34 --a 27 --b 3",
    "qpe-order --N 15 --a 7",
    "count --n 4 --marked 0001,0010,0100,1000",
    "qft-check --n 4",
};

}  // namespace

TEST(Cli, SchemaForEverySubcommand) {
    for (const auto& args : corpus) {
        auto o = run_cli(args + " --json --seed 3");
        EXPECT_TRUE(o.exit_code == 0 || o.exit_code == 1) << args;
        SCOPED_TRACE(args);
        expect_schema(Json::parse(o.out));
    }
}

TEST(Cli, SameSeedSameReport) {
    for (const auto& args : corpus) {
        auto a = run_cli(args + " --json --seed 11");
        auto b = run_cli(args + " --json --seed 11");
        EXPECT_EQ(a.exit_code, b.exit_code) << args;
        EXPECT_EQ(without_time(Json::parse(a.out)).dump(), without_time(Json::parse(b.out)).dump()) << args;
    }
}

TEST(Cli, Examples) {
    auto shor = Json::parse(run_cli("shor --N 21 --seed 7 --json").out);
    EXPECT_TRUE(shor["answer"] == 3 || shor["answer"] == 7);

    auto bv = Json::parse(run_cli("bv --s 1011 --json").out);
    EXPECT_EQ(bv["answer"], "1011");
    ASSERT_EQ(bv["distribution"].size(), 1u);
    EXPECT_EQ(bv["distribution"][0]["bitstring"], "1011");
    EXPECT_NEAR(bv["distribution"][0]["value"].get<double>(), 1.0, 1e-9);
    EXPECT_TRUE(bv["shots"].is_null());

    auto qft = Json::parse(run_cli("qft-check --n 5 --json").out);
    EXPECT_EQ(qft["answer"]["gate_count"], 17);
    EXPECT_LE(qft["answer"]["max_error"].get<double>(), 1e-10);
}

TEST(Cli, ShotsAndTop) {
    auto j = Json::parse(run_cli("grover --n 3 --marked 110 --shots 1000 --top 3 --json").out);
    EXPECT_EQ(j["shots"], 1000);
    EXPECT_LE(j["distribution"].size(), 3u);
    double total = 0;
    auto full = Json::parse(run_cli("grover --n 3 --marked 110 --shots 1000 --json").out);
    for (const auto& e : full["distribution"]) total += e["value"].get<double>();
    EXPECT_EQ(total, 1000.0);
}

TEST(Cli, TruthTableFile) {
    const std::string path = ::testing::TempDir() + "simon_s110.txt";
    std::ofstream(path) << qsim::testing::simon_s110_table;
    auto o = run_cli("simon --table " + path + " --json --seed 2");
    ASSERT_EQ(o.exit_code, 0);
    EXPECT_EQ(Json::parse(o.out)["answer"], "110");
}

TEST(Cli, ExitCodes) {
    auto bad_flag = run_cli("bv --bogus 1", true);
    EXPECT_EQ(bad_flag.exit_code, 2);
    EXPECT_NE(bad_flag.out.find("Usage"), std::string::npos);
    EXPECT_EQ(run_cli("").exit_code, 2);
    EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
    EXPECT_EQ(run_cli("bv").exit_code, 2);
    EXPECT_EQ(run_cli("shor --N 13").exit_code, 2);
    EXPECT_EQ(run_cli("grover --n 2 --marked 111").exit_code, 2);
    EXPECT_EQ(run_cli("sat --expr \"a & !a\" --json").exit_code, 1);
    EXPECT_EQ(run_cli("bv --s 101 --help").exit_code, 0);
}

TEST(Cli, QubitCapFromEnvironment) {
    EXPECT_EQ(run_cli("grover --n 6 --marked 000001").exit_code, 0);
    ::setenv("QSIM_MAX_QUBITS", "4", 1);
    EXPECT_EQ(run_cli("grover --n 6 --marked 000001").exit_code, 2);
    ::unsetenv("QSIM_MAX_QUBITS");
}
