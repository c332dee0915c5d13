#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsim/qsim.hpp"
#include "report.hpp"

using namespace qsim;
using qsim::cli::Json;
using qsim::cli::RunReport;

namespace {

constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct Common {
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> shots;
    bool json = false;
    std::size_t top = 16;
};

std::vector<std::string> split_csv(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<std::uint64_t> parse_marked(const std::string& csv, int n) {
    std::vector<std::uint64_t> out;
    for (const auto& item : split_csv(csv)) {
        if (static_cast<int>(item.size()) != n) throw domain_error("marked element '" + item + "' is not " + std::to_string(n) + " bits");
        out.push_back(from_bitstring(item));
    }
    return out;
}

TruthTable read_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot read truth table file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_truth_table(buf.str());
}

template <class Answer>
void take_distribution(RunReport& r, const AlgorithmResult<Answer>& res, const Common& common) {
    r.distribution = cli::report_entries(res.exact_distribution, common.shots, common.seed, common.top);
}

Json assignment_json(std::uint64_t x, const std::vector<std::string>& names) {
    Json out = Json::object();
    const int n = static_cast<int>(names.size());
    for (int i = 0; i < n; ++i) out[names[static_cast<std::size_t>(i)]] = bit_of(x, n, i);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"State-vector simulator for textbook quantum algorithms"};
    app.require_subcommand(1);
    app.fallthrough();

    Common common;
    std::uint64_t shots_flag = 0;
    app.add_option("--seed", common.seed, "RNG seed")->capture_default_str();
    auto* shots_opt = app.add_option("--shots", shots_flag, "Sample this many shots instead of printing exact probabilities")
                          ->check(CLI::Range(std::uint64_t{1}, static_cast<std::uint64_t>(limits::max_shots)));
    app.add_flag("--json", common.json, "Emit a JSON report");
    app.add_option("--top", common.top, "Number of distribution entries to show")->capture_default_str()->check(CLI::PositiveNumber);

    // Each subcommand fills the report; the driver times it and prints.
    std::function<void(RunReport&)> job;

    // deutsch
    std::string deutsch_f;
    bool deutsch_eco = false;
    auto* deutsch_cmd = app.add_subcommand("deutsch", "Deutsch's algorithm on a one-bit function");
    deutsch_cmd->add_option("--f", deutsch_f, "Outputs f(0)f(1), e.g. 01")->required();
    deutsch_cmd->add_flag("--economical", deutsch_eco, "Single-qubit variant with the phase oracle");
    deutsch_cmd->callback([&] {
        job = [&](RunReport& r) {
            if (deutsch_f.size() != 2 || deutsch_f.find_first_not_of("01") != std::string::npos)
                throw domain_error("--f must be two bits");
            const auto tt = TruthTable::from_ones(1, [&] {
                std::vector<std::uint64_t> ones;
                for (std::uint64_t x = 0; x < 2; ++x)
                    if (deutsch_f[x] == '1') ones.push_back(x);
                return ones;
            }());
            const auto res = deutsch(tt, deutsch_eco, common.seed);
            r.algorithm = "deutsch";
            r.parameters = {{"f", deutsch_f}, {"economical", deutsch_eco}};
            r.answer = to_string(res.answer);
            take_distribution(r, res, common);
        };
    });

    // dj
    int dj_n = 0;
    std::string dj_table, dj_ones;
    auto* dj_cmd = app.add_subcommand("dj", "Deutsch-Jozsa on a promised constant or balanced function");
    dj_cmd->add_option("--n", dj_n, "Input width")->required()->check(CLI::Range(1, 12));
    auto* dj_table_opt = dj_cmd->add_option("--table", dj_table, "Truth table file");
    auto* dj_ones_opt = dj_cmd->add_option("--ones", dj_ones, "Comma-separated inputs where f = 1");
    dj_table_opt->excludes(dj_ones_opt);
    dj_cmd->callback([&] {
        job = [&](RunReport& r) {
            TruthTable tt = dj_table.empty() ? TruthTable::from_ones(dj_n, parse_marked(dj_ones, dj_n)) : read_table(dj_table);
            if (tt.n_in != dj_n || tt.n_out != 1) throw domain_error("truth table must have n inputs and one output");
            const auto res = deutsch_jozsa(synth_bit_oracle(tt), dj_n, common.seed);
            r.algorithm = "dj";
            r.parameters = {{"n", dj_n}};
            if (!dj_table.empty()) r.parameters["table"] = dj_table;
            else r.parameters["ones"] = dj_ones;
            r.answer = to_string(res.answer);
            take_distribution(r, res, common);
        };
    });

    // bv
    std::string bv_s;
    bool bv_eco = false;
    auto* bv_cmd = app.add_subcommand("bv", "Bernstein-Vazirani");
    bv_cmd->add_option("--s", bv_s, "Hidden bitstring")->required();
    bv_cmd->add_flag("--economical", bv_eco, "Phase-oracle variant without the ancilla");
    bv_cmd->callback([&] {
        job = [&](RunReport& r) {
            const auto s = from_bitstring(bv_s);
            const int n = static_cast<int>(bv_s.size());
            const auto oracle = bv_eco ? synth_bv_phase_oracle(s, n) : synth_bv_oracle(s, n);
            const auto res = bernstein_vazirani(oracle, n, bv_eco, common.seed);
            r.algorithm = "bv";
            r.parameters = {{"s", bv_s}, {"economical", bv_eco}};
            r.answer = to_bitstring(res.answer, n);
            take_distribution(r, res, common);
        };
    });

    // simon
    std::string simon_s, simon_table;
    int simon_restarts = 10;
    auto* simon_cmd = app.add_subcommand("simon", "Simon's hidden-string algorithm");
    auto* simon_s_opt = simon_cmd->add_option("--s", simon_s, "Hidden string; uses f(x) = min(x, x xor s)");
    auto* simon_table_opt = simon_cmd->add_option("--table", simon_table, "Truth table file of a two-to-one function");
    simon_s_opt->excludes(simon_table_opt);
    simon_cmd->add_option("--max-restarts", simon_restarts, "Extra batches of n-1 rounds")->capture_default_str()->check(CLI::NonNegativeNumber);
    simon_cmd->callback([&] {
        job = [&](RunReport& r) {
            TruthTable tt = [&] {
                if (!simon_table.empty()) return read_table(simon_table);
                if (simon_s.empty()) throw domain_error("simon needs --s or --table");
                const auto s = from_bitstring(simon_s);
                if (s == 0) throw domain_error("hidden string must be nonzero");
                const int n = static_cast<int>(simon_s.size());
                return TruthTable::from_function(n, n, [s](std::uint64_t x) { return std::min(x, x ^ s); });
            }();
            if (tt.n_in != tt.n_out) throw domain_error("simon needs a table with as many outputs as inputs");
            const int n = tt.n_in;
            const auto res = simon(synth_multi_oracle(tt), n, [&](std::uint64_t x) { return tt(x); }, simon_restarts, common.seed);
            r.algorithm = "simon";
            r.parameters = {{"n", n}, {"max_restarts", simon_restarts}};
            if (!simon_s.empty()) r.parameters["s"] = simon_s;
            else r.parameters["table"] = simon_table;
            r.answer = res.success ? Json(to_bitstring(res.answer, n)) : Json(nullptr);
            r.success = res.success;
            take_distribution(r, res, common);
        };
    });

    // grover
    int grover_n = 0;
    std::string grover_marked, grover_variant = "standard";
    std::optional<int> grover_t;
    auto* grover_cmd = app.add_subcommand("grover", "Grover search");
    grover_cmd->add_option("--n", grover_n, "Input width")->required()->check(CLI::Range(1, 19));
    grover_cmd->add_option("--marked", grover_marked, "Comma-separated marked bitstrings")->required();
    grover_cmd->add_option("--variant", grover_variant, "standard or economical")
        ->capture_default_str()
        ->check(CLI::IsMember({"standard", "economical"}));
    grover_cmd->add_option("--t", grover_t, "Iteration count override")->check(CLI::NonNegativeNumber);
    grover_cmd->callback([&] {
        job = [&](RunReport& r) {
            const auto variant = grover_variant == "standard" ? GroverVariant::standard : GroverVariant::economical;
            const auto res = grover(parse_marked(grover_marked, grover_n), grover_n, variant, grover_t, common.seed);
            r.algorithm = "grover";
            r.parameters = {{"n", grover_n}, {"marked", split_csv(grover_marked)}, {"variant", grover_variant}};
            if (grover_t) r.parameters["t"] = *grover_t;
            r.answer = {{"x", to_bitstring(res.answer, grover_n)},
                        {"iterations", res.iterations},
                        {"success_probability", cli::clean(res.success_probability)},
                        {"uniform_fallback", res.uniform_fallback}};
            r.success = res.success;
            take_distribution(r, res, common);
        };
    });

    // sat
    std::string sat_expr;
    std::optional<std::uint64_t> sat_m;
    auto* sat_cmd = app.add_subcommand("sat", "Grover search for a satisfying assignment");
    sat_cmd->add_option("--expr", sat_expr, "Expression over a..z with ! & ^ | and parentheses")->required();
    sat_cmd->add_option("--m", sat_m, "Known number of solutions")->check(CLI::PositiveNumber);
    sat_cmd->callback([&] {
        job = [&](RunReport& r) {
            const auto parsed = parse_expression(sat_expr);
            std::vector<std::string> names;
            for (char c : parsed.variables) names.emplace_back(1, c);
            const int n = static_cast<int>(names.size());
            const auto res = sat_solve(parsed.expr, n, sat_m, common.seed);
            r.algorithm = "sat";
            r.parameters = {{"expr", sat_expr}, {"variables", names}};
            if (sat_m) r.parameters["m"] = *sat_m;
            if (res.success)
                r.answer = {{"assignment", assignment_json(res.answer, names)},
                            {"bitstring", to_bitstring(res.answer, n)},
                            {"iterations", res.iterations},
                            {"success_probability", cli::clean(res.success_probability)}};
            else
                r.answer = nullptr;
            r.success = res.success;
            take_distribution(r, res, common);
        };
    });

    // shor
    std::uint64_t shor_N = 0;
    std::optional<std::uint64_t> shor_a;
    std::string shor_mode = "lv";
    int shor_rounds = 32;
    auto* shor_cmd = app.add_subcommand("shor", "Shor's factoring algorithm");
    shor_cmd->add_option("--N", shor_N, "Number to factor")->required()->check(CLI::Range(std::uint64_t{4}, std::uint64_t{1} << 10));
    shor_cmd->add_option("--a", shor_a, "Fixed base");
    shor_cmd->add_option("--mode", shor_mode, "lv (Las Vegas) or mc (Monte Carlo)")->capture_default_str()->check(CLI::IsMember({"lv", "mc"}));
    shor_cmd->add_option("--max-rounds", shor_rounds, "Bound on quantum rounds")->capture_default_str()->check(CLI::PositiveNumber);
    shor_cmd->callback([&] {
        job = [&](RunReport& r) {
            const auto mode = shor_mode == "lv" ? ShorMode::las_vegas : ShorMode::monte_carlo;
            const auto res = shor_factor(shor_N, mode, common.seed, shor_rounds, shor_a);
            r.algorithm = "shor";
            r.parameters = {{"N", shor_N}, {"mode", shor_mode}, {"max_rounds", shor_rounds}};
            if (shor_a) r.parameters["a"] = *shor_a;
            r.answer = res.success ? Json(res.answer) : Json(nullptr);
            r.success = res.success;
            r.parameters["route"] = to_string(res.route);
            r.parameters["quantum_rounds"] = res.rounds_used;
            take_distribution(r, res, common);
        };
    });

    // dlog
    std::uint64_t dlog_N = 0, dlog_a = 0, dlog_b = 0;
    auto* dlog_cmd = app.add_subcommand("dlog", "Discrete logarithm when the order of a is a power of two");
    dlog_cmd->add_option("--N", dlog_N, "Modulus")->required()->check(CLI::Range(std::uint64_t{3}, std::uint64_t{1} << 12));
    dlog_cmd->add_option("--a", dlog_a, "Base")->required();
    dlog_cmd->add_option("--b", dlog_b, "Target")->required();
    dlog_cmd->callback([&] {
        job = [&](RunReport& r) {
            const auto res = shor_dlog_pow2(dlog_N, dlog_a, dlog_b, common.seed);
            r.algorithm = "dlog";
            r.parameters = {{"N", dlog_N}, {"a", dlog_a}, {"b", dlog_b}, {"order", res.problem.order}};
            r.answer = res.success ? Json(res.answer) : Json(nullptr);
            r.success = res.success;
            take_distribution(r, res, common);
        };
    });

    // qpe-order
    std::uint64_t qo_N = 0, qo_a = 0;
    auto* qo_cmd = app.add_subcommand("qpe-order", "Order finding by phase estimation");
    qo_cmd->add_option("--N", qo_N, "Modulus")->required()->check(CLI::Range(std::uint64_t{3}, std::uint64_t{1} << 10));
    qo_cmd->add_option("--a", qo_a, "Base")->required();
    qo_cmd->callback([&] {
        job = [&](RunReport& r) {
            const auto res = qpe_order_finding(qo_a, qo_N, common.seed);
            const std::uint64_t q = std::uint64_t{1} << res.m;
            const auto candidate = best_order_candidate(res.answer, q, qo_N);
            r.algorithm = "qpe-order";
            r.parameters = {{"N", qo_N}, {"a", qo_a}, {"m", res.m}};
            r.answer = {{"phi_tilde", res.answer}, {"order_candidate", candidate ? Json(*candidate) : Json(nullptr)}};
            take_distribution(r, res, common);
        };
    });

    // count
    int count_n = 0;
    std::string count_marked;
    std::optional<int> count_m;
    auto* count_cmd = app.add_subcommand("count", "Quantum counting");
    count_cmd->add_option("--n", count_n, "Input width")->required()->check(CLI::Range(1, limits::max_unitary_qubits));
    count_cmd->add_option("--marked", count_marked, "Comma-separated marked bitstrings")->required();
    count_cmd->add_option("--m", count_m, "Counting register size")->check(CLI::Range(1, 12));
    count_cmd->callback([&] {
        job = [&](RunReport& r) {
            const auto res = quantum_counting(parse_marked(count_marked, count_n), count_n, count_m, common.seed);
            r.algorithm = "count";
            r.parameters = {{"n", count_n}, {"marked", split_csv(count_marked)}, {"m", res.m}};
            r.answer = {{"estimate", cli::clean(res.answer)}, {"phi_tilde", res.phi_tilde}};
            take_distribution(r, res, common);
        };
    });

    // qft-check
    int qft_n = 0;
    auto* qft_cmd = app.add_subcommand("qft-check", "Compare the QFT circuit with the DFT matrix");
    qft_cmd->add_option("--n", qft_n, "Width")->required()->check(CLI::Range(1, limits::max_unitary_qubits));
    qft_cmd->callback([&] {
        job = [&](RunReport& r) {
            const auto c = qft_circuit(qft_n);
            const double err = (unitary_of(c) - dft_matrix(qft_n)).cwiseAbs().maxCoeff();
            r.algorithm = "qft-check";
            r.parameters = {{"n", qft_n}};
            r.answer = {{"gate_count", c.size()}, {"expected_gate_count", qft_gate_count(qft_n)}, {"max_error", err}};
            r.success = c.size() == qft_gate_count(qft_n) && err <= 1e-10;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e, std::cerr, std::cerr);
        std::cerr << app.help();
        return exit_usage;
    }
    if (*shots_opt) common.shots = shots_flag;

    RunReport report;
    report.seed = common.seed;
    report.shots = common.shots;
    try {
        const auto start = std::chrono::steady_clock::now();
        job(report);
        report.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    }

    if (common.json)
        std::cout << cli::to_json(report).dump() << "\n";
    else
        cli::print_human(std::cout, report);
    return report.success ? 0 : exit_failure;
}
