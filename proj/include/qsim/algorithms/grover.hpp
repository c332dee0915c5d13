#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qsim/algorithms/result.hpp"
#include "qsim/algorithms/skeleton.hpp"
#include "qsim/bits.hpp"
#include "qsim/circuit.hpp"
#include "qsim/errors.hpp"
#include "qsim/oracles/boolean_expr.hpp"
#include "qsim/oracles/synthesis.hpp"
#include "qsim/oracles/truth_table.hpp"
#include "qsim/random.hpp"

namespace qsim {

struct GroverGeometry {
    double theta = 0.0;  // sin(theta/2) = sqrt(m/N)
    int iterations = 0;  // floor(pi/4 sqrt(N/m))
    double predicted_success = 0.0;
};

inline double grover_success(double theta, int t) {
    const double s = std::sin((2 * t + 1) * theta / 2);
    return s * s;
}

inline GroverGeometry grover_geometry(std::uint64_t marked_count, std::uint64_t N) {
    if (marked_count == 0 || marked_count > N) throw domain_error("grover_geometry needs 1 <= m <= N");
    const double ratio = static_cast<double>(marked_count) / static_cast<double>(N);
    GroverGeometry g;
    g.theta = 2 * std::asin(std::sqrt(ratio));
    g.iterations = static_cast<int>(std::floor(std::numbers::pi / 4 * std::sqrt(1.0 / ratio)));
    g.predicted_success = grover_success(g.theta, g.iterations);
    return g;
}

enum class GroverVariant { standard, economical };

inline std::string to_string(GroverVariant v) { return v == GroverVariant::standard ? "standard" : "economical"; }

// Inversion about the mean up to a global sign: H^n, phase flip of |0...0>, H^n.
// The standard form kicks the flip onto an ancilla held in |->.
inline Circuit grover_diffusion(int n, GroverVariant v) {
    const int width = v == GroverVariant::standard ? n + 1 : n;
    Circuit c(width);
    c.h_layer(qubit_range(0, n));
    if (v == GroverVariant::standard) {
        std::vector<Control> zeros;
        for (int q = 0; q < n; ++q) zeros.push_back(neg(q));
        c.mcx(zeros, n);
    } else {
        c.append(synth_phase_oracle({0}, n));
    }
    c.h_layer(qubit_range(0, n));
    return c;
}

inline OracleSkeleton grover_skeleton(const std::vector<std::uint64_t>& marked, int n, GroverVariant v, int t) {
    if (n < 1) throw domain_error("grover needs n >= 1");
    if (t < 0) throw domain_error("iteration count must be non-negative");
    OracleSkeleton sk;
    if (v == GroverVariant::standard) {
        sk.prepare = Circuit(n + 1);
        sk.prepare.x(n).h_layer(qubit_range(0, n + 1));
        sk.oracle = synth_bit_oracle(TruthTable::from_ones(n, marked));
    } else {
        sk.prepare = Circuit(n);
        sk.prepare.h_layer(qubit_range(0, n));
        sk.oracle = synth_phase_oracle(marked, n);
    }
    sk.post = grover_diffusion(n, v);
    sk.repetitions = t;
    sk.measured = qubit_range(0, n);
    return sk;
}

struct GroverResult : AlgorithmResult<std::uint64_t> {
    GroverGeometry geometry;
    int iterations = 0;
    double success_probability = 0.0;  // exact mass on the marked set
    bool uniform_fallback = false;     // |M| > N/2: no iterations, uniform sample
};

namespace detail {

inline GroverResult grover_run(const std::vector<std::uint64_t>& marked, int n, GroverVariant v, int t,
                               std::uint64_t seed) {
    const auto probs = grover_skeleton(marked, n, v, t).distribution();
    GroverResult out;
    out.iterations = t;
    out.exact_distribution = exact_distribution(probs, n);
    for (auto x : detail::sorted_unique(marked)) out.success_probability += probs[x];
    out.answer = sample_outcome(probs, seed);
    out.rounds_used = 1;
    return out;
}

}  // namespace detail

inline GroverResult grover(const std::vector<std::uint64_t>& marked, int n, GroverVariant v,
                           std::optional<int> t_override = std::nullopt, std::uint64_t seed = 0) {
    if (n < 1 || n > 62) throw domain_error("grover width out of range");
    const auto unique = detail::sorted_unique(marked);
    const std::uint64_t N = std::uint64_t{1} << n;
    if (unique.empty()) throw domain_error("grover needs at least one marked element");
    if (unique.back() >= N) throw domain_error("marked element out of range");
    const auto geometry = grover_geometry(unique.size(), N);
    const bool fallback = !t_override && 2 * unique.size() > N;
    const int t = t_override ? *t_override : (fallback ? 0 : geometry.iterations);
    auto out = detail::grover_run(unique, n, v, t, seed);
    out.geometry = geometry;
    out.uniform_fallback = fallback;
    out.success = std::binary_search(unique.begin(), unique.end(), out.answer);
    return out;
}

// Guesses m = 1, 2, 4, ..., N/2 and checks each sample with the probe.
inline GroverResult grover_unknown_m(const std::function<bool(std::uint64_t)>& probe, int n, std::uint64_t seed = 0,
                                     GroverVariant v = GroverVariant::economical) {
    if (n < 1 || n > 20) throw domain_error("grover width out of range");
    const std::uint64_t N = std::uint64_t{1} << n;
    std::vector<std::uint64_t> marked;
    for (std::uint64_t x = 0; x < N; ++x)
        if (probe(x)) marked.push_back(x);
    GroverResult out;
    out.success = false;
    int guesses = 0;
    for (std::uint64_t guess = 1; 2 * guess <= N; guess *= 2) {
        const auto g = grover_geometry(guess, N);
        auto run = detail::grover_run(marked, n, v, g.iterations, derive_seed(seed, static_cast<std::uint64_t>(guesses)));
        ++guesses;
        run.geometry = g;
        run.rounds_used = guesses;
        run.success = probe(run.answer);
        out = run;
        if (out.success) break;
    }
    return out;
}

struct SatResult : AlgorithmResult<std::uint64_t> {
    int iterations = 0;
    double success_probability = 0.0;  // exact mass on satisfying assignments
    int circuit_qubits = 0;
};

namespace detail {

inline SatResult sat_run(const BooleanExpr& e, const ExprCircuit& oracle, int n_vars, int t, std::uint64_t seed) {
    const int width = oracle.num_qubits();
    OracleSkeleton sk;
    sk.prepare = Circuit(width);
    for (int i = 0; i < oracle.ancilla_count; ++i)
        if (oracle.ancilla_init[static_cast<std::size_t>(i)]) sk.prepare.x(n_vars + i);
    sk.prepare.h_layer(qubit_range(0, n_vars));
    sk.oracle = oracle.circuit;
    sk.post = Circuit(width);
    sk.post.append(grover_diffusion(n_vars, GroverVariant::economical), qubit_range(0, n_vars));
    sk.repetitions = t;
    sk.measured = qubit_range(0, n_vars);
    const auto probs = sk.distribution();

    SatResult out;
    out.iterations = t;
    out.circuit_qubits = width;
    out.exact_distribution = exact_distribution(probs, n_vars);
    for (std::uint64_t x = 0; x < probs.size(); ++x)
        if (e.eval(x, n_vars)) out.success_probability += probs[x];
    out.answer = sample_outcome(probs, seed);
    out.success = e.eval(out.answer, n_vars);
    out.rounds_used = 1;
    return out;
}

}  // namespace detail

// Grover over the compiled phase oracle of e. Without a known solution count the
// doubling schedule of grover_unknown_m is used. Every answer is checked classically.
inline SatResult sat_solve(const BooleanExpr& e, int n_vars, std::optional<std::uint64_t> m_known = std::nullopt,
                           std::uint64_t seed = 0) {
    if (n_vars < 1 || n_vars > 12) throw domain_error("sat_solve supports 1..12 variables");
    const std::uint64_t N = std::uint64_t{1} << n_vars;
    const ExprCircuit oracle = expr_phase_oracle(e, n_vars);
    if (m_known) {
        if (*m_known == 0 || *m_known > N) throw domain_error("known solution count out of range");
        const int t = 2 * *m_known > N ? 0 : grover_geometry(*m_known, N).iterations;
        return detail::sat_run(e, oracle, n_vars, t, seed);
    }
    SatResult out;
    out.success = false;
    int guesses = 0;
    for (std::uint64_t guess = 1; 2 * guess <= N; guess *= 2) {
        auto run = detail::sat_run(e, oracle, n_vars, grover_geometry(guess, N).iterations,
                                   derive_seed(seed, static_cast<std::uint64_t>(guesses)));
        run.rounds_used = ++guesses;
        out = run;
        if (out.success) break;
    }
    return out;
}

}  // namespace qsim
