#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "qsim/algorithms/result.hpp"
#include "qsim/algorithms/skeleton.hpp"
#include "qsim/circuit.hpp"
#include "qsim/errors.hpp"
#include "qsim/oracles/synthesis.hpp"
#include "qsim/oracles/truth_table.hpp"
#include "qsim/random.hpp"

namespace qsim {

enum class Verdict { constant, balanced };

inline std::string to_string(Verdict v) { return v == Verdict::constant ? "constant" : "balanced"; }

// Standard form: |0>|1>, H on both, U_f, H on the first qubit.
// Economical form: one qubit, H u'_f H with the phase oracle.
inline OracleSkeleton deutsch_skeleton(const TruthTable& f, bool economical) {
    if (f.n_in != 1 || f.n_out != 1) throw domain_error("deutsch needs a one-bit function");
    const std::vector<std::uint64_t> ones = [&] {
        std::vector<std::uint64_t> v;
        for (std::uint64_t x = 0; x < 2; ++x)
            if (f(x)) v.push_back(x);
        return v;
    }();
    OracleSkeleton sk;
    if (economical) {
        sk.prepare = Circuit(1);
        sk.prepare.h(0);
        sk.oracle = synth_phase_oracle(ones, 1);
        sk.post = Circuit(1);
        sk.post.h(0);
    } else {
        sk.prepare = Circuit(2);
        sk.prepare.x(1).h(0).h(1);
        sk.oracle = synth_bit_oracle(f);
        sk.post = Circuit(2);
        sk.post.h(0);
    }
    sk.measured = {0};
    return sk;
}

inline AlgorithmResult<Verdict> deutsch(const TruthTable& f, bool economical, std::uint64_t seed = 0) {
    const auto sk = deutsch_skeleton(f, economical);
    const auto probs = sk.distribution();
    AlgorithmResult<Verdict> out;
    out.exact_distribution = exact_distribution(probs, 1);
    out.answer = sample_outcome(probs, seed) == 0 ? Verdict::constant : Verdict::balanced;
    out.rounds_used = 1;
    return out;
}

// Oracle on n+1 qubits: |0...0>|1>, H everywhere, U_f, H on the first n qubits.
inline OracleSkeleton deutsch_jozsa_skeleton(const Circuit& oracle, int n) {
    if (n < 1 || oracle.num_qubits() != n + 1) throw domain_error("deutsch_jozsa needs an (n+1)-qubit oracle");
    OracleSkeleton sk;
    sk.prepare = Circuit(n + 1);
    sk.prepare.x(n).h_layer(qubit_range(0, n + 1));
    sk.oracle = oracle;
    sk.post = Circuit(n + 1);
    sk.post.h_layer(qubit_range(0, n));
    sk.measured = qubit_range(0, n);
    return sk;
}

// Reports constant iff the first register reads 0...0. The promise is not checked.
inline AlgorithmResult<Verdict> deutsch_jozsa(const Circuit& oracle, int n, std::uint64_t seed = 0) {
    const auto sk = deutsch_jozsa_skeleton(oracle, n);
    const auto probs = sk.distribution();
    AlgorithmResult<Verdict> out;
    out.exact_distribution = exact_distribution(probs, n);
    out.answer = sample_outcome(probs, seed) == 0 ? Verdict::constant : Verdict::balanced;
    out.rounds_used = 1;
    return out;
}

struct ClassicalVerdict {
    Verdict verdict = Verdict::constant;
    double bound = 0.0;  // probability that a "constant" verdict is correct
};

// k uniform probes with repetition; any disagreement proves the function balanced.
inline ClassicalVerdict dj_classical_randomized(const std::function<int(std::uint64_t)>& f_probe, int n, int k,
                                                std::uint64_t seed) {
    if (k < 2) throw domain_error("the randomized test needs k >= 2 probes");
    if (n < 1 || n > 63) throw domain_error("domain width out of range");
    Rng rng(seed);
    const std::uint64_t domain = std::uint64_t{1} << n;
    const int first = f_probe(uniform_below(rng, domain));
    ClassicalVerdict out;
    out.bound = 1.0 - std::ldexp(1.0, -(k - 1));
    for (int i = 1; i < k; ++i)
        if (f_probe(uniform_below(rng, domain)) != first) {
            out.verdict = Verdict::balanced;
            break;
        }
    return out;
}

}  // namespace qsim
