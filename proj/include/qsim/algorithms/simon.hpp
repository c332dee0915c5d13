#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "qsim/algorithms/result.hpp"
#include "qsim/algorithms/skeleton.hpp"
#include "qsim/circuit.hpp"
#include "qsim/errors.hpp"
#include "qsim/gf2.hpp"
#include "qsim/random.hpp"

namespace qsim {

// 2n qubits: H on the first register, oracle, H on the first register.
// The second-register measurement is a driver step taken before the final layer.
inline OracleSkeleton simon_skeleton(const Circuit& oracle, int n) {
    if (n < 1 || oracle.num_qubits() != 2 * n) throw domain_error("simon needs a 2n-qubit oracle");
    OracleSkeleton sk;
    sk.prepare = Circuit(2 * n);
    sk.prepare.h_layer(qubit_range(0, n));
    sk.oracle = oracle;
    sk.post = Circuit(2 * n);
    sk.post.h_layer(qubit_range(0, n));
    sk.measured = qubit_range(0, n);
    return sk;
}

// Exact first-register distribution of one quantum round.
inline std::vector<double> simon_round_distribution(const Circuit& oracle, int n) {
    return simon_skeleton(oracle, n).distribution();
}

class SimonRounds {
public:
    SimonRounds(const Circuit& oracle, int n) : n_(n), after_oracle_(n) {
        const auto sk = simon_skeleton(oracle, n);
        Circuit front(2 * n);
        front.append(sk.prepare).append(sk.oracle);
        after_oracle_ = simulate(front);
        hadamards_ = sk.post;
    }

    int n() const { return n_; }

    // Measure the second register, apply the final H layer, measure the first.
    std::uint64_t sample(Rng& rng) const {
        auto collapsed = measure(after_oracle_, qubit_range(n_, n_), rng).post_state;
        simulate_inplace(hadamards_, collapsed);
        return measure(collapsed, qubit_range(0, n_), rng).value();
    }

    // n-1 rounds as one equation system.
    BitMatrix batch(Rng& rng) const {
        BitMatrix eq(n_);
        for (int i = 0; i + 1 < n_; ++i) eq.add_row(sample(rng));
        return eq;
    }

private:
    int n_;
    StateVector after_oracle_;
    Circuit hadamards_{1};
};

// Batches of n-1 rounds until the system reaches rank n-1, at most max_restarts + 1 batches.
inline AlgorithmResult<std::uint64_t> simon(const Circuit& oracle, int n, const std::function<std::uint64_t(std::uint64_t)>& f_probe,
                                            int max_restarts, std::uint64_t seed) {
    if (n < 2) throw domain_error("simon needs n >= 2");
    if (max_restarts < 0) throw domain_error("max_restarts must be non-negative");
    const SimonRounds rounds(oracle, n);
    AlgorithmResult<std::uint64_t> out;
    out.exact_distribution = exact_distribution(simon_round_distribution(oracle, n), n);
    out.success = false;
    Rng rng(seed);
    for (int batch = 0; batch <= max_restarts; ++batch) {
        const BitMatrix eq = rounds.batch(rng);
        out.rounds_used += n - 1;
        if (rank(eq) != n - 1) continue;
        out.answer = simon_postprocess(eq, f_probe);
        out.success = true;
        break;
    }
    return out;
}

}  // namespace qsim
