#pragma once

#include <cstdint>

#include "qsim/algorithms/result.hpp"
#include "qsim/algorithms/skeleton.hpp"
#include "qsim/circuit.hpp"
#include "qsim/errors.hpp"

namespace qsim {

// Standard: (n+1)-qubit CNOT oracle on |0...0>|->. Economical: n-qubit phase oracle.
inline OracleSkeleton bernstein_vazirani_skeleton(const Circuit& oracle, int n, bool economical) {
    const int width = economical ? n : n + 1;
    if (n < 1 || oracle.num_qubits() != width)
        throw domain_error(economical ? "economical BV needs an n-qubit phase oracle" : "BV needs an (n+1)-qubit oracle");
    OracleSkeleton sk;
    sk.prepare = Circuit(width);
    if (!economical) sk.prepare.x(n);
    sk.prepare.h_layer(qubit_range(0, width));
    sk.oracle = oracle;
    sk.post = Circuit(width);
    sk.post.h_layer(qubit_range(0, n));
    sk.measured = qubit_range(0, n);
    return sk;
}

inline AlgorithmResult<std::uint64_t> bernstein_vazirani(const Circuit& oracle, int n, bool economical,
                                                         std::uint64_t seed = 0) {
    const auto sk = bernstein_vazirani_skeleton(oracle, n, economical);
    const auto probs = sk.distribution();
    AlgorithmResult<std::uint64_t> out;
    out.exact_distribution = exact_distribution(probs, n);
    out.answer = sample_outcome(probs, seed);
    out.rounds_used = 1;
    return out;
}

}  // namespace qsim
