#pragma once

// Common oracle-algorithm shape: a preparation (Hadamard) layer, then the
// oracle followed by its post-processing block, repeated, then a measurement.

#include <cstdint>
#include <vector>

#include "qsim/circuit.hpp"
#include "qsim/qstate.hpp"
#include "qsim/random.hpp"

namespace qsim {

struct OracleSkeleton {
    Circuit prepare;
    Circuit oracle;
    Circuit post;
    int repetitions = 1;
    std::vector<int> measured;

    int num_qubits() const { return prepare.num_qubits(); }

    Circuit build() const {
        Circuit c(num_qubits());
        c.append(prepare);
        for (int k = 0; k < repetitions; ++k) c.append(oracle).append(post);
        c.measure(measured);
        return c;
    }

    // Exact distribution of the measured register, from the given initial basis index.
    std::vector<double> distribution(std::uint64_t initial_index = 0) const {
        return marginal(simulate(build(), basis_state(num_qubits(), initial_index)), measured);
    }
};

inline std::uint64_t sample_outcome(const std::vector<double>& probs, std::uint64_t seed) {
    Rng rng(seed);
    return sample_index(probs, rng);
}

}  // namespace qsim
