#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>

namespace qsim::limits {

inline constexpr int default_max_qubits = 20;
inline constexpr int hard_max_qubits = 24;
inline constexpr int max_unitary_qubits = 12;
inline constexpr std::uint64_t max_shots = 10'000'000;

// Simulation width cap; QSIM_MAX_QUBITS overrides the default, clamped to the hard maximum.
inline int max_qubits() {
    const char* env = std::getenv("QSIM_MAX_QUBITS");
    if (env == nullptr || *env == '\0') return default_max_qubits;
    try {
        int v = std::stoi(env);
        if (v < 1) return default_max_qubits;
        return v > hard_max_qubits ? hard_max_qubits : v;
    } catch (...) {
        return default_max_qubits;
    }
}

}  // namespace qsim::limits
