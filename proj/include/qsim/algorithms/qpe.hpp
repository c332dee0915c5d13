#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qsim/algorithms/grover.hpp"
#include "qsim/algorithms/result.hpp"
#include "qsim/algorithms/shor.hpp"
#include "qsim/algorithms/dlog.hpp"
#include "qsim/circuit.hpp"
#include "qsim/errors.hpp"
#include "qsim/gates.hpp"
#include "qsim/oracles/modular.hpp"
#include "qsim/random.hpp"

namespace qsim {

namespace detail {

// counting[i] controls U^{2^{m-1-i}}; powers come from repeated squaring.
inline void controlled_powers(StateVector& s, const std::vector<int>& counting, const PermutationOracle& u,
                              const std::vector<int>& targets) {
    PermutationOracle power = u;
    const auto m = counting.size();
    for (std::size_t j = 0; j < m; ++j) {
        apply_permutation_inplace(s, power, targets, {pos(counting[m - 1 - j])});
        if (j + 1 < m) power = power.after(power);
    }
}

inline void controlled_powers(StateVector& s, const std::vector<int>& counting, const Gate& u,
                              const std::vector<int>& targets) {
    Gate power = u;
    const auto m = counting.size();
    for (std::size_t j = 0; j < m; ++j) {
        apply_inplace(s, make_app(power, targets, {pos(counting[m - 1 - j])}));
        if (j + 1 < m) power = Gate(u.name + "^" + std::to_string(std::uint64_t{2} << j), power.matrix * power.matrix);
    }
}

inline int unitary_width(const PermutationOracle& u) { return u.total_qubits(); }
inline int unitary_width(const Gate& u) { return u.arity; }

}  // namespace detail

struct QpeResult : AlgorithmResult<std::uint64_t> {
    int m = 0;
    std::vector<double> probabilities;  // over the m-bit read-out
};

// m counting qubits on top of the eigenstate register; the answer is the m-bit
// integer phi_tilde with phi ~ phi_tilde / 2^m.
template <class Unitary>
QpeResult qpe(const Unitary& u, const StateVector& eigenstate, int m, std::uint64_t seed = 0) {
    const int k = detail::unitary_width(u);
    if (m < 1) throw domain_error("qpe needs m >= 1");
    if (eigenstate.num_qubits() != k) throw domain_error("eigenstate width does not match the unitary");
    check_simulation_width(m + k);
    Circuit hadamards(m + k);
    hadamards.h_layer(qubit_range(0, m));
    auto s = simulate(hadamards, kron(basis_state(m, 0), eigenstate));
    detail::controlled_powers(s, qubit_range(0, m), u, qubit_range(m, k));
    detail::apply_inverse_qft(s, 0, m);

    QpeResult out;
    out.m = m;
    out.probabilities = marginal(s, qubit_range(0, m));
    out.exact_distribution = exact_distribution(out.probabilities, m);
    out.answer = sample_outcome(out.probabilities, seed);
    out.rounds_used = 1;
    return out;
}

// Order finding: U = multiplication by a mod N on |1>, with the factoring register size.
inline QpeResult qpe_order_finding(std::uint64_t a, std::uint64_t N, std::uint64_t seed = 0) {
    const auto u = modmul_oracle(a, N);
    const int m = shor_registers(N).m;
    return qpe(u, basis_state(u.total_qubits(), 1), m, seed);
}

struct QpeDlogResult : AlgorithmResult<std::uint64_t> {
    int m = 0;
    std::uint64_t phi1 = 0, phi2 = 0;
    std::vector<double> joint;  // index phi1 * 2^m + phi2
    std::optional<std::uint64_t> log_value;  // recovered when r = 2^m and gcd(phi1, r) = 1
};

// Two counting registers controlling U_a and U_b on a shared |1> register.
inline QpeDlogResult qpe_dlog(std::uint64_t N, std::uint64_t a, std::uint64_t b, int m, std::uint64_t seed = 0) {
    const auto problem = dlog_problem(N, a, b);
    if (m < 1) throw domain_error("qpe_dlog needs m >= 1");
    const auto ua = modmul_oracle(a, N);
    const auto ub = modmul_oracle(b, N);
    const int k = ua.total_qubits();
    check_simulation_width(2 * m + k);
    Circuit hadamards(2 * m + k);
    hadamards.h_layer(qubit_range(0, 2 * m));
    auto s = simulate(hadamards, kron(basis_state(2 * m, 0), basis_state(k, 1)));
    detail::controlled_powers(s, qubit_range(0, m), ua, qubit_range(2 * m, k));
    detail::controlled_powers(s, qubit_range(m, m), ub, qubit_range(2 * m, k));
    detail::apply_inverse_qft(s, 0, m);
    detail::apply_inverse_qft(s, m, m);

    QpeDlogResult out;
    out.m = m;
    out.joint = marginal(s, qubit_range(0, 2 * m));
    out.exact_distribution = exact_distribution(out.joint, 2 * m);
    const std::uint64_t pair = sample_outcome(out.joint, seed);
    out.phi1 = pair >> m;
    out.phi2 = pair & ((std::uint64_t{1} << m) - 1);
    out.answer = pair;
    out.rounds_used = 1;
    const std::uint64_t r = problem.order;
    out.success = false;
    if (r == (std::uint64_t{1} << m) && gcd(out.phi1, r) == 1) {
        out.log_value = detail::mul_mod(out.phi2, mod_inverse(out.phi1, r), r);
        out.success = true;
    }
    return out;
}

// Exact Grover operator G * U_f as an n-qubit gate. The diffusion circuit is -G,
// so an X Z X Z pair (= -I) restores the sign.
inline Gate grover_operator(const std::vector<std::uint64_t>& marked, int n) {
    Circuit c(n);
    c.append(synth_phase_oracle(marked, n)).append(grover_diffusion(n, GroverVariant::economical));
    c.x(0).z(0).x(0).z(0);
    return Gate("G", unitary_of(c));
}

inline double counting_estimate(std::uint64_t phi_tilde, int m, int n) {
    const double s = std::sin(std::numbers::pi * static_cast<double>(phi_tilde) / std::ldexp(1.0, m));
    return std::ldexp(1.0, n) * s * s;
}

inline int default_counting_register(int n) { return (n + 1) / 2 + 1; }

struct CountingResult : AlgorithmResult<double> {
    int m = 0;
    std::uint64_t phi_tilde = 0;
    std::vector<double> probabilities;  // over phi_tilde
};

// QPE of G * U_f on the uniform state; |M| ~ N sin^2(pi phi_tilde / 2^m).
inline CountingResult quantum_counting(const std::vector<std::uint64_t>& marked, int n, std::optional<int> m = std::nullopt,
                                       std::uint64_t seed = 0) {
    if (n < 1 || n > limits::max_unitary_qubits) throw domain_error("counting width out of range");
    const int bits = m ? *m : default_counting_register(n);
    const auto q = qpe(grover_operator(marked, n), uniform_state(n), bits, seed);
    CountingResult out;
    out.m = bits;
    out.phi_tilde = q.answer;
    out.probabilities = q.probabilities;
    out.exact_distribution = q.exact_distribution;
    out.answer = counting_estimate(q.answer, bits, n);
    out.rounds_used = 1;
    return out;
}

}  // namespace qsim
