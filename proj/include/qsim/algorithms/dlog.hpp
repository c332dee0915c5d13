#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qsim/algorithms/result.hpp"
#include "qsim/algorithms/shor.hpp"
#include "qsim/bits.hpp"
#include "qsim/errors.hpp"
#include "qsim/numtheory.hpp"
#include "qsim/oracles/modular.hpp"
#include "qsim/random.hpp"

namespace qsim {

struct DlogProblem {
    std::uint64_t order = 0;     // r = ord_N(a)
    std::uint64_t log_value = 0; // s with a^s = b, found by enumeration
    int m = 0;                   // log2 r, width of each exponent register
    int n = 0;                   // ceil(log2 N)
};

inline DlogProblem dlog_problem(std::uint64_t N, std::uint64_t a, std::uint64_t b) {
    if (N < 3) throw domain_error("discrete log needs N >= 3");
    a %= N;
    b %= N;
    if (gcd(a, N) != 1 || gcd(b, N) != 1) throw domain_error("discrete log needs a and b coprime to N");
    DlogProblem p;
    p.order = mult_order(a, N);
    p.n = ceil_log2(N);
    std::uint64_t power = 1 % N;
    bool in_group = false;
    for (std::uint64_t s = 0; s < p.order; ++s, power = detail::mul_mod(power, a, N))
        if (power == b) {
            p.log_value = s;
            in_group = true;
            break;
        }
    if (!in_group) throw domain_error("b is not a power of a");
    return p;
}

// |x>|y>|z> -> |x>|y>|z xor a^x b^y mod N>, exponent registers of m qubits each.
inline PermutationOracle dlog_oracle(std::uint64_t N, std::uint64_t a, std::uint64_t b, int m) {
    const int n = ceil_log2(N);
    const int width = 2 * m + n;
    if (m < 1 || width > limits::hard_max_qubits) throw resource_error("discrete-log register too wide");
    const std::uint64_t xdim = std::uint64_t{1} << m, zdim = std::uint64_t{1} << n;
    std::vector<std::uint64_t> map(std::size_t{1} << width);
    std::uint64_t ax = 1 % N;
    for (std::uint64_t x = 0; x < xdim; ++x, ax = detail::mul_mod(ax, a % N, N)) {
        std::uint64_t f = ax;
        for (std::uint64_t y = 0; y < xdim; ++y, f = detail::mul_mod(f, b % N, N))
            for (std::uint64_t z = 0; z < zdim; ++z) {
                const std::uint64_t base = (x * xdim + y) * zdim;
                map[base + z] = base + (z ^ f);
            }
    }
    return {width, std::move(map)};
}

struct DlogResult : AlgorithmResult<std::uint64_t> {
    DlogProblem problem;
    std::uint64_t r1 = 0, r2 = 0;
    std::uint64_t third_register = 0;
    double success_probability = 0.0;  // exact, from the pre-measurement state
    std::vector<double> joint;         // (r1, r2) given the measured third register
    std::vector<double> unconditional; // (r1, r2) with the third register traced out
};

// Succeeds iff gcd(r1, r) = 1, returning s = r2 / r1 mod r.
inline DlogResult shor_dlog_pow2(std::uint64_t N, std::uint64_t a, std::uint64_t b, std::uint64_t seed) {
    DlogResult out;
    out.problem = dlog_problem(N, a, b);
    const auto r = out.problem.order;
    if (r < 2 || !is_power_of_two(r)) throw domain_error("the order of a must be a power of two (and at least 2)");
    const int m = floor_log2(r);
    const int n = out.problem.n;
    out.problem.m = m;
    check_simulation_width(2 * m + n);

    Circuit hadamards(2 * m + n);
    hadamards.h_layer(qubit_range(0, 2 * m));
    auto prepared = simulate(hadamards);
    apply_permutation_inplace(prepared, dlog_oracle(N, a, b, m));

    auto transform = [&](StateVector& s) {
        detail::apply_inverse_qft(s, 0, m);
        detail::apply_inverse_qft(s, m, m);
    };
    auto traced = prepared;
    transform(traced);
    out.unconditional = marginal(traced, qubit_range(0, 2 * m));

    Rng rng(seed);
    auto collapsed = measure(prepared, qubit_range(2 * m, n), rng);
    out.third_register = collapsed.value();
    transform(collapsed.post_state);
    out.joint = marginal(collapsed.post_state, qubit_range(0, 2 * m));
    out.exact_distribution = exact_distribution(out.joint, 2 * m);
    for (std::uint64_t k = 0; k < out.joint.size(); ++k)
        if (gcd(k >> m, r) == 1) out.success_probability += out.joint[k];

    const std::uint64_t pair = sample_index(out.joint, rng);
    out.r1 = pair >> m;
    out.r2 = pair & (r - 1);
    out.rounds_used = 1;
    out.success = gcd(out.r1, r) == 1;
    if (out.success) out.answer = detail::mul_mod(out.r2, mod_inverse(out.r1, r), r);
    return out;
}

}  // namespace qsim
