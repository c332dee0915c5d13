#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "qsim/algorithms/qft.hpp"
#include "qsim/algorithms/result.hpp"
#include "qsim/bits.hpp"
#include "qsim/circuit.hpp"
#include "qsim/errors.hpp"
#include "qsim/numtheory.hpp"
#include "qsim/oracles/modular.hpp"
#include "qsim/random.hpp"

namespace qsim {

struct ShorRegisters {
    std::uint64_t q = 0;
    int m = 0;  // exponent register, log2 q
    int n = 0;  // value register, ceil(log2 N)
};

inline ShorRegisters shor_registers(std::uint64_t N) {
    ShorRegisters reg;
    reg.q = shor_register_q(N);
    reg.m = floor_log2(reg.q);
    reg.n = ceil_log2(N);
    return reg;
}

namespace detail {

inline void check_shor_inputs(std::uint64_t a, std::uint64_t N) {
    if (N < 3 || N % 2 == 0 || is_prime(N)) throw domain_error("the quantum part needs an odd composite N");
    if (N > (std::uint64_t{1} << 12)) throw resource_error("N too large to simulate");
    if (a % N == 0 || gcd(a % N, N) != 1) throw domain_error("the quantum part needs gcd(a, N) = 1");
}

inline void apply_inverse_qft(StateVector& s, int first, int count) {
    Circuit c(s.num_qubits());
    c.append(inverse_qft_circuit(count), qubit_range(first, count));
    simulate_inplace(c, s);
}

}  // namespace detail

// Sum over l of |l>|a^l mod N>, before any measurement or Fourier transform.
inline StateVector shor_state_after_oracle(std::uint64_t a, std::uint64_t N) {
    detail::check_shor_inputs(a, N);
    const auto reg = shor_registers(N);
    check_simulation_width(reg.m + reg.n);
    Circuit hadamards(reg.m + reg.n);
    hadamards.h_layer(qubit_range(0, reg.m));
    auto s = simulate(hadamards);
    apply_permutation_inplace(s, modexp_oracle(a, N, reg.q));
    return s;
}

// First-register distribution after the inverse transform; conditioned on the
// second register reading `value` when given, unconditional otherwise.
inline std::vector<double> shor_first_register_distribution(std::uint64_t a, std::uint64_t N,
                                                            std::optional<std::uint64_t> value = std::nullopt) {
    const auto reg = shor_registers(N);
    auto s = shor_state_after_oracle(a, N);
    if (value) s = project(s, qubit_range(reg.m, reg.n), *value).post_state;
    detail::apply_inverse_qft(s, 0, reg.m);
    return marginal(s, qubit_range(0, reg.m));
}

// Number of k with k*r + offset < q.
inline std::uint64_t shor_c(std::uint64_t r, std::uint64_t offset, std::uint64_t q) {
    if (r == 0 || offset >= q) throw domain_error("shor_c needs r >= 1 and offset < q");
    return (q - offset + r - 1) / r;
}

// Closed-form probability of reading l when the collapsed register holds c terms spaced r apart.
inline double shor_probability(std::uint64_t ell, std::uint64_t r, std::uint64_t q, std::uint64_t c) {
    using u128 = unsigned __int128;
    if (c == 0 || q == 0) throw domain_error("shor_probability needs c, q >= 1");
    const auto lr = static_cast<std::uint64_t>((static_cast<u128>(ell) * r) % q);
    if (lr == 0) return static_cast<double>(c) / static_cast<double>(q);
    const auto lrc = static_cast<std::uint64_t>((static_cast<u128>(lr) * c) % q);
    const double pi = std::numbers::pi;
    const double num = std::sin(pi * static_cast<double>(lrc) / static_cast<double>(q));
    const double den = std::sin(pi * static_cast<double>(lr) / static_cast<double>(q));
    return num * num / (static_cast<double>(q) * static_cast<double>(c) * den * den);
}

struct ShorQuantumResult : AlgorithmResult<std::uint64_t> {
    ShorRegisters registers;
    std::uint64_t order = 0;           // r
    std::uint64_t second_register = 0; // measured a^{offset} mod N
    std::uint64_t offset = 0;          // smallest exponent giving second_register
    std::vector<double> conditional;   // first register given the measured second register
    std::vector<double> unconditional; // first register with the second register traced out
};

// Measure the second register, apply the inverse transform, measure the first.
inline ShorQuantumResult shor_quantum_part(std::uint64_t a, std::uint64_t N, std::uint64_t seed) {
    detail::check_shor_inputs(a, N);
    ShorQuantumResult out;
    out.registers = shor_registers(N);
    const auto& reg = out.registers;
    out.order = mult_order(a % N, N);
    Rng rng(seed);

    const auto prepared = shor_state_after_oracle(a, N);
    auto traced = prepared;
    detail::apply_inverse_qft(traced, 0, reg.m);
    out.unconditional = marginal(traced, qubit_range(0, reg.m));

    auto collapsed = measure(prepared, qubit_range(reg.m, reg.n), rng);
    out.second_register = collapsed.value();
    std::uint64_t power = 1 % N;
    while (power != out.second_register) {
        power = detail::mul_mod(power, a % N, N);
        ++out.offset;
    }
    detail::apply_inverse_qft(collapsed.post_state, 0, reg.m);
    out.conditional = marginal(collapsed.post_state, qubit_range(0, reg.m));
    out.exact_distribution = exact_distribution(out.conditional, reg.m);
    out.answer = sample_index(out.conditional, rng);
    out.rounds_used = 1;
    return out;
}

// r even and a^{r/2} not congruent to -1 mod N.
inline bool fact3_screen(std::uint64_t a, std::uint64_t N) {
    const std::uint64_t r = mult_order(a % N, N);
    return r % 2 == 0 && mod_pow(a % N, r / 2, N) != N - 1;
}

enum class ShorMode { las_vegas, monte_carlo };

inline std::string to_string(ShorMode m) { return m == ShorMode::las_vegas ? "las_vegas" : "monte_carlo"; }

enum class FactorRoute { none, even, perfect_power, common_divisor, quantum };

inline std::string to_string(FactorRoute r) {
    switch (r) {
        case FactorRoute::even: return "even";
        case FactorRoute::perfect_power: return "perfect_power";
        case FactorRoute::common_divisor: return "common_divisor";
        case FactorRoute::quantum: return "quantum";
        default: return "none";
    }
}

struct ShorFactorResult : AlgorithmResult<std::uint64_t> {
    FactorRoute route = FactorRoute::none;
    std::uint64_t base = 0;  // last a tried
    std::optional<std::uint64_t> order_candidate;
    std::uint64_t last_reading = 0;  // l from the last quantum round
};

// Classical loop around the quantum part. rounds_used counts quantum runs only;
// Las Vegas mode stops after max_rounds of them.
inline ShorFactorResult shor_factor(std::uint64_t N, ShorMode mode, std::uint64_t seed, int max_rounds = 32,
                                    std::optional<std::uint64_t> base = std::nullopt) {
    if (N < 4) throw domain_error("shor_factor needs N >= 4");
    if (is_prime(N)) throw domain_error("N is prime");
    if (max_rounds < 1) throw domain_error("max_rounds must be positive");
    if (base && (*base < 2 || *base >= N)) throw domain_error("base must satisfy 1 < a < N");
    ShorFactorResult out;
    auto found = [&](std::uint64_t p, FactorRoute route) {
        out.answer = p;
        out.route = route;
        out.success = true;
        return out;
    };
    out.success = false;
    if (N % 2 == 0) return found(2, FactorRoute::even);
    if (auto pp = is_perfect_power(N)) return found(pp->first, FactorRoute::perfect_power);

    Rng rng(seed);
    const auto reg = shor_registers(N);
    while (out.rounds_used < max_rounds) {
        const std::uint64_t a = base ? *base : 2 + uniform_below(rng, N - 2);
        out.base = a;
        if (const auto g = gcd(a, N); g > 1) return found(g, FactorRoute::common_divisor);

        std::uint64_t ell = 0;
        do {
            auto part = shor_quantum_part(a, N, derive_seed(seed, static_cast<std::uint64_t>(out.rounds_used)));
            ell = part.answer;
            out.exact_distribution = std::move(part.exact_distribution);
            ++out.rounds_used;
        } while (ell == 0 && mode == ShorMode::las_vegas && out.rounds_used < max_rounds);
        out.last_reading = ell;
        if (ell == 0) break;

        out.order_candidate = best_order_candidate(ell, reg.q, N);
        if (out.order_candidate && *out.order_candidate % 2 == 0) {
            const std::uint64_t half = mod_pow(a, *out.order_candidate / 2, N);
            const std::uint64_t p = gcd((half + 1) % N, N);
            if (p > 1 && p < N) return found(p, FactorRoute::quantum);
        }
        if (mode == ShorMode::monte_carlo) break;
    }
    return out;
}

}  // namespace qsim
