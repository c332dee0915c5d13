#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

#include "qsim/algorithms/dlog.hpp"
#include "qsim/algorithms/qft.hpp"
#include "qsim/algorithms/shor.hpp"
#include "test_util.hpp"

using namespace qsim;
using qsim::testing::max_diff;
using u64 = std::uint64_t;

namespace {

const double pi = std::numbers::pi;

// Continuous-argument form of the branch probability.
double shor_probability_real(double ell, double r, double q, double c) {
    const double den = std::sin(pi * ell * r / q);
    if (std::abs(den) < 1e-12) return c / q;
    const double num = std::sin(pi * ell * r * c / q);
    return num * num / (q * c * den * den);
}

std::set<u64> cyclic_local_maxima(const std::vector<double>& p) {
    std::set<u64> out;
    const u64 q = p.size();
    for (u64 l = 0; l < q; ++l)
        if (p[l] > p[(l + q - 1) % q] && p[l] > p[(l + 1) % q]) out.insert(l);
    return out;
}

}  // namespace

TEST(Qft, MatchesDftMatrix) {
    for (int n = 1; n <= 8; ++n) {
        const auto f = dft_matrix(n);
        EXPECT_LE(max_diff(unitary_of(qft_circuit(n)), f), 1e-10) << n;
        EXPECT_LE(max_diff(unitary_of(inverse_qft_circuit(n)), Matrix(f.adjoint())), 1e-10) << n;
    }
    EXPECT_LE(max_diff(unitary_of(qft_circuit(1)), standard_gate("H").matrix), 1e-15);
}

TEST(Qft, GateCount) {
    EXPECT_EQ(qft_circuit(5).size(), 17u);
    for (int n = 1; n <= 16; ++n) {
        EXPECT_EQ(qft_circuit(n).size(), qft_gate_count(n));
        EXPECT_EQ(qft_gate_count(n), static_cast<std::size_t>(n * (n + 1) / 2 + n / 2));
    }
}

TEST(Qft, InverseIsReversedAdjoint) {
    const auto fwd = qft_circuit(4);
    const auto inv = inverse_qft_circuit(4);
    ASSERT_EQ(fwd.size(), inv.size());
    for (std::size_t i = 0; i < fwd.size(); ++i) {
        const auto& a = fwd.ops()[i];
        const auto& b = inv.ops()[inv.size() - 1 - i];
        EXPECT_EQ(a.targets, b.targets);
        EXPECT_LE(max_diff(a.gate.matrix, Matrix(b.gate.matrix.adjoint())), 1e-15);
    }
}

TEST(CrkDecomposition, MatchesControlledPhase) {
    for (int k = 1; k <= 10; ++k) {
        const auto c = crk_decomposition(k);
        EXPECT_EQ(c.size(), 5u);
        EXPECT_TRUE(equiv_up_to_phase(unitary_of(c), controlled_rk_matrix(k), 1e-12)) << k;
        const auto out = simulate(c, basis_state(2, 3));
        EXPECT_NEAR(std::abs(out[3] - std::polar(1.0, 2 * pi / std::ldexp(1.0, k))), 0.0, 1e-12);
        for (u64 x = 0; x < 3; ++x) EXPECT_LE(max_diff(simulate(c, basis_state(2, x)), basis_state(2, x)), 1e-12);
    }
    Matrix cz = Matrix::Identity(4, 4);
    cz(3, 3) = -1.0;
    EXPECT_LE(max_diff(unitary_of(crk_decomposition(1)), cz), 1e-12);
}

TEST(ShorRegisters, Sizes) {
    auto reg = shor_registers(21);
    EXPECT_EQ(reg.q, 512u);
    EXPECT_EQ(reg.m, 9);
    EXPECT_EQ(reg.n, 5);
    EXPECT_EQ(shor_registers(15).q, 256u);
    EXPECT_EQ(shor_c(6, 0, 512), 86u);
    EXPECT_EQ(shor_c(6, 2, 512), 85u);
}

TEST(ShorQuantumPart, BranchwiseFormula) {
    const std::vector<std::pair<u64, u64>> cases = {{15, 2}, {15, 7}, {21, 2}, {33, 10}};
    for (auto [N, a] : cases) {
        const auto reg = shor_registers(N);
        const u64 r = mult_order(a, N);
        u64 value = 1;
        for (u64 offset = 0; offset < r; ++offset, value = value * a % N) {
            const auto p = shor_first_register_distribution(a, N, value);
            const u64 c = shor_c(r, offset, reg.q);
            double worst = 0.0;
            for (u64 l = 0; l < reg.q; ++l) worst = std::max(worst, std::abs(p[l] - shor_probability(l, r, reg.q, c)));
            EXPECT_LE(worst, 1e-9) << N << " " << a << " offset " << offset;
        }
    }
}

TEST(ShorQuantumPart, TwentyOneWithBaseTwo) {
    const std::set<u64> peaks = {0, 85, 171, 256, 341, 427};
    for (u64 seed = 0; seed < 6; ++seed) {
        auto part = shor_quantum_part(2, 21, seed);
        EXPECT_EQ(part.order, 6u);
        EXPECT_EQ(part.registers.q, 512u);
        EXPECT_EQ(cyclic_local_maxima(part.conditional), peaks);
        const u64 c = shor_c(6, part.offset, 512);
        EXPECT_TRUE(c == 85 || c == 86);
        EXPECT_GT(part.conditional[part.answer], 0.0);

        double near_multiples = 0.0;
        for (u64 k = 0; k < 6; ++k) {
            const double term = part.conditional[nearest_integer<u64>(k * 512, 6) % 512];
            EXPECT_GT(term, 4.0 / (pi * pi * 6) * (1.0 - 1.0 / 21));
            near_multiples += term;
        }
        EXPECT_GE(near_multiples, 3.0 / (pi * pi));
    }
    EXPECT_EQ(cyclic_local_maxima(shor_first_register_distribution(2, 21)), peaks);
}

TEST(ShorQuantumPart, UnconditionalIsBranchAverage) {
    const auto r = mult_order<u64>(2, 21);
    const auto uncond = shor_first_register_distribution(2, 21);
    std::vector<double> avg(uncond.size(), 0.0);
    u64 value = 1;
    for (u64 k = 0; k < r; ++k, value = value * 2 % 21) {
        const auto cond = shor_first_register_distribution(2, 21, value);
        const double weight = static_cast<double>(shor_c(r, k, 512)) / 512.0;
        for (std::size_t l = 0; l < avg.size(); ++l) avg[l] += weight * cond[l];
    }
    for (std::size_t l = 0; l < avg.size(); ++l) EXPECT_NEAR(avg[l], uncond[l], 1e-12);
}

TEST(ShorQuantumPart, PeriodicityOfContinuousForm) {
    const double q = 512, r = 6, c = 85;
    for (int num = 1; num < 200; ++num) {
        const double ell = num / 7.0;
        EXPECT_NEAR(shor_probability_real(ell + q / r, r, q, c), shor_probability_real(ell, r, q, c), 1e-9);
    }
}

TEST(ShorQuantumPart, PowerOfTwoOrderGivesExactPeaks) {
    auto part = shor_quantum_part(4, 15, 0);
    EXPECT_EQ(part.order, 2u);
    for (u64 l = 0; l < part.registers.q; ++l)
        EXPECT_NEAR(part.conditional[l], l % 128 == 0 ? 0.5 : 0.0, 1e-12);
}

TEST(ShorQuantumPart, Preconditions) {
    EXPECT_THROW(shor_quantum_part(3, 21, 0), domain_error);
    EXPECT_THROW(shor_quantum_part(2, 22, 0), domain_error);
    EXPECT_THROW(shor_quantum_part(2, 13, 0), domain_error);
}

TEST(Fact3, Examples) {
    EXPECT_TRUE(fact3_screen(2, 21));
    EXPECT_FALSE(fact3_screen(5, 21));
}

TEST(Fact3, GoodFractions) {
    // Z*_21 has exactly half good bases; Z*_15 reaches three quarters
    auto fraction = [](u64 N) {
        int good = 0, total = 0;
        for (u64 a = 1; a < N; ++a) {
            if (gcd(a, N) != 1) continue;
            ++total;
            good += fact3_screen(a, N);
        }
        return static_cast<double>(good) / total;
    };
    EXPECT_DOUBLE_EQ(fraction(21), 0.5);
    EXPECT_DOUBLE_EQ(fraction(15), 0.75);
}

TEST(ShorFactor, Shortcuts) {
    auto even = shor_factor(22, ShorMode::las_vegas, 0);
    EXPECT_EQ(even.answer, 2u);
    EXPECT_EQ(even.route, FactorRoute::even);
    EXPECT_EQ(even.rounds_used, 0);

    auto square = shor_factor(9, ShorMode::las_vegas, 0);
    EXPECT_EQ(square.answer, 3u);
    EXPECT_EQ(square.route, FactorRoute::perfect_power);

    auto shared = shor_factor(21, ShorMode::monte_carlo, 0, 32, 6);
    EXPECT_EQ(shared.answer, 3u);
    EXPECT_EQ(shared.route, FactorRoute::common_divisor);

    EXPECT_THROW(shor_factor(13, ShorMode::las_vegas, 0), domain_error);
    EXPECT_THROW(shor_factor(3, ShorMode::las_vegas, 0), domain_error);
}

TEST(ShorFactor, LasVegasFindsFactors) {
    for (u64 seed = 0; seed < 8; ++seed)
        for (u64 N : {15u, 21u}) {
            auto r = shor_factor(N, ShorMode::las_vegas, seed);
            ASSERT_TRUE(r.success) << N << " seed " << seed;
            EXPECT_GT(r.answer, 1u);
            EXPECT_LT(r.answer, N);
            EXPECT_EQ(N % r.answer, 0u);
        }
}

TEST(ShorFactor, MonteCarloSingleRoundAndDeterminism) {
    int successes = 0;
    for (u64 seed = 0; seed < 20; ++seed) {
        auto r = shor_factor(21, ShorMode::monte_carlo, seed);
        EXPECT_LE(r.rounds_used, 1);
        if (r.success) {
            ++successes;
            EXPECT_EQ(21 % r.answer, 0u);
        }
        auto again = shor_factor(21, ShorMode::monte_carlo, seed);
        EXPECT_EQ(again.answer, r.answer);
        EXPECT_EQ(again.success, r.success);
    }
    EXPECT_GT(successes, 0);
}

TEST(Dlog, WorkedExample) {
    int successes = 0;
    for (u64 seed = 0; seed < 40; ++seed) {
        auto r = shor_dlog_pow2(34, 27, 3, seed);
        EXPECT_EQ(r.problem.order, 16u);
        EXPECT_EQ(r.problem.log_value, 11u);
        EXPECT_NEAR(r.success_probability, 0.5, 1e-9);
        EXPECT_EQ(r.success, gcd<u64>(r.r1, 16) == 1);
        if (r.success) {
            ++successes;
            EXPECT_EQ(r.answer, 11u);
            EXPECT_EQ(mod_pow<u64>(27, r.answer, 34), 3u);
        }
    }
    EXPECT_GT(successes, 0);
}

TEST(Dlog, JointSupportFollowsHiddenLine) {
    auto r = shor_dlog_pow2(34, 27, 3, 2);
    for (u64 k = 0; k < r.joint.size(); ++k) {
        const u64 r1 = k >> 4, r2 = k & 15;
        EXPECT_NEAR(r.joint[k], r2 == (11 * r1) % 16 ? 1.0 / 16 : 0.0, 1e-12);
    }
}

TEST(Dlog, BaseEqualsTarget) {
    for (u64 seed = 0; seed < 10; ++seed) {
        auto r = shor_dlog_pow2(34, 27, 27, seed);
        if (r.success) EXPECT_EQ(r.answer, 1u);
    }
}

TEST(Dlog, Preconditions) {
    EXPECT_THROW(shor_dlog_pow2(21, 2, 4, 0), domain_error);   // order 6
    EXPECT_THROW(shor_dlog_pow2(34, 27, 2, 0), domain_error);  // not coprime
    EXPECT_THROW(shor_dlog_pow2(15, 4, 7, 0), domain_error);   // 7 not in <4>
}
