#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "qsim/circuit.hpp"
#include "qsim/gates.hpp"
#include "test_util.hpp"

using namespace qsim;
using qsim::testing::max_diff;
using qsim::testing::random_state;

namespace {

const double pi = std::numbers::pi;
const double r2 = 1.0 / std::sqrt(2.0);

Matrix kron2(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j) out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Matrix cnot_matrix() {
    Matrix m = Matrix::Zero(4, 4);
    m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
    return m;
}

}  // namespace

TEST(StandardGate, AllUnitary) {
    for (const char* name : {"I", "X", "Y", "Z", "H", "S", "Sdg", "T", "Tdg", "SWAP"})
        EXPECT_TRUE(is_unitary(standard_gate(name).matrix, 1e-10)) << name;
    EXPECT_THROW(standard_gate("Q"), domain_error);
}

TEST(StandardGate, ActionExamples) {
    auto plus = apply(basis_state(1, 0), make_app(standard_gate("H"), {0}));
    EXPECT_NEAR(std::abs(plus[0] - r2), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(plus[1] - r2), 0.0, 1e-15);

    for (std::uint64_t j = 0; j < 2; ++j)
        EXPECT_EQ(max_diff(apply(basis_state(1, j), make_app(standard_gate("X"), {0})), basis_state(1, j ^ 1)), 0.0);

    EXPECT_EQ(max_diff(apply(basis_state(2, 1), make_app(standard_gate("SWAP"), {0, 1})), basis_state(2, 2)), 0.0);
}

TEST(ParametricGates, UGateExamples) {
    EXPECT_LE(max_diff(u_gate(pi / 2, 0, pi).matrix, standard_gate("H").matrix), 1e-12);
    auto s = apply(basis_state(1, 0), make_app(u_gate(2 * pi / 3, 0, 0), {0}));
    EXPECT_NEAR(std::norm(s[0]), 0.25, 1e-12);
    EXPECT_NEAR(std::norm(s[1]), 0.75, 1e-12);
    EXPECT_TRUE(equiv_up_to_phase(rz(0).matrix, standard_gate("I").matrix, 1e-12));
}

TEST(ParametricGates, RotationsUnitaryAndConsistent) {
    for (double t = -3.0; t <= 3.0; t += 0.37) {
        EXPECT_TRUE(is_unitary(rx(t).matrix));
        EXPECT_TRUE(is_unitary(ry(t).matrix));
        EXPECT_TRUE(is_unitary(rz(t).matrix));
        EXPECT_TRUE(is_unitary(u_gate(t, 0.5 * t, -t).matrix));
        // rz carries the e^{-i t/2} prefactor
        EXPECT_NEAR(std::abs(rz(t).matrix(0, 0) - std::polar(1.0, -t / 2)), 0.0, 1e-15);
        EXPECT_TRUE(equiv_up_to_phase(rz(t).matrix, phase_gate(t).matrix, 1e-12));
    }
    EXPECT_LE(max_diff(rx(pi).matrix, Matrix(std::complex<double>(0, -1) * standard_gate("X").matrix)), 1e-12);
    EXPECT_LE(max_diff(ry(pi).matrix, Matrix(std::complex<double>(0, -1) * standard_gate("Y").matrix)), 1e-12);
}

TEST(RkPhase, Examples) {
    EXPECT_LE(max_diff(rk_phase(0).matrix, standard_gate("I").matrix), 1e-12);
    EXPECT_LE(max_diff(rk_phase(1).matrix, standard_gate("Z").matrix), 1e-12);
    EXPECT_LE(max_diff(rk_phase(2).matrix, standard_gate("S").matrix), 1e-12);
    EXPECT_LE(max_diff(rk_phase(3).matrix, standard_gate("T").matrix), 1e-12);
    for (int k = 0; k < 12; ++k) {
        Matrix sq = rk_phase(k + 1).matrix * rk_phase(k + 1).matrix;
        EXPECT_LE(max_diff(sq, rk_phase(k).matrix), 1e-12);
    }
    EXPECT_THROW(rk_phase(-1), domain_error);
}

TEST(Apply, CnotMakesBell) {
    StateVector in(2, {r2, 0, r2, 0});
    auto out = apply(in, make_app(standard_gate("X"), {1}, {pos(0)}));
    EXPECT_LE(max_diff(out, StateVector(2, {r2, 0, 0, r2})), 1e-15);
}

TEST(Apply, NegativeControl) {
    for (std::uint64_t l = 0; l < 2; ++l) {
        auto out = apply(basis_state(2, l), make_app(standard_gate("X"), {1}, {neg(0)}));
        EXPECT_EQ(max_diff(out, basis_state(2, l ^ 1)), 0.0);
        auto untouched = apply(basis_state(2, 2 | l), make_app(standard_gate("X"), {1}, {neg(0)}));
        EXPECT_EQ(max_diff(untouched, basis_state(2, 2 | l)), 0.0);
    }
}

TEST(Apply, Toffoli) {
    auto out = apply(basis_state(3, 6), make_app(standard_gate("X"), {2}, {pos(0), pos(1)}));
    EXPECT_EQ(max_diff(out, basis_state(3, 7)), 0.0);
}

TEST(Apply, RejectsOverlap) {
    auto s = basis_state(2, 0);
    EXPECT_THROW(apply(s, make_app(standard_gate("X"), {0}, {pos(0)})), domain_error);
    EXPECT_THROW(apply(s, make_app(standard_gate("SWAP"), {1, 1})), domain_error);
    EXPECT_THROW(apply(s, make_app(standard_gate("X"), {2})), domain_error);
    EXPECT_THROW(apply(s, make_app(standard_gate("SWAP"), {0})), domain_error);
}

TEST(Apply, PreservesNorm) {
    Rng rng(21);
    const std::vector<Gate> pool = {standard_gate("H"), standard_gate("T"), standard_gate("Y"), rx(0.7), ry(1.3),
                                    u_gate(0.4, 1.1, -0.8), standard_gate("SWAP")};
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = 2 + trial % 5;
        auto s = random_state(n, rng);
        const Gate& g = pool[uniform_below(rng, pool.size())];
        std::vector<int> qubits = qubit_range(0, n);
        std::shuffle(qubits.begin(), qubits.end(), rng);
        std::vector<int> targets(qubits.begin(), qubits.begin() + g.arity);
        std::vector<Control> controls;
        for (int i = g.arity; i < n; ++i)
            if (rng() & 1U) controls.push_back({qubits[static_cast<std::size_t>(i)], (rng() & 1U) ? Polarity::positive : Polarity::negative});
        apply_inplace(s, make_app(g, targets, controls));
        ASSERT_NEAR(s.norm(), 1.0, 1e-10);
    }
}

TEST(Apply, UnsatisfiedControlsAreBitIdentical) {
    Rng rng(23);
    auto s = random_state(4, rng);
    // controls require q0 = 1 and q1 = 0; zero out every amplitude where that holds
    for (std::uint64_t x = 0; x < 16; ++x)
        if (bit_of(x, 4, 0) == 1 && bit_of(x, 4, 1) == 0) s[x] = 0.0;
    auto out = apply(s, make_app(standard_gate("H"), {3}, {pos(0), neg(1)}));
    for (std::uint64_t x = 0; x < 16; ++x) EXPECT_EQ(out[x], s[x]);
}

TEST(Apply, MultiTargetOrdering) {
    // targets[0] is the most significant bit of the gate's own index
    Matrix m = Matrix::Zero(4, 4);
    m(1, 0) = m(2, 1) = m(3, 2) = m(0, 3) = 1.0;  // |g> -> |g+1 mod 4>
    Gate inc("INC", m);
    auto out = apply(basis_state(3, 0b001), make_app(inc, {2, 0}));  // gate index (q2,q0) = 10 -> 11
    EXPECT_EQ(max_diff(out, basis_state(3, 0b101)), 0.0);
}

TEST(GateIdentities, HXHIsZ) {
    Matrix h = standard_gate("H").matrix;
    EXPECT_LE(max_diff(h * standard_gate("X").matrix * h, standard_gate("Z").matrix), 1e-12);
}

TEST(GateIdentities, ControlledZFromCnot) {
    Matrix ih = kron2(Matrix::Identity(2, 2), standard_gate("H").matrix);
    Matrix cz = Matrix::Identity(4, 4);
    cz(3, 3) = -1.0;
    EXPECT_LE(max_diff(ih * cnot_matrix() * ih, cz), 1e-12);
}

TEST(GateIdentities, HadamardsReverseCnot) {
    Matrix hh = kron2(standard_gate("H").matrix, standard_gate("H").matrix);
    Circuit reversed(2);
    reversed.cx(1, 0);
    EXPECT_LE(max_diff(hh * cnot_matrix() * hh, unitary_of(reversed)), 1e-12);
}

TEST(GateIdentities, SwapFromThreeCnots) {
    Circuit c(2);
    c.cx(0, 1).cx(1, 0).cx(0, 1);
    EXPECT_LE(max_diff(unitary_of(c), standard_gate("SWAP").matrix), 1e-12);
}

TEST(IsUnitary, Examples) {
    EXPECT_TRUE(is_unitary(standard_gate("H").matrix));
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 1.0;
    d(1, 1) = 2.0;
    EXPECT_FALSE(is_unitary(d));
    EXPECT_THROW(Gate("bad", d), domain_error);
}

TEST(GatePower, RepeatedSquaring) {
    Gate t = standard_gate("T");
    EXPECT_LE(max_diff(gate_power(t, 8).matrix, standard_gate("I").matrix), 1e-12);
    EXPECT_LE(max_diff(gate_power(t, 2).matrix, standard_gate("S").matrix), 1e-12);
    EXPECT_LE(max_diff(gate_power(t, 0).matrix, standard_gate("I").matrix), 1e-12);
    EXPECT_LE(max_diff(adjoint(t).matrix, standard_gate("Tdg").matrix), 1e-15);
    EXPECT_EQ(adjoint(t).name, "Tdg");
}
