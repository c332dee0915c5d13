#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "qsim/bits.hpp"
#include "qsim/errors.hpp"
#include "qsim/qstate.hpp"

namespace qsim {

using Matrix = Eigen::MatrixXcd;

inline bool is_unitary(const Matrix& m, double tol = 1e-10) {
    if (m.rows() != m.cols()) throw domain_error("is_unitary needs a square matrix");
    Matrix d = m.adjoint() * m - Matrix::Identity(m.rows(), m.cols());
    return d.cwiseAbs().maxCoeff() <= tol;
}

struct Gate {
    std::string name;
    int arity = 1;
    Matrix matrix;

    Gate() = default;
    Gate(std::string gate_name, Matrix m) : name(std::move(gate_name)), matrix(std::move(m)) {
        const auto dim = matrix.rows();
        if (dim != matrix.cols() || dim < 2 || !is_power_of_two(static_cast<std::uint64_t>(dim)))
            throw domain_error("gate matrix must be square with a power-of-two dimension");
        arity = floor_log2(static_cast<std::uint64_t>(dim));
        if (!is_unitary(matrix, 1e-10)) throw domain_error("gate matrix is not unitary: " + name);
    }
};

enum class Polarity { positive, negative };

struct Control {
    int qubit = 0;
    Polarity polarity = Polarity::positive;

    friend bool operator==(const Control&, const Control&) = default;
};

inline Control pos(int q) { return {q, Polarity::positive}; }
inline Control neg(int q) { return {q, Polarity::negative}; }

struct GateApplication {
    Gate gate;
    std::vector<int> targets;
    std::vector<Control> controls;
};

namespace detail {

using cd = std::complex<double>;

inline Matrix mat2(cd a, cd b, cd c, cd d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

}  // namespace detail

inline Gate standard_gate(const std::string& name) {
    using detail::cd;
    using detail::mat2;
    const double r = 1.0 / std::sqrt(2.0);
    const cd i{0.0, 1.0};
    if (name == "I") return {name, mat2(1, 0, 0, 1)};
    if (name == "X") return {name, mat2(0, 1, 1, 0)};
    if (name == "Y") return {name, mat2(0, -i, i, 0)};
    if (name == "Z") return {name, mat2(1, 0, 0, -1)};
    if (name == "H") return {name, mat2(r, r, r, -r)};
    if (name == "S") return {name, mat2(1, 0, 0, i)};
    if (name == "Sdg") return {name, mat2(1, 0, 0, -i)};
    if (name == "T") return {name, mat2(1, 0, 0, std::polar(1.0, std::numbers::pi / 4))};
    if (name == "Tdg") return {name, mat2(1, 0, 0, std::polar(1.0, -std::numbers::pi / 4))};
    if (name == "SWAP") {
        Matrix m = Matrix::Zero(4, 4);
        m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
        return {name, m};
    }
    throw domain_error("unknown gate name: " + name);
}

inline Gate u_gate(double theta, double phi, double lambda) {
    using detail::cd;
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    return {"U", detail::mat2(c, -std::polar(1.0, lambda) * s, std::polar(1.0, phi) * s,
                              std::polar(1.0, lambda + phi) * c)};
}

inline Gate rx(double theta) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    const detail::cd mi{0.0, -s};
    return {"Rx", detail::mat2(c, mi, mi, c)};
}

inline Gate ry(double theta) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    return {"Ry", detail::mat2(c, -s, s, c)};
}

// e^{-i theta/2} diag(1, e^{i theta})
inline Gate rz(double theta) {
    return {"Rz", detail::mat2(std::polar(1.0, -theta / 2), 0, 0, std::polar(1.0, theta / 2))};
}

// diag(1, e^{2 pi i / 2^k})
inline Gate rk_phase(int k) {
    if (k < 0) throw domain_error("rk_phase needs k >= 0");
    const double angle = 2.0 * std::numbers::pi / std::ldexp(1.0, k);
    return {"R" + std::to_string(k), detail::mat2(1, 0, 0, std::polar(1.0, angle))};
}

inline Gate phase_gate(double angle) { return {"P", detail::mat2(1, 0, 0, std::polar(1.0, angle))}; }

inline Gate adjoint(const Gate& g) {
    static const std::pair<const char*, const char*> pairs[] = {{"S", "Sdg"}, {"T", "Tdg"}};
    std::string name = g.name;
    bool renamed = false;
    for (const auto& [a, b] : pairs) {
        if (name == a) { name = b; renamed = true; break; }
        if (name == b) { name = a; renamed = true; break; }
    }
    const bool hermitian = (g.matrix - g.matrix.adjoint()).cwiseAbs().maxCoeff() == 0.0;
    if (!renamed && !hermitian) name += "dg";
    return {name, g.matrix.adjoint()};
}

// g^e by repeated squaring.
inline Gate gate_power(const Gate& g, std::uint64_t e) {
    std::string name = g.name + "^" + std::to_string(e);
    Matrix result = Matrix::Identity(g.matrix.rows(), g.matrix.cols());
    Matrix base = g.matrix;
    while (e > 0) {
        if (e & 1U) result = base * result;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return {std::move(name), result};
}

inline GateApplication make_app(Gate g, std::vector<int> targets, std::vector<Control> controls = {}) {
    return {std::move(g), std::move(targets), std::move(controls)};
}

namespace detail {

inline void validate_application(int num_qubits, const GateApplication& app) {
    if (static_cast<int>(app.targets.size()) != app.gate.arity)
        throw domain_error("target count does not match gate arity for " + app.gate.name);
    std::vector<int> all = app.targets;
    for (const auto& c : app.controls) all.push_back(c.qubit);
    for (int q : all)
        if (q < 0 || q >= num_qubits) throw domain_error("gate index out of range");
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw domain_error("gate targets and controls must be pairwise disjoint");
}

}  // namespace detail

// In-place strided application: the gate acts on the target subspace of every
// basis index whose control bits match their polarities.
inline void apply_inplace(StateVector& s, const GateApplication& app) {
    const int n = s.num_qubits();
    detail::validate_application(n, app);
    const int k = app.gate.arity;
    const std::uint64_t dim = s.dimension();

    std::uint64_t target_mask = 0;
    for (int t : app.targets) target_mask |= qubit_mask(n, t);
    std::uint64_t control_mask = 0, control_value = 0;
    for (const auto& c : app.controls) {
        control_mask |= qubit_mask(n, c.qubit);
        if (c.polarity == Polarity::positive) control_value |= qubit_mask(n, c.qubit);
    }

    auto& amps = s.amplitudes();
    const Matrix& m = app.gate.matrix;

    if (k == 1) {
        const Amplitude m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
        for (std::uint64_t base = 0; base < dim; base = ((base | target_mask) + 1) & ~target_mask) {
            if ((base & control_mask) != control_value) continue;
            const std::uint64_t hi = base | target_mask;
            const Amplitude a0 = amps[base], a1 = amps[hi];
            amps[base] = m00 * a0 + m01 * a1;
            amps[hi] = m10 * a0 + m11 * a1;
        }
        return;
    }

    // bit j of the gate-local index (counted from its most significant bit) is targets[j]
    const std::size_t local_dim = std::size_t{1} << k;
    std::vector<std::uint64_t> offsets(local_dim, 0);
    for (std::size_t g = 0; g < local_dim; ++g)
        for (int j = 0; j < k; ++j)
            if ((g >> (k - 1 - j)) & 1U) offsets[g] |= qubit_mask(n, app.targets[static_cast<std::size_t>(j)]);

    Eigen::VectorXcd in(static_cast<Eigen::Index>(local_dim)), out(static_cast<Eigen::Index>(local_dim));
    for (std::uint64_t base = 0; base < dim; base = ((base | target_mask) + 1) & ~target_mask) {
        if ((base & control_mask) != control_value) continue;
        for (std::size_t g = 0; g < local_dim; ++g) in(static_cast<Eigen::Index>(g)) = amps[base | offsets[g]];
        out.noalias() = m * in;
        for (std::size_t g = 0; g < local_dim; ++g) amps[base | offsets[g]] = out(static_cast<Eigen::Index>(g));
    }
}

inline StateVector apply(StateVector s, const GateApplication& app) {
    apply_inplace(s, app);
    return s;
}

}  // namespace qsim
