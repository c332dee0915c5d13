#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "qsim/circuit.hpp"
#include "qsim/errors.hpp"
#include "qsim/gates.hpp"

namespace qsim {

// F_{2^n}: on qubit i an H, then controlled R_{j-i+1} from every later qubit j;
// the final swaps reverse the qubit order.
inline Circuit qft_circuit(int n) {
    if (n < 1) throw domain_error("qft_circuit needs n >= 1");
    Circuit c(n);
    for (int i = 0; i < n; ++i) {
        c.h(i);
        for (int j = i + 1; j < n; ++j) c.add(rk_phase(j - i + 1), {i}, {pos(j)});
    }
    for (int i = 0; i < n / 2; ++i) c.swap(i, n - 1 - i);
    return c;
}

inline Circuit inverse_qft_circuit(int n) { return qft_circuit(n).inverse(); }

inline std::size_t qft_gate_count(int n) {
    const auto k = static_cast<std::size_t>(n);
    return k * (k + 1) / 2 + k / 2;
}

inline Matrix dft_matrix(int n) {
    const std::size_t dim = std::size_t{1} << n;
    Matrix f(dim, dim);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    for (std::size_t k = 0; k < dim; ++k)
        for (std::size_t l = 0; l < dim; ++l) {
            const auto e = (k * l) % dim;
            f(k, l) = std::polar(scale, 2 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(dim));
        }
    return f;
}

// C(R_k) with control qubit 0 and target qubit 1, from two CNOTs and three R_{k+1}-type phases.
inline Circuit crk_decomposition(int k) {
    if (k < 1) throw domain_error("crk_decomposition needs k >= 1");
    const Gate half = rk_phase(k + 1);
    Circuit c(2);
    c.add(half, {1}).cx(0, 1).add(adjoint(half), {1}).cx(0, 1).add(half, {0});
    return c;
}

inline Matrix controlled_rk_matrix(int k) {
    Matrix m = Matrix::Identity(4, 4);
    m(3, 3) = rk_phase(k).matrix(1, 1);
    return m;
}

}  // namespace qsim
