#pragma once

// Modular-arithmetic oracles as explicit basis permutations, plus the
// gate-level circuit for bases of order 2.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qsim/bits.hpp"
#include "qsim/circuit.hpp"
#include "qsim/errors.hpp"
#include "qsim/gates.hpp"
#include "qsim/limits.hpp"
#include "qsim/numtheory.hpp"
#include "qsim/qstate.hpp"

namespace qsim {

class PermutationOracle {
public:
    PermutationOracle(int total_qubits, std::vector<std::uint64_t> mapping)
        : total_qubits_(total_qubits), mapping_(std::move(mapping)) {
        if (total_qubits < 1 || total_qubits > limits::hard_max_qubits) throw domain_error("permutation width out of range");
        if (mapping_.size() != (std::size_t{1} << total_qubits)) throw domain_error("permutation needs 2^n entries");
        std::vector<bool> hit(mapping_.size(), false);
        for (auto y : mapping_) {
            if (y >= mapping_.size() || hit[y]) throw domain_error("mapping is not a permutation");
            hit[y] = true;
        }
    }

    static PermutationOracle identity(int total_qubits) {
        std::vector<std::uint64_t> m(std::size_t{1} << total_qubits);
        for (std::uint64_t x = 0; x < m.size(); ++x) m[x] = x;
        return {total_qubits, std::move(m)};
    }

    int total_qubits() const { return total_qubits_; }
    const std::vector<std::uint64_t>& mapping() const { return mapping_; }
    std::uint64_t operator()(std::uint64_t x) const { return mapping_[x]; }

    // (this after other)(x) = this(other(x))
    PermutationOracle after(const PermutationOracle& other) const {
        if (other.total_qubits_ != total_qubits_) throw domain_error("permutation widths differ");
        std::vector<std::uint64_t> m(mapping_.size());
        for (std::uint64_t x = 0; x < m.size(); ++x) m[x] = mapping_[other.mapping_[x]];
        return {total_qubits_, std::move(m)};
    }

    PermutationOracle inverse() const {
        std::vector<std::uint64_t> m(mapping_.size());
        for (std::uint64_t x = 0; x < m.size(); ++x) m[mapping_[x]] = x;
        return {total_qubits_, std::move(m)};
    }

    // this^e by repeated squaring of the mapping.
    PermutationOracle power(std::uint64_t e) const {
        PermutationOracle result = identity(total_qubits_);
        PermutationOracle base = *this;
        while (e > 0) {
            if (e & 1U) result = base.after(result);
            e >>= 1;
            if (e > 0) base = base.after(base);
        }
        return result;
    }

    bool is_involution() const {
        for (std::uint64_t x = 0; x < mapping_.size(); ++x)
            if (mapping_[mapping_[x]] != x) return false;
        return true;
    }

    Matrix matrix() const {
        if (total_qubits_ > limits::max_unitary_qubits) throw resource_error("permutation matrix too large");
        const auto dim = static_cast<Eigen::Index>(mapping_.size());
        Matrix m = Matrix::Zero(dim, dim);
        for (std::uint64_t x = 0; x < mapping_.size(); ++x) m(static_cast<Eigen::Index>(mapping_[x]), static_cast<Eigen::Index>(x)) = 1.0;
        return m;
    }

private:
    int total_qubits_;
    std::vector<std::uint64_t> mapping_;
};

// Applies the permutation to the sub-register `targets` (targets[0] most
// significant) on every basis index whose controls match, by index remapping.
inline void apply_permutation_inplace(StateVector& s, const PermutationOracle& perm, const std::vector<int>& targets,
                                      const std::vector<Control>& controls = {}) {
    const int n = s.num_qubits();
    if (static_cast<int>(targets.size()) != perm.total_qubits()) throw domain_error("target count differs from permutation width");
    std::vector<int> all = targets;
    for (const auto& c : controls) all.push_back(c.qubit);
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end() || all.front() < 0 || all.back() >= n)
        throw domain_error("permutation targets and controls must be distinct and in range");

    std::uint64_t control_mask = 0, control_value = 0;
    for (const auto& c : controls) {
        control_mask |= qubit_mask(n, c.qubit);
        if (c.polarity == Polarity::positive) control_value |= qubit_mask(n, c.qubit);
    }
    std::vector<Amplitude> out(s.dimension(), 0.0);
    const auto& in = s.amplitudes();
    for (std::uint64_t x = 0; x < s.dimension(); ++x) {
        if (in[x] == Amplitude{0.0, 0.0}) continue;
        std::uint64_t y = x;
        if ((x & control_mask) == control_value) y = deposit_bits(x, n, targets, perm(extract_bits(x, n, targets)));
        out[y] = in[x];
    }
    s.amplitudes() = std::move(out);
}

inline void apply_permutation_inplace(StateVector& s, const PermutationOracle& perm) {
    apply_permutation_inplace(s, perm, qubit_range(0, perm.total_qubits()));
}

// |l>|y> -> |l>|y xor (a^l mod N)> on log2(q) + ceil(log2 N) qubits.
inline PermutationOracle modexp_oracle(std::uint64_t a, std::uint64_t N, std::uint64_t q) {
    if (N < 2) throw domain_error("modexp_oracle needs N >= 2");
    if (!is_power_of_two(q)) throw domain_error("modexp_oracle needs q a power of two");
    if (gcd<std::uint64_t>(a % N, N) != 1) throw domain_error("modexp_oracle needs gcd(a, N) = 1");
    const int m = floor_log2(q);
    const int n = ceil_log2(N);
    if (m < 1 || n < 1 || m + n > limits::hard_max_qubits) throw resource_error("modexp_oracle register too wide");
    std::vector<std::uint64_t> map(std::size_t{1} << (m + n));
    const std::uint64_t ydim = std::uint64_t{1} << n;
    std::uint64_t power = 1 % N;
    for (std::uint64_t ell = 0; ell < q; ++ell) {
        for (std::uint64_t y = 0; y < ydim; ++y) map[ell * ydim + y] = ell * ydim + (y ^ power);
        power = detail::mul_mod(power, a % N, N);
    }
    return {m + n, std::move(map)};
}

// y -> a*y mod N for y < N, identity on y >= N, over ceil(log2 N) qubits.
inline PermutationOracle modmul_oracle(std::uint64_t a, std::uint64_t N) {
    if (N < 2) throw domain_error("modmul_oracle needs N >= 2");
    if (gcd<std::uint64_t>(a % N, N) != 1) throw domain_error("modmul_oracle needs gcd(a, N) = 1");
    const int n = std::max(1, ceil_log2(N));
    std::vector<std::uint64_t> map(std::size_t{1} << n);
    for (std::uint64_t y = 0; y < map.size(); ++y) map[y] = y < N ? detail::mul_mod(a % N, y, N) : y;
    return {n, std::move(map)};
}

// Gate-level modular exponentiation for a of order 2: a^l is 1 for even l and
// a for odd l, so only the exponent's last qubit matters.
inline Circuit order2_modexp_circuit(std::uint64_t a, std::uint64_t N, std::uint64_t q) {
    if (N < 3) throw domain_error("order2_modexp_circuit needs N >= 3");
    if (!is_power_of_two(q) || q < 2) throw domain_error("order2_modexp_circuit needs q a power of two");
    a %= N;
    if (a == 1 || gcd<std::uint64_t>(a, N) != 1 || detail::mul_mod(a, a, N) != 1)
        throw domain_error("order2_modexp_circuit needs a of multiplicative order 2");
    const int m = floor_log2(q);
    const int n = ceil_log2(N);
    Circuit c(m + n);
    const int exponent_lsb = m - 1;
    c.add(standard_gate("X"), {m + n - 1}, {neg(exponent_lsb)});
    for (int i = 0; i < n; ++i)
        if (bit_of(a, n, i)) c.cx(exponent_lsb, m + i);
    return c;
}

inline std::uint64_t shor_register_q(std::uint64_t N) {
    std::uint64_t q = 1;
    while (q <= N * N) q <<= 1;
    return q;
}

inline Circuit order2_modexp_circuit(std::uint64_t a, std::uint64_t N) {
    return order2_modexp_circuit(a, N, shor_register_q(N));
}

}  // namespace qsim
