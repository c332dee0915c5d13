#pragma once

// Linear algebra over GF(2) with rows packed into machine words. Column j is
// the j-th character of the row's bitstring (bit width-1-j of the word).

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qsim/bits.hpp"
#include "qsim/errors.hpp"

namespace qsim {

struct BitMatrix {
    int width = 0;
    std::vector<std::uint64_t> rows;

    BitMatrix() = default;
    explicit BitMatrix(int w, std::vector<std::uint64_t> r = {}) : width(w), rows(std::move(r)) {
        if (w < 1 || w > 63) throw domain_error("BitMatrix width must be in 1..63");
        for (auto row : rows)
            if (row >> w) throw domain_error("row wider than the matrix");
    }

    static BitMatrix from_strings(const std::vector<std::string>& rows) {
        if (rows.empty()) throw domain_error("from_strings needs at least one row to infer the width");
        BitMatrix m(static_cast<int>(rows.front().size()));
        for (const auto& r : rows) {
            if (static_cast<int>(r.size()) != m.width) throw domain_error("rows must have uniform width");
            m.rows.push_back(from_bitstring(r));
        }
        return m;
    }

    void add_row(std::uint64_t row) {
        if (row >> width) throw domain_error("row wider than the matrix");
        rows.push_back(row);
    }
};

namespace detail {

struct Echelon {
    std::vector<std::uint64_t> rows;  // reduced, one per pivot
    std::vector<int> pivots;          // pivot column of each row
};

inline Echelon reduce(const BitMatrix& m) {
    Echelon e;
    std::vector<std::uint64_t> work = m.rows;
    for (int col = 0; col < m.width; ++col) {
        const std::uint64_t bit = std::uint64_t{1} << (m.width - 1 - col);
        std::size_t pivot = work.size();
        for (std::size_t i = 0; i < work.size(); ++i)
            if (work[i] & bit) { pivot = i; break; }
        if (pivot == work.size()) continue;
        const std::uint64_t prow = work[pivot];
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(pivot));
        for (auto& r : work)
            if (r & bit) r ^= prow;
        for (auto& r : e.rows)
            if (r & bit) r ^= prow;
        e.rows.push_back(prow);
        e.pivots.push_back(col);
    }
    return e;
}

}  // namespace detail

inline int rank(const BitMatrix& m) { return static_cast<int>(detail::reduce(m).rows.size()); }

// Basis of {s : row . s = 0 for every row}, one vector per free column in increasing order.
inline std::vector<std::uint64_t> nullspace_basis(const BitMatrix& m) {
    const auto e = detail::reduce(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(m.width), false);
    for (int p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<std::uint64_t> basis;
    for (int free_col = 0; free_col < m.width; ++free_col) {
        if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
        const std::uint64_t free_bit = std::uint64_t{1} << (m.width - 1 - free_col);
        std::uint64_t v = free_bit;
        for (std::size_t i = 0; i < e.rows.size(); ++i)
            if (e.rows[i] & free_bit) v |= std::uint64_t{1} << (m.width - 1 - e.pivots[i]);
        basis.push_back(v);
    }
    return basis;
}

// Recovers the hidden string from a rank n-1 system: the nullspace is {0, v},
// and the single probe f(v) == f(0) confirms v.
inline std::uint64_t simon_postprocess(const BitMatrix& equations,
                                       const std::function<std::uint64_t(std::uint64_t)>& f_probe) {
    const int n = equations.width;
    const int r = rank(equations);
    if (r < n - 1)
        throw insufficient_data("equation system has rank " + std::to_string(r) + ", need " + std::to_string(n - 1));
    if (r == n) throw domain_error("equations admit only s = 0, which breaks the two-to-one promise");
    const std::uint64_t s = nullspace_basis(equations).front();
    if (f_probe(s) != f_probe(0)) throw domain_error("f(s) != f(0) for the unique candidate s");
    return s;
}

}  // namespace qsim
