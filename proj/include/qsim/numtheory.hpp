#pragma once

// Classical number theory, templated on the integer type. BigInt is the
// arbitrary-precision default; drivers instantiate with std::uint64_t.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#include "qsim/errors.hpp"

namespace qsim {

using BigInt = boost::multiprecision::cpp_int;

template <class Int = BigInt>
struct Convergent {
    Int p;
    Int q;

    friend bool operator==(const Convergent&, const Convergent&) = default;
};

namespace detail {

template <class Int>
Int mul_mod(const Int& a, const Int& b, const Int& n) {
    if constexpr (std::is_integral_v<Int> && sizeof(Int) <= 8) {
        using Wide = std::conditional_t<std::is_signed_v<Int>, __int128, unsigned __int128>;
        return static_cast<Int>((static_cast<Wide>(a) * static_cast<Wide>(b)) % static_cast<Wide>(n));
    } else {
        return (a * b) % n;
    }
}

template <class Int>
void require_nonnegative(const Int& v, const char* what) {
    if constexpr (std::is_signed_v<Int> || !std::is_integral_v<Int>) {
        if (v < 0) throw domain_error(what);
    }
}

}  // namespace detail

template <class Int>
Int gcd(Int a, Int b) {
    detail::require_nonnegative(a, "gcd needs non-negative arguments");
    detail::require_nonnegative(b, "gcd needs non-negative arguments");
    if (a == 0 && b == 0) throw domain_error("gcd(0, 0) is undefined");
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

template <class Int>
Int mod_pow(Int a, Int e, const Int& n) {
    if (n < 2) throw domain_error("mod_pow needs modulus >= 2");
    detail::require_nonnegative(e, "mod_pow needs a non-negative exponent");
    detail::require_nonnegative(a, "mod_pow needs a non-negative base");
    Int result = 1;
    a %= n;
    while (e > 0) {
        if ((e & 1) != 0) result = detail::mul_mod(result, a, n);
        e >>= 1;
        if (e > 0) a = detail::mul_mod(a, a, n);
    }
    return result;
}

// Brute-force multiplicative order.
template <class Int>
Int mult_order(const Int& a, const Int& n) {
    if (n < 2) throw domain_error("mult_order needs modulus >= 2");
    if (gcd(Int(a % n), n) != 1) throw domain_error("mult_order needs gcd(a, N) = 1");
    Int r = 1;
    Int x = a % n;
    while (x != 1) {
        x = detail::mul_mod(x, Int(a % n), n);
        ++r;
    }
    return r;
}

template <class Int>
Int mod_inverse(const Int& a, const Int& n) {
    if (n < 2) throw domain_error("mod_inverse needs modulus >= 2");
    using S = std::conditional_t<std::is_integral_v<Int>, __int128, BigInt>;
    S old_r = static_cast<S>(a % n), r = static_cast<S>(n);
    S old_s = 1, s = 0;
    while (r != 0) {
        S quotient = old_r / r;
        S t = old_r - quotient * r;
        old_r = r;
        r = t;
        t = old_s - quotient * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) throw domain_error("mod_inverse needs gcd(a, N) = 1");
    S result = old_s % static_cast<S>(n);
    if (result < 0) result += static_cast<S>(n);
    return static_cast<Int>(result);
}

// Coefficients [b1, ..., bz] with p/q = 1/(b1 + 1/(b2 + ...)).
template <class Int>
std::vector<Int> continued_fraction(Int p, Int q) {
    if (!(p > 0 && p < q)) throw domain_error("continued_fraction needs 0 < p < q");
    std::vector<Int> coeffs;
    while (p != 0) {
        coeffs.push_back(q / p);
        Int rem = q % p;
        q = p;
        p = rem;
    }
    return coeffs;
}

template <class Int>
std::vector<Convergent<Int>> convergents(const std::vector<Int>& coeffs) {
    std::vector<Convergent<Int>> out;
    Int p_prev2 = 1, p_prev = 0;
    Int q_prev2 = 0, q_prev = 1;
    for (const Int& b : coeffs) {
        Int p = b * p_prev + p_prev2;
        Int q = b * q_prev + q_prev2;
        out.push_back({p, q});
        p_prev2 = p_prev;
        p_prev = p;
        q_prev2 = q_prev;
        q_prev = q;
    }
    return out;
}

// Denominator of the last convergent of ell/q below N; none for ell = 0.
template <class Int>
std::optional<Int> best_order_candidate(const Int& ell, const Int& q, const Int& n) {
    if (ell >= q) throw domain_error("best_order_candidate needs 0 <= ell < q");
    detail::require_nonnegative(ell, "best_order_candidate needs 0 <= ell < q");
    if (ell == 0) return std::nullopt;
    std::optional<Int> best;
    for (const auto& c : convergents(continued_fraction(ell, q))) {
        if (c.q < n)
            best = c.q;
        else
            break;
    }
    return best;
}

// round(num / den) with halves rounded up; num, den >= 0.
template <class Int>
Int nearest_integer(const Int& num, const Int& den) {
    return (2 * num + den) / (2 * den);
}

template <class Int>
bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

// Largest x with x^k <= n.
template <class Int>
Int integer_root(const Int& n, unsigned k) {
    Int lo = 0, hi = 1;
    auto pow_leq = [&](const Int& x) {
        Int acc = 1;
        for (unsigned i = 0; i < k; ++i) {
            acc *= x;
            if (acc > n) return false;
        }
        return true;
    };
    while (pow_leq(hi)) hi *= 2;
    while (hi - lo > 1) {
        Int mid = lo + (hi - lo) / 2;
        if (pow_leq(mid))
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

// (p, k) with p^k = n, k >= 2 and p minimal, or none.
template <class Int>
std::optional<std::pair<Int, unsigned>> is_perfect_power(const Int& n) {
    if (n < 2) throw domain_error("is_perfect_power needs N >= 2");
    unsigned max_k = 1;
    for (Int t = n; t > 1; t /= 2) ++max_k;
    for (unsigned k = max_k; k >= 2; --k) {
        Int p = integer_root(n, k);
        if (p < 2) continue;
        Int acc = 1;
        for (unsigned i = 0; i < k; ++i) acc *= p;
        if (acc == n) return std::make_pair(p, k);
    }
    return std::nullopt;
}

}  // namespace qsim
