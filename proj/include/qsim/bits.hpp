#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qsim/errors.hpp"

// Bit helpers. A width-n bitstring "b0 b1 ... b(n-1)" has b0 as the most
// significant bit, so qubit j of an n-qubit index x is bit (n-1-j).
namespace qsim {

inline std::uint64_t qubit_mask(int num_qubits, int qubit) {
    return std::uint64_t{1} << (num_qubits - 1 - qubit);
}

inline int bit_of(std::uint64_t x, int num_qubits, int qubit) {
    return static_cast<int>((x >> (num_qubits - 1 - qubit)) & 1U);
}

inline std::string to_bitstring(std::uint64_t x, int width) {
    std::string s(static_cast<std::size_t>(width), '0');
    for (int j = 0; j < width; ++j)
        if ((x >> (width - 1 - j)) & 1U) s[static_cast<std::size_t>(j)] = '1';
    return s;
}

inline std::uint64_t from_bitstring(std::string_view s) {
    if (s.empty() || s.size() > 63) throw domain_error("bitstring must have 1..63 characters");
    std::uint64_t x = 0;
    for (char c : s) {
        if (c != '0' && c != '1') throw domain_error("bitstring contains a character other than 0/1");
        x = (x << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return x;
}

inline int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

// Inner product over GF(2).
inline int dot2(std::uint64_t x, std::uint64_t y) { return popcount(x & y) & 1; }

// Value of the sub-register `qubits` inside index x; qubits[0] is its most significant bit.
inline std::uint64_t extract_bits(std::uint64_t x, int num_qubits, const std::vector<int>& qubits) {
    std::uint64_t v = 0;
    for (int q : qubits) v = (v << 1) | static_cast<std::uint64_t>(bit_of(x, num_qubits, q));
    return v;
}

inline std::uint64_t deposit_bits(std::uint64_t x, int num_qubits, const std::vector<int>& qubits,
                                  std::uint64_t value) {
    const int k = static_cast<int>(qubits.size());
    for (int i = 0; i < k; ++i) {
        std::uint64_t m = qubit_mask(num_qubits, qubits[static_cast<std::size_t>(i)]);
        if ((value >> (k - 1 - i)) & 1U)
            x |= m;
        else
            x &= ~m;
    }
    return x;
}

inline std::vector<int> qubit_range(int first, int count) {
    std::vector<int> qs(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) qs[static_cast<std::size_t>(i)] = first + i;
    return qs;
}

inline bool is_power_of_two(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

inline int floor_log2(std::uint64_t x) { return 63 - __builtin_clzll(x); }

inline int ceil_log2(std::uint64_t x) { return x <= 1 ? 0 : floor_log2(x - 1) + 1; }

}  // namespace qsim
