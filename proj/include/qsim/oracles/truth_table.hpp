#pragma once

#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qsim/bits.hpp"
#include "qsim/errors.hpp"

namespace qsim {

struct TruthTable {
    int n_in = 1;
    int n_out = 1;
    std::vector<std::uint64_t> rows;  // rows[x] = f(x), n_out bits wide

    TruthTable() = default;
    TruthTable(int inputs, int outputs, std::vector<std::uint64_t> values)
        : n_in(inputs), n_out(outputs), rows(std::move(values)) {
        if (n_in < 1 || n_in > 20 || n_out < 1 || n_out > 20) throw domain_error("truth table widths must be in 1..20");
        if (rows.size() != (std::size_t{1} << n_in)) throw domain_error("truth table needs 2^n_in rows");
        for (auto v : rows)
            if (v >> n_out) throw domain_error("truth table row wider than n_out");
    }

    static TruthTable from_function(int inputs, int outputs, const std::function<std::uint64_t(std::uint64_t)>& f) {
        std::vector<std::uint64_t> values(std::size_t{1} << inputs);
        for (std::uint64_t x = 0; x < values.size(); ++x) values[x] = f(x);
        return {inputs, outputs, std::move(values)};
    }

    // Single-output table whose 1-rows are the given inputs.
    static TruthTable from_ones(int inputs, const std::vector<std::uint64_t>& ones) {
        std::vector<std::uint64_t> values(std::size_t{1} << inputs, 0);
        for (auto x : ones) {
            if (x >= values.size()) throw domain_error("input out of range for the truth table");
            values[x] = 1;
        }
        return {inputs, 1, std::move(values)};
    }

    std::uint64_t operator()(std::uint64_t x) const { return rows.at(x); }
};

// Text format: one line per input, "<input bits> <output bits>". Blank lines
// and lines starting with '#' are skipped; every input must appear exactly once.
inline TruthTable parse_truth_table(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n_in = -1, n_out = -1;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        std::string xs, ys, extra;
        if (!(ls >> xs >> ys) || (ls >> extra))
            throw domain_error("truth table line " + std::to_string(line_no) + ": expected '<input bits> <output bits>'");
        if (n_in < 0) {
            n_in = static_cast<int>(xs.size());
            n_out = static_cast<int>(ys.size());
        }
        if (static_cast<int>(xs.size()) != n_in || static_cast<int>(ys.size()) != n_out)
            throw domain_error("truth table line " + std::to_string(line_no) + ": inconsistent widths");
        entries.emplace_back(from_bitstring(xs), from_bitstring(ys));
    }
    if (n_in < 1) throw domain_error("truth table is empty");
    if (n_in > 20) throw domain_error("truth table input width exceeds 20");
    std::vector<std::uint64_t> rows(std::size_t{1} << n_in, 0);
    std::vector<bool> seen(rows.size(), false);
    for (auto [x, y] : entries) {
        if (seen[x]) throw domain_error("truth table lists input " + to_bitstring(x, n_in) + " twice");
        seen[x] = true;
        rows[x] = y;
    }
    for (std::size_t x = 0; x < rows.size(); ++x)
        if (!seen[x]) throw domain_error("truth table is missing input " + to_bitstring(x, n_in));
    return {n_in, n_out, std::move(rows)};
}

inline std::string format_truth_table(const TruthTable& tt) {
    std::string out;
    for (std::uint64_t x = 0; x < tt.rows.size(); ++x)
        out += to_bitstring(x, tt.n_in) + ' ' + to_bitstring(tt.rows[x], tt.n_out) + '\n';
    return out;
}

}  // namespace qsim
