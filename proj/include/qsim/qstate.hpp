#pragma once

// Dense state vectors. Qubit 0 is the most significant bit of the basis index.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "qsim/bits.hpp"
#include "qsim/errors.hpp"
#include "qsim/limits.hpp"
#include "qsim/random.hpp"

namespace qsim {

using Amplitude = std::complex<double>;

inline constexpr double norm_tolerance = 1e-10;

class StateVector {
public:
    explicit StateVector(int num_qubits) : num_qubits_(checked_width(num_qubits)), amps_(dimension_of(num_qubits_)) {
        amps_[0] = 1.0;
    }

    StateVector(int num_qubits, std::vector<Amplitude> amps)
        : num_qubits_(checked_width(num_qubits)), amps_(std::move(amps)) {
        if (amps_.size() != dimension_of(num_qubits_))
            throw domain_error("amplitude count must be 2^num_qubits");
        for (const auto& a : amps_)
            if (!std::isfinite(a.real()) || !std::isfinite(a.imag()))
                throw domain_error("amplitudes must be finite");
    }

    // Scales the amplitudes to unit norm.
    static StateVector normalized(int num_qubits, std::vector<Amplitude> amps) {
        StateVector s(num_qubits, std::move(amps));
        s.renormalize();
        return s;
    }

    int num_qubits() const { return num_qubits_; }
    std::uint64_t dimension() const { return amps_.size(); }

    const std::vector<Amplitude>& amplitudes() const { return amps_; }
    std::vector<Amplitude>& amplitudes() { return amps_; }

    const Amplitude& operator[](std::uint64_t x) const { return amps_[x]; }
    Amplitude& operator[](std::uint64_t x) { return amps_[x]; }

    double norm() const {
        double acc = 0.0;
        for (const auto& a : amps_) acc += std::norm(a);
        return std::sqrt(acc);
    }

    void renormalize() {
        double n = norm();
        if (n == 0.0) throw invariant_violation("cannot normalize the zero vector");
        for (auto& a : amps_) a /= n;
    }

private:
    static int checked_width(int n) {
        if (n < 1) throw domain_error("a state needs at least one qubit");
        if (n > limits::hard_max_qubits) throw resource_error("state width exceeds the hard qubit cap");
        return n;
    }
    static std::size_t dimension_of(int n) { return std::size_t{1} << n; }

    int num_qubits_;
    std::vector<Amplitude> amps_;
};

struct Distribution {
    enum class Kind { exact, sampled };

    Kind kind = Kind::exact;
    // probability (exact) or count (sampled), keyed by bitstring
    std::map<std::string, double> entries;
    std::uint64_t shots = 0;

    double at(const std::string& key) const {
        auto it = entries.find(key);
        return it == entries.end() ? 0.0 : it->second;
    }

    double total() const {
        double acc = 0.0;
        for (const auto& [k, v] : entries) acc += v;
        return acc;
    }
};

// Exact distribution over all width-bit strings from a dense probability vector.
inline Distribution exact_distribution(const std::vector<double>& probs, int width) {
    Distribution d;
    d.kind = Distribution::Kind::exact;
    for (std::uint64_t x = 0; x < probs.size(); ++x) d.entries.emplace_hint(d.entries.end(), to_bitstring(x, width), probs[x]);
    return d;
}

inline Distribution sample_distribution(const std::vector<double>& probs, int width, std::uint64_t shots, Rng& rng) {
    if (shots < 1) throw domain_error("shots must be at least 1");
    if (shots > limits::max_shots) throw resource_error("shot count exceeds the cap");
    std::vector<std::uint64_t> counts(probs.size(), 0);
    CdfSampler sampler(probs);
    for (std::uint64_t i = 0; i < shots; ++i) ++counts[sampler(rng)];
    Distribution d;
    d.kind = Distribution::Kind::sampled;
    d.shots = shots;
    for (std::uint64_t x = 0; x < counts.size(); ++x)
        if (counts[x] > 0) d.entries.emplace(to_bitstring(x, width), static_cast<double>(counts[x]));
    return d;
}

struct MeasurementRecord {
    std::vector<int> measured_qubits;
    std::string outcome;
    double probability = 0.0;
    StateVector post_state{1};

    std::uint64_t value() const { return from_bitstring(outcome); }
};

inline StateVector basis_state(int num_qubits, std::uint64_t x) {
    StateVector s(num_qubits);
    if (x >= s.dimension()) throw domain_error("basis index out of range");
    s[0] = 0.0;
    s[x] = 1.0;
    return s;
}

// Equal superposition of all basis states.
inline StateVector uniform_state(int num_qubits) {
    StateVector s(num_qubits);
    const double amp = 1.0 / std::sqrt(static_cast<double>(s.dimension()));
    for (auto& a : s.amplitudes()) a = amp;
    return s;
}

inline StateVector kron(const StateVector& a, const StateVector& b) {
    const int n = a.num_qubits() + b.num_qubits();
    std::vector<Amplitude> out(std::size_t{1} << n);
    const std::uint64_t db = b.dimension();
    for (std::uint64_t x = 0; x < a.dimension(); ++x)
        for (std::uint64_t y = 0; y < db; ++y) out[x * db + y] = a[x] * b[y];
    return StateVector(n, std::move(out));
}

inline std::vector<double> probability_vector(const StateVector& s) {
    std::vector<double> p(s.dimension());
    for (std::uint64_t x = 0; x < s.dimension(); ++x) p[x] = std::norm(s[x]);
    return p;
}

inline Distribution probabilities(const StateVector& s) {
    return exact_distribution(probability_vector(s), s.num_qubits());
}

namespace detail {

inline void check_qubit_list(const StateVector& s, const std::vector<int>& qubits) {
    std::vector<int> sorted = qubits;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw domain_error("qubit indices must be distinct");
    for (int q : sorted)
        if (q < 0 || q >= s.num_qubits()) throw domain_error("qubit index out of range");
}

}  // namespace detail

// Marginal distribution of the sub-register `qubits` (qubits[0] most significant).
inline std::vector<double> marginal(const StateVector& s, const std::vector<int>& qubits) {
    detail::check_qubit_list(s, qubits);
    std::vector<double> p(std::size_t{1} << qubits.size(), 0.0);
    const int n = s.num_qubits();
    for (std::uint64_t x = 0; x < s.dimension(); ++x) p[extract_bits(x, n, qubits)] += std::norm(s[x]);
    return p;
}

// Post-measurement state for a given outcome of `qubits`; throws if the outcome has zero probability.
inline MeasurementRecord project(const StateVector& s, std::vector<int> qubits, std::uint64_t outcome) {
    detail::check_qubit_list(s, qubits);
    std::sort(qubits.begin(), qubits.end());
    const int n = s.num_qubits();
    const int k = static_cast<int>(qubits.size());
    if (k < 64 && outcome >= (std::uint64_t{1} << k)) throw domain_error("outcome out of range");
    std::vector<Amplitude> amps(s.dimension(), 0.0);
    double prob = 0.0;
    for (std::uint64_t x = 0; x < s.dimension(); ++x) {
        if (extract_bits(x, n, qubits) != outcome) continue;
        amps[x] = s[x];
        prob += std::norm(s[x]);
    }
    if (prob <= 0.0) throw invariant_violation("projection onto a zero-probability outcome");
    MeasurementRecord rec;
    rec.measured_qubits = qubits;
    rec.outcome = to_bitstring(outcome, k);
    rec.probability = prob;
    rec.post_state = StateVector::normalized(n, std::move(amps));
    return rec;
}

inline MeasurementRecord measure(const StateVector& s, std::vector<int> qubits, Rng& rng) {
    detail::check_qubit_list(s, qubits);
    if (qubits.empty()) throw domain_error("nothing to measure");
    std::sort(qubits.begin(), qubits.end());
    std::vector<double> p = marginal(s, qubits);
    double total = 0.0;
    for (double v : p) total += v;
    if (!(total > 0.0)) throw invariant_violation("every outcome has zero probability");
    return project(s, qubits, sample_index(p, rng));
}

inline int schmidt_rank(const StateVector& s, const std::vector<int>& left_qubits, double tol = 1e-8) {
    detail::check_qubit_list(s, left_qubits);
    const int n = s.num_qubits();
    if (left_qubits.empty() || static_cast<int>(left_qubits.size()) >= n)
        throw domain_error("the cut must be a proper nonempty subset");
    std::vector<int> right;
    for (int q = 0; q < n; ++q)
        if (std::find(left_qubits.begin(), left_qubits.end(), q) == left_qubits.end()) right.push_back(q);
    Eigen::MatrixXcd coeff = Eigen::MatrixXcd::Zero(Eigen::Index{1} << left_qubits.size(),
                                                    Eigen::Index{1} << right.size());
    for (std::uint64_t x = 0; x < s.dimension(); ++x)
        coeff(static_cast<Eigen::Index>(extract_bits(x, n, left_qubits)),
              static_cast<Eigen::Index>(extract_bits(x, n, right))) = s[x];
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(coeff);
    const auto& sv = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > tol) ++rank;
    return rank;
}

struct BlochAngles {
    double theta = 0.0;
    double phi = 0.0;
};

inline BlochAngles bloch_angles(const StateVector& s, double tol = 1e-12) {
    if (s.num_qubits() != 1) throw domain_error("bloch angles need a single-qubit state");
    const double r0 = std::abs(s[0]);
    const double r1 = std::abs(s[1]);
    BlochAngles out;
    out.theta = 2.0 * std::atan2(r1, r0);
    if (r1 < tol || r0 < tol) return out;
    double phi = std::arg(s[1]) - std::arg(s[0]);
    constexpr double two_pi = 2.0 * std::numbers::pi;
    phi = std::fmod(phi, two_pi);
    if (phi < 0.0) phi += two_pi;
    if (phi >= two_pi) phi = 0.0;
    out.phi = phi;
    return out;
}

}  // namespace qsim
