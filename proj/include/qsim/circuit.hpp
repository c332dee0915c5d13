#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qsim/errors.hpp"
#include "qsim/gates.hpp"
#include "qsim/limits.hpp"
#include "qsim/qstate.hpp"
#include "qsim/random.hpp"

namespace qsim {

class Circuit {
public:
    explicit Circuit(int num_qubits = 1) : num_qubits_(num_qubits) {
        if (num_qubits < 1) throw domain_error("a circuit needs at least one qubit");
    }

    int num_qubits() const { return num_qubits_; }
    const std::vector<GateApplication>& ops() const { return ops_; }
    const std::vector<int>& measurements() const { return measurements_; }
    std::size_t size() const { return ops_.size(); }
    bool empty() const { return ops_.empty(); }

    Circuit& add(GateApplication app) {
        if (!measurements_.empty()) throw domain_error("gates cannot follow terminal measurements");
        detail::validate_application(num_qubits_, app);
        ops_.push_back(std::move(app));
        return *this;
    }

    Circuit& add(const Gate& g, std::vector<int> targets, std::vector<Control> controls = {}) {
        return add(make_app(g, std::move(targets), std::move(controls)));
    }

    Circuit& gate(const std::string& name, int q) { return add(standard_gate(name), {q}); }
    Circuit& h(int q) { return gate("H", q); }
    Circuit& x(int q) { return gate("X", q); }
    Circuit& z(int q) { return gate("Z", q); }
    Circuit& cx(int control, int target) { return add(standard_gate("X"), {target}, {pos(control)}); }
    Circuit& mcx(std::vector<Control> controls, int target) {
        return add(standard_gate("X"), {target}, std::move(controls));
    }
    Circuit& swap(int a, int b) { return add(standard_gate("SWAP"), {a, b}); }

    Circuit& h_layer(const std::vector<int>& qubits) {
        for (int q : qubits) h(q);
        return *this;
    }

    // Appends another circuit whose qubit j is mapped onto qubit_map[j].
    Circuit& append(const Circuit& other, const std::vector<int>& qubit_map) {
        if (static_cast<int>(qubit_map.size()) != other.num_qubits())
            throw domain_error("qubit map size does not match the appended circuit");
        for (const auto& op : other.ops()) {
            GateApplication mapped = op;
            for (auto& t : mapped.targets) t = qubit_map[static_cast<std::size_t>(t)];
            for (auto& c : mapped.controls) c.qubit = qubit_map[static_cast<std::size_t>(c.qubit)];
            add(std::move(mapped));
        }
        return *this;
    }

    Circuit& append(const Circuit& other) {
        if (other.num_qubits() > num_qubits_) throw domain_error("appended circuit is wider than the target");
        std::vector<int> identity(static_cast<std::size_t>(other.num_qubits()));
        for (int i = 0; i < other.num_qubits(); ++i) identity[static_cast<std::size_t>(i)] = i;
        return append(other, identity);
    }

    Circuit& measure(std::vector<int> qubits) {
        for (int q : qubits)
            if (q < 0 || q >= num_qubits_) throw domain_error("measured qubit out of range");
        measurements_ = std::move(qubits);
        return *this;
    }

    // Reversed sequence of adjoint gates.
    Circuit inverse() const {
        Circuit inv(num_qubits_);
        for (auto it = ops_.rbegin(); it != ops_.rend(); ++it)
            inv.add(make_app(adjoint(it->gate), it->targets, it->controls));
        return inv;
    }

private:
    int num_qubits_;
    std::vector<GateApplication> ops_;
    std::vector<int> measurements_;
};

inline void check_simulation_width(int n) {
    if (n > limits::max_qubits())
        throw resource_error("circuit width " + std::to_string(n) + " exceeds the simulation cap of " +
                             std::to_string(limits::max_qubits()) + " qubits");
}

inline void simulate_inplace(const Circuit& c, StateVector& s) {
    if (s.num_qubits() != c.num_qubits()) throw domain_error("state and circuit widths differ");
    check_simulation_width(c.num_qubits());
    for (const auto& op : c.ops()) apply_inplace(s, op);
}

inline StateVector simulate(const Circuit& c, StateVector initial) {
    simulate_inplace(c, initial);
    return initial;
}

inline StateVector simulate(const Circuit& c) { return simulate(c, basis_state(c.num_qubits(), 0)); }

// Shot sampling from the exact final distribution of the measured qubits.
inline Distribution run(const Circuit& c, std::uint64_t shots, std::uint64_t seed,
                        const StateVector* initial = nullptr) {
    if (c.measurements().empty()) throw domain_error("circuit declares no measurements");
    if (shots < 1) throw domain_error("shots must be at least 1");
    if (shots > limits::max_shots) throw resource_error("shot count exceeds the cap");
    StateVector final_state = initial ? simulate(c, *initial) : simulate(c);
    Rng rng(seed);
    return sample_distribution(marginal(final_state, c.measurements()), static_cast<int>(c.measurements().size()),
                               shots, rng);
}

inline Matrix unitary_of(const Circuit& c) {
    const int n = c.num_qubits();
    if (n > limits::max_unitary_qubits)
        throw resource_error("unitary_of is limited to " + std::to_string(limits::max_unitary_qubits) + " qubits");
    const std::uint64_t dim = std::uint64_t{1} << n;
    Matrix u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::uint64_t x = 0; x < dim; ++x) {
        StateVector col = simulate(c, basis_state(n, x));
        for (std::uint64_t y = 0; y < dim; ++y) u(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) = col[y];
    }
    return u;
}

// True iff a = gamma * b for some unit gamma, with gamma taken from b's largest entry.
inline bool equiv_up_to_phase(const Matrix& a, const Matrix& b, double tol = 1e-10) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw domain_error("matrix shapes differ");
    Eigen::Index r = 0, col = 0;
    const double bmax = b.cwiseAbs().maxCoeff(&r, &col);
    if (bmax == 0.0) return a.cwiseAbs().maxCoeff() <= tol;
    std::complex<double> ratio = a(r, col) / b(r, col);
    if (std::abs(ratio) == 0.0) return false;
    std::complex<double> gamma = ratio / std::abs(ratio);
    return (a - gamma * b).cwiseAbs().maxCoeff() <= tol;
}

inline std::string to_text(const Circuit& c) {
    std::ostringstream out;
    for (const auto& op : c.ops()) {
        out << op.gate.name << " targets=[";
        for (std::size_t i = 0; i < op.targets.size(); ++i) out << (i ? "," : "") << op.targets[i];
        out << "] controls=[";
        for (std::size_t i = 0; i < op.controls.size(); ++i)
            out << (i ? "," : "") << '(' << op.controls[i].qubit << ','
                << (op.controls[i].polarity == Polarity::positive ? '+' : '-') << ')';
        out << "]\n";
    }
    if (!c.measurements().empty()) {
        out << "MEASURE [";
        for (std::size_t i = 0; i < c.measurements().size(); ++i) out << (i ? "," : "") << c.measurements()[i];
        out << "]\n";
    }
    return out.str();
}

}  // namespace qsim
