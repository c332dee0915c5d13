#pragma once

// Reversible-circuit synthesis of classical functions.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "qsim/bits.hpp"
#include "qsim/circuit.hpp"
#include "qsim/errors.hpp"
#include "qsim/oracles/boolean_expr.hpp"
#include "qsim/oracles/truth_table.hpp"

namespace qsim {

namespace detail {

// Controls on qubits 0..n-1 whose polarities spell out x.
inline std::vector<Control> row_controls(std::uint64_t x, int n) {
    std::vector<Control> cs;
    for (int q = 0; q < n; ++q) cs.push_back(bit_of(x, n, q) ? pos(q) : neg(q));
    return cs;
}

inline std::vector<std::uint64_t> sorted_unique(std::vector<std::uint64_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace detail

// |x>|j> -> |x>|j xor f(x)>, one multi-controlled X per 1-row.
inline Circuit synth_bit_oracle(const TruthTable& tt) {
    if (tt.n_out != 1) throw domain_error("synth_bit_oracle needs a single-output table");
    Circuit c(tt.n_in + 1);
    for (std::uint64_t x = 0; x < tt.rows.size(); ++x)
        if (tt.rows[x] & 1U) c.mcx(detail::row_controls(x, tt.n_in), tt.n_in);
    return c;
}

// |x>|y> -> |x>|y xor f(x)>, one bank of multi-controlled X per output column.
inline Circuit synth_multi_oracle(const TruthTable& tt) {
    Circuit c(tt.n_in + tt.n_out);
    for (int j = 0; j < tt.n_out; ++j)
        for (std::uint64_t x = 0; x < tt.rows.size(); ++x)
            if (bit_of(tt.rows[x], tt.n_out, j)) c.mcx(detail::row_controls(x, tt.n_in), tt.n_in + j);
    return c;
}

// Diagonal oracle with -1 exactly on the marked strings. Each marked x uses
// X^(1-x_last) H C^{n-1}(X) H X^(1-x_last) on the last qubit.
inline Circuit synth_phase_oracle(const std::vector<std::uint64_t>& marked, int n) {
    if (n < 1) throw domain_error("phase oracle needs n >= 1");
    Circuit c(n);
    const int last = n - 1;
    for (std::uint64_t x : detail::sorted_unique(marked)) {
        if (x >> n) throw domain_error("marked string wider than the register");
        const bool flip = (x & 1U) == 0;
        if (flip) c.x(last);
        c.h(last);
        c.mcx(detail::row_controls(x >> 1, n - 1), last);
        c.h(last);
        if (flip) c.x(last);
    }
    return c;
}

// |x>|j> -> |x>|j xor (s.x)>: a CNOT from every qubit i with s_i = 1 onto qubit n.
inline Circuit synth_bv_oracle(std::uint64_t s, int n) {
    if (n < 1 || (s >> n)) throw domain_error("hidden string does not fit the register");
    Circuit c(n + 1);
    for (int i = 0; i < n; ++i)
        if (bit_of(s, n, i)) c.cx(i, n);
    return c;
}

// Phase form of the BV oracle: Z on every qubit i with s_i = 1.
inline Circuit synth_bv_phase_oracle(std::uint64_t s, int n) {
    if (n < 1 || (s >> n)) throw domain_error("hidden string does not fit the register");
    Circuit c(n);
    for (int i = 0; i < n; ++i)
        if (bit_of(s, n, i)) c.z(i);
    return c;
}

struct ExprCircuit {
    Circuit circuit;
    int num_inputs = 0;
    int result_qubit = 0;
    int ancilla_count = 0;
    std::vector<int> ancilla_init;  // initial bit of ancilla i (qubit num_inputs + i)

    int num_qubits() const { return circuit.num_qubits(); }

    // Basis index holding the assignment on the inputs and every ancilla at its initial value.
    std::uint64_t initial_index(std::uint64_t assignment) const {
        const int n = num_qubits();
        std::uint64_t idx = assignment << ancilla_count;
        for (int i = 0; i < ancilla_count; ++i)
            if (ancilla_init[static_cast<std::size_t>(i)]) idx |= qubit_mask(n, num_inputs + i);
        return idx;
    }
};

namespace detail {

struct PendingGate {
    std::vector<Control> controls;
    int target;
};

class ExprCompiler {
public:
    explicit ExprCompiler(int n_vars) : n_vars_(n_vars) {}

    struct Literal {
        int qubit;
        bool positive;
    };

    Literal compile(const BooleanExpr& e) {
        using Op = BooleanExpr::Op;
        switch (e.op) {
            case Op::var:
                if (e.index >= n_vars_) throw domain_error("expression uses a variable beyond n_vars");
                return {e.index, true};
            case Op::negate: {
                Literal l = compile(e.args[0]);
                return {l.qubit, !l.positive};
            }
            case Op::conj:
            case Op::disj: {
                // AND ancilla starts at 0 and fires on all literals; OR ancilla starts at 1
                // and is cleared when every literal is false.
                const bool is_or = e.op == Op::disj;
                std::vector<Literal> lits;
                for (const auto& a : e.args) lits.push_back(compile(a));
                const int anc = allocate(is_or ? 1 : 0);
                std::vector<Control> controls;
                for (const auto& l : lits) controls.push_back({l.qubit, (l.positive != is_or) ? Polarity::positive : Polarity::negative});
                if (auto merged = merge(controls)) gates_.push_back({*merged, anc});
                return {anc, true};
            }
            case Op::exclusive: {
                std::vector<Literal> lits;
                for (const auto& a : e.args) lits.push_back(compile(a));
                const int anc = allocate(0);
                for (const auto& l : lits)
                    gates_.push_back({{{l.qubit, l.positive ? Polarity::positive : Polarity::negative}}, anc});
                return {anc, true};
            }
        }
        throw invariant_violation("unknown expression node");
    }

    int allocate(int init) {
        ancilla_init_.push_back(init);
        return n_vars_ + static_cast<int>(ancilla_init_.size()) - 1;
    }

    // Same-qubit controls: equal polarities collapse, opposite polarities can never fire.
    static std::optional<std::vector<Control>> merge(const std::vector<Control>& controls) {
        std::map<int, Polarity> seen;
        for (const auto& c : controls) {
            auto [it, inserted] = seen.emplace(c.qubit, c.polarity);
            if (!inserted && it->second != c.polarity) return std::nullopt;
        }
        std::vector<Control> out;
        for (const auto& [q, p] : seen) out.push_back({q, p});
        return out;
    }

    std::vector<PendingGate> gates_;
    std::vector<int> ancilla_init_;

private:
    int n_vars_;
};

}  // namespace detail

// Compiles e into a reversible circuit over n_vars inputs plus appended ancillas.
// With uncompute, every gate not writing the result is mirrored afterwards so
// that all other ancillas return to their initial values.
inline ExprCircuit expr_to_circuit(const BooleanExpr& e, bool uncompute, int n_vars = -1) {
    if (n_vars < 0) n_vars = e.arity();
    if (n_vars < 1) throw domain_error("expression needs at least one variable");
    detail::ExprCompiler comp(n_vars);
    auto lit = comp.compile(e);
    int result = lit.qubit;
    if (!lit.positive) {
        result = comp.allocate(0);
        comp.gates_.push_back({{neg(lit.qubit)}, result});
    }

    std::vector<detail::PendingGate> body, tail;
    for (auto& g : comp.gates_) (g.target == result && result >= n_vars ? tail : body).push_back(g);

    ExprCircuit out;
    out.num_inputs = n_vars;
    out.result_qubit = result;
    out.ancilla_count = static_cast<int>(comp.ancilla_init_.size());
    out.ancilla_init = comp.ancilla_init_;
    out.circuit = Circuit(n_vars + out.ancilla_count);
    for (const auto& g : body) out.circuit.mcx(g.controls, g.target);
    for (const auto& g : tail) out.circuit.mcx(g.controls, g.target);
    if (uncompute)
        for (auto it = body.rbegin(); it != body.rend(); ++it) out.circuit.mcx(it->controls, it->target);
    return out;
}

// Phase oracle (-1)^{e(x)} on the inputs: compute, Z on the result, uncompute.
inline ExprCircuit expr_phase_oracle(const BooleanExpr& e, int n_vars = -1) {
    ExprCircuit fwd = expr_to_circuit(e, false, n_vars);
    ExprCircuit out = fwd;
    out.circuit = Circuit(fwd.num_qubits());
    out.circuit.append(fwd.circuit);
    out.circuit.z(fwd.result_qubit);
    out.circuit.append(fwd.circuit.inverse());
    return out;
}

struct LadderCircuit {
    Circuit circuit;
    std::vector<int> controls;
    int target = 0;
    std::vector<int> ancillas;
};

// n-control X from 2-control Toffolis: controls 0..n-1, target n, ancillas n+1..2n-2.
inline LadderCircuit toffoli_ladder(int n_controls) {
    if (n_controls < 3) throw domain_error("toffoli_ladder needs at least 3 controls");
    const int n = n_controls;
    LadderCircuit out;
    out.circuit = Circuit(2 * n - 1);
    out.controls = qubit_range(0, n);
    out.target = n;
    out.ancillas = qubit_range(n + 1, n - 2);
    std::vector<std::pair<std::vector<Control>, int>> compute;
    compute.push_back({{pos(0), pos(1)}, out.ancillas[0]});
    for (int i = 1; i < n - 2; ++i)
        compute.push_back({{pos(out.ancillas[static_cast<std::size_t>(i - 1)]), pos(i + 1)}, out.ancillas[static_cast<std::size_t>(i)]});
    for (const auto& [cs, t] : compute) out.circuit.mcx(cs, t);
    out.circuit.mcx({pos(out.ancillas.back()), pos(n - 1)}, out.target);
    for (auto it = compute.rbegin(); it != compute.rend(); ++it) out.circuit.mcx(it->first, it->second);
    return out;
}

}  // namespace qsim
