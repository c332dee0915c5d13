#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qsim/bits.hpp"
#include "qsim/errors.hpp"

namespace qsim {

struct BooleanExpr {
    enum class Op { var, negate, conj, disj, exclusive };

    Op op = Op::var;
    int index = 0;                  // variable index for Op::var
    std::vector<BooleanExpr> args;  // operands otherwise

    static BooleanExpr variable(int i) {
        if (i < 0) throw domain_error("variable index must be non-negative");
        BooleanExpr e;
        e.index = i;
        return e;
    }
    static BooleanExpr negation(BooleanExpr a) { return make(Op::negate, {std::move(a)}); }
    static BooleanExpr all_of(std::vector<BooleanExpr> a) { return make(Op::conj, std::move(a)); }
    static BooleanExpr any_of(std::vector<BooleanExpr> a) { return make(Op::disj, std::move(a)); }
    static BooleanExpr parity_of(std::vector<BooleanExpr> a) { return make(Op::exclusive, std::move(a)); }

    // One more than the largest variable index used.
    int arity() const {
        if (op == Op::var) return index + 1;
        int a = 0;
        for (const auto& c : args) a = std::max(a, c.arity());
        return a;
    }

    // Variable i reads qubit i of an n_vars-bit assignment (qubit 0 most significant).
    bool eval(std::uint64_t assignment, int n_vars) const {
        switch (op) {
            case Op::var:
                if (index >= n_vars) throw domain_error("variable index exceeds the declared arity");
                return bit_of(assignment, n_vars, index) != 0;
            case Op::negate:
                return !args[0].eval(assignment, n_vars);
            case Op::conj:
                for (const auto& c : args)
                    if (!c.eval(assignment, n_vars)) return false;
                return true;
            case Op::disj:
                for (const auto& c : args)
                    if (c.eval(assignment, n_vars)) return true;
                return false;
            case Op::exclusive: {
                bool acc = false;
                for (const auto& c : args) acc ^= c.eval(assignment, n_vars);
                return acc;
            }
        }
        return false;
    }

private:
    static BooleanExpr make(Op op, std::vector<BooleanExpr> a) {
        if (a.empty()) throw domain_error("operator needs at least one operand");
        if (op == Op::negate && a.size() != 1) throw domain_error("negation takes one operand");
        BooleanExpr e;
        e.op = op;
        e.args = std::move(a);
        return e;
    }
};

struct ParsedExpr {
    BooleanExpr expr;
    std::string variables;  // variables[i] is the letter mapped to index i
};

namespace detail {

// Recursive descent, precedence ! > & > ^ > |.
class ExprParser {
public:
    explicit ExprParser(std::string_view text) : text_(text) {}

    ParsedExpr parse() {
        ParsedExpr out;
        out.expr = parse_or();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected character");
        if (vars_.empty()) fail("expression has no variables");
        out.variables = vars_;
        return out;
    }

private:
    BooleanExpr parse_or() {
        std::vector<BooleanExpr> terms{parse_xor()};
        while (accept('|')) terms.push_back(parse_xor());
        return terms.size() == 1 ? std::move(terms[0]) : BooleanExpr::any_of(std::move(terms));
    }
    BooleanExpr parse_xor() {
        std::vector<BooleanExpr> terms{parse_and()};
        while (accept('^')) terms.push_back(parse_and());
        return terms.size() == 1 ? std::move(terms[0]) : BooleanExpr::parity_of(std::move(terms));
    }
    BooleanExpr parse_and() {
        std::vector<BooleanExpr> terms{parse_unary()};
        while (accept('&')) terms.push_back(parse_unary());
        return terms.size() == 1 ? std::move(terms[0]) : BooleanExpr::all_of(std::move(terms));
    }
    BooleanExpr parse_unary() {
        if (accept('!')) return BooleanExpr::negation(parse_unary());
        if (accept('(')) {
            BooleanExpr inner = parse_or();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        skip_space();
        if (pos_ < text_.size() && text_[pos_] >= 'a' && text_[pos_] <= 'z') {
            char c = text_[pos_++];
            auto at = vars_.find(c);
            if (at == std::string::npos) {
                vars_.push_back(c);
                at = vars_.size() - 1;
            }
            return BooleanExpr::variable(static_cast<int>(at));
        }
        fail("expected a variable, '!' or '('");
        return {};
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw domain_error("expression parse error at position " + std::to_string(pos_) + ": " + msg);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::string vars_;
};

}  // namespace detail

// Grammar: letters a..z (indexed in order of first appearance), '!', '&', '^', '|', parentheses.
inline ParsedExpr parse_expression(std::string_view text) { return detail::ExprParser(text).parse(); }

}  // namespace qsim
