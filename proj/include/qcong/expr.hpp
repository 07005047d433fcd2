#pragma once

// Small expression language used by case definitions.
//
// The same syntax serves three roles:
//   * integer expressions over n, r, d, j, k, p (bounds, exponents, targets),
//   * q-side values built from q, a, qint(), poch(), qbinom(), kron(),
//   * classical values built from binom(), rf(), fact() and rationals.
// Juxtaposition multiplies ("8k+1", "2(n+1)"); '^' binds tighter than
// juxtaposition and is right associative; single-letter names are always
// variables and longer names followed by '(' are function calls; '/' in integer context must divide
// exactly and raises NonIntegral otherwise.

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcong/polycore.hpp"

namespace qcong {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at offset " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const noexcept { return pos_; }

private:
    std::size_t pos_;
};

/// An integer-context subexpression did not evaluate to an integer.
class NonIntegral : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { number, symbol, add, sub, mul, div, mod, neg, pow, call };
    Kind kind = Kind::number;
    Integer value;            // number
    std::string name;         // symbol or function name
    std::vector<ExprPtr> args;

    std::string to_string() const;
    bool mentions(const std::string& symbol) const;
};

ExprPtr parse_expr(const std::string& text);

ExprPtr make_number(long v);
ExprPtr make_symbol(const std::string& name);
ExprPtr make_binary(Expr::Kind kind, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_call(const std::string& name, std::vector<ExprPtr> args);

/// Variable assignment for integer evaluation.
using IntEnv = std::map<std::string, long>;

/// Evaluates in integer context. Supported functions: floor(a,b), ceil(a,b),
/// binom(x,c), gcd(a,b), kron(a,b), delta(a,b), lnr(a,b,n) (least
/// nonnegative residue of a/b mod n), min, max, abs.
long eval_int(const Expr& e, const IntEnv& env);
long eval_int(const std::string& text, const IntEnv& env);

/// "lhs op rhs" with op one of == = != <= >= < >; "odd" and "even" are
/// shorthands for n%2==1 and n%2==0.
struct Constraint {
    std::string text;
    ExprPtr lhs;
    ExprPtr rhs;
    std::string op;

    static Constraint parse(const std::string& text);
    bool holds(const IntEnv& env) const;
};

/// Keeps the source text next to the parsed tree so that case files
/// round-trip exactly.
struct SourceExpr {
    std::string text;
    ExprPtr tree;

    SourceExpr() = default;
    SourceExpr(const std::string& t) : text(t), tree(parse_expr(t)) {}  // NOLINT
    SourceExpr(const char* t) : SourceExpr(std::string(t)) {}           // NOLINT
    explicit SourceExpr(ExprPtr e) : text(e->to_string()), tree(std::move(e)) {}

    bool empty() const noexcept { return tree == nullptr; }
    long eval(const IntEnv& env) const { return eval_int(*tree, env); }
    bool operator==(const SourceExpr& o) const { return text == o.text; }
};

}  // namespace qcong
