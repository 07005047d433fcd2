#include <functional>

#include "qcong/catalog.hpp"

namespace qcong {

namespace {

using Rewrite = std::function<ExprPtr(const Expr&)>;

// Rebuilds the tree, applying `f` to the first node (preorder) for which it
// returns non-null.
ExprPtr rewrite_first(const ExprPtr& e, const Rewrite& f, bool& done) {
    if (done) return e;
    if (ExprPtr r = f(*e)) {
        done = true;
        return r;
    }
    if (e->args.empty()) return e;
    auto copy = std::make_shared<Expr>(*e);
    for (auto& a : copy->args) a = rewrite_first(a, f, done);
    return copy;
}

bool is_k_linear(const Expr& e, Integer& coeff) {
    if (e.kind != Expr::Kind::add && e.kind != Expr::Kind::sub) return false;
    const Expr& l = *e.args[0];
    if (e.args[1]->kind != Expr::Kind::number) return false;
    if (l.kind == Expr::Kind::mul && l.args[0]->kind == Expr::Kind::number && l.args[1]->kind == Expr::Kind::symbol &&
        l.args[1]->name == "k") {
        coeff = l.args[0]->value;
        return true;
    }
    return false;
}

ExprPtr bracket_shift(const Expr& e) {
    Integer c;
    if (!is_k_linear(e, c)) return nullptr;
    auto lin = make_binary(Expr::Kind::mul, make_number(c.get_si() + 1), make_symbol("k"));
    return make_binary(e.kind, lin, e.args[1]);
}

ExprPtr q_exponent_shift(const Expr& e) {
    if (e.kind == Expr::Kind::symbol && e.name == "q") return make_binary(Expr::Kind::pow, make_symbol("q"), make_number(2));
    if (e.kind == Expr::Kind::pow && e.args[0]->kind == Expr::Kind::symbol && e.args[0]->name == "q")
        return make_binary(Expr::Kind::pow, e.args[0], make_binary(Expr::Kind::add, e.args[1], make_number(1)));
    return nullptr;
}

ExprPtr classical_exponent_shift(const Expr& e) {
    if (e.kind == Expr::Kind::pow && e.args[0]->kind == Expr::Kind::number && e.args[1]->mentions("k"))
        return make_binary(Expr::Kind::pow, e.args[0], make_binary(Expr::Kind::add, e.args[1], make_number(1)));
    return nullptr;
}

}  // namespace

std::string to_string(Mutation m) {
    switch (m) {
        case Mutation::prefactor_times_q: return "prefactor_times_q";
        case Mutation::prefactor_sign: return "prefactor_sign";
        case Mutation::bracket_shift: return "bracket_shift";
        case Mutation::exponent_shift: return "exponent_shift";
    }
    return "?";
}

std::optional<Case> mutate(const Case& c, Mutation m) {
    Case out = c;
    out.id = c.id + "~" + to_string(m);
    const bool classical = c.domain == Domain::classical;
    if (m == Mutation::prefactor_times_q) {
        if (classical) return std::nullopt;
        out.prefactor = SourceExpr("q (" + c.prefactor.text + ")");
        return out;
    }
    if (m == Mutation::prefactor_sign) {
        out.prefactor = SourceExpr("-(" + c.prefactor.text + ")");
        return out;
    }
    // Summand mutations keep the right-hand side as it was.
    if (c.has_rhs_sum() && c.rhs.summand.empty()) out.rhs.summand = c.lhs.summand;
    bool done = false;
    const Rewrite f = m == Mutation::bracket_shift ? Rewrite(bracket_shift)
                      : classical                  ? Rewrite(classical_exponent_shift)
                                                   : Rewrite(q_exponent_shift);
    ExprPtr tree = rewrite_first(c.lhs.summand.tree, f, done);
    if (!done) return std::nullopt;
    out.lhs.summand = SourceExpr(tree);
    return out;
}

}  // namespace qcong
