#include "qcong/classical.hpp"

namespace qcong {

namespace {

Rational rising(const Rational& x, long k) {
    Rational r = 1;
    for (long i = 0; i < k; ++i) r *= x + i;
    return r;
}

Integer factorial(long k) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
    return f;
}

Integer binomial(long x, long c) {
    if (c < 0 || x < 0 || c > x) return 0;
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(x), static_cast<unsigned long>(c));
    return b;
}

Rational power(const Rational& b, long e) {
    if (e < 0) {
        if (b == 0) throw CaseError("zero to a negative power");
        return power(1 / b, -e);
    }
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(e));
    r.canonicalize();
    return r;
}

IntEnv env_for(const Case& c, long p, long r, std::optional<long> d) {
    if (c.domain != Domain::classical) throw CaseError(c.id + ": not a classical case");
    require_admissible(c, p, r, d);
    return instance_env(c, p, r, d);
}

Rational sum_of(const Expr& summand, long bound, IntEnv env) {
    Rational s = 0;
    for (long k = 0; k <= bound; ++k) {
        env["k"] = k;
        s += eval_rational(summand, env);
    }
    return s;
}

}  // namespace

long padic_valuation(const Integer& x, long p) {
    if (x == 0) return kInfiniteValuation;
    const Integer pp = p;
    Integer t = x;
    return static_cast<long>(mpz_remove(t.get_mpz_t(), t.get_mpz_t(), pp.get_mpz_t()));
}

long padic_valuation(const Rational& x, long p) {
    if (x == 0) return kInfiniteValuation;
    return padic_valuation(x.get_num(), p) - padic_valuation(x.get_den(), p);
}

Rational eval_rational(const Expr& e, const IntEnv& env) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::number: return Rational(e.value);
        case K::symbol: return Rational(eval_int(e, env));
        case K::add: return eval_rational(*e.args[0], env) + eval_rational(*e.args[1], env);
        case K::sub: return eval_rational(*e.args[0], env) - eval_rational(*e.args[1], env);
        case K::mul: return eval_rational(*e.args[0], env) * eval_rational(*e.args[1], env);
        case K::neg: return -eval_rational(*e.args[0], env);
        case K::div: {
            const Rational b = eval_rational(*e.args[1], env);
            if (b == 0) throw CaseError("division by zero in " + e.to_string());
            return eval_rational(*e.args[0], env) / b;
        }
        case K::pow: return power(eval_rational(*e.args[0], env), eval_int(*e.args[1], env));
        case K::mod: return Rational(eval_int(e, env));
        case K::call: break;
    }
    const auto& a = e.args;
    if (e.name == "rf") {
        if (a.size() != 2) throw CaseError("rf() takes 2 arguments");
        return rising(eval_rational(*a[0], env), eval_int(*a[1], env));
    }
    if (e.name == "fact") {
        if (a.size() != 1) throw CaseError("fact() takes 1 argument");
        const long k = eval_int(*a[0], env);
        if (k < 0) throw CaseError("fact() of a negative number");
        return Rational(factorial(k));
    }
    if (e.name == "binom") {
        if (a.size() != 2) throw CaseError("binom() takes 2 arguments");
        return Rational(binomial(eval_int(*a[0], env), eval_int(*a[1], env)));
    }
    if (e.name == "qint" || e.name == "poch" || e.name == "qbinom")
        throw CaseError(e.name + "() is not available in classical expressions");
    return Rational(eval_int(e, env));
}

Rational classical_sum(const Case& c, bool rhs, long p, long r, std::optional<long> d) {
    IntEnv env = env_for(c, p, r, d);
    if (!rhs) return sum_of(*c.lhs.summand.tree, c.lhs.bound.eval(env), env);
    if (!c.has_rhs_sum()) return 1;
    const Expr& summand = c.rhs.summand.empty() ? *c.lhs.summand.tree : *c.rhs.summand.tree;
    return sum_of(summand, c.rhs.bound.eval(env), env);
}

PadicCheck check_classical(const Case& c, long p, long r, std::optional<long> d) {
    const IntEnv env = env_for(c, p, r, d);
    if (c.target.empty()) throw CaseError(c.id + ": no valuation target");
    PadicCheck out;
    out.p = p;
    out.r = r;
    out.d = d;
    const Rational omega = eval_rational(*c.prefactor.tree, env);
    out.delta = classical_sum(c, false, p, r, d) - omega * classical_sum(c, true, p, r, d);
    out.achieved = padic_valuation(out.delta, p);
    out.target = c.target.eval(env);
    if (!c.conjectured_target.empty()) out.conjectured_target = c.conjectured_target.eval(env);
    return out;
}

std::vector<PadicCheck> dwork_quotient_check(const std::function<Rational(long)>& term,
                                             const std::function<long(long)>& bound, long p, long r_max, long m) {
    std::vector<Rational> f;
    Rational acc = 0;
    long done = -1;
    for (long r = 0; r <= r_max + 1; ++r) {
        const long b = bound(r);
        for (long k = done + 1; k <= b; ++k) acc += term(k);
        done = std::max(done, b);
        f.push_back(acc);
    }
    std::vector<PadicCheck> out;
    for (long r = 1; r <= r_max; ++r) {
        PadicCheck pc;
        pc.p = p;
        pc.r = r;
        pc.delta = f[r + 1] * f[r - 1] - f[r] * f[r];
        pc.achieved = padic_valuation(pc.delta, p);
        const long v = std::min(padic_valuation(f[r], p), padic_valuation(f[r - 1], p));
        pc.target = v == kInfiniteValuation ? 0 : m * r + v;
        out.push_back(pc);
    }
    return out;
}

std::vector<PadicCheck> dwork_quotient_check(const Case& c, long p, long r_max, long m, std::optional<long> d) {
    IntEnv env = env_for(c, p, std::max(c.r_min, 1L), d);
    const Expr& summand = *c.lhs.summand.tree;
    auto term = [&](long k) {
        IntEnv e = env;
        e["k"] = k;
        return eval_rational(summand, e);
    };
    auto bound = [&](long r) {
        IntEnv e = env;
        e["r"] = r;
        return c.lhs.bound.eval(e);
    };
    auto out = dwork_quotient_check(term, bound, p, r_max, m);
    for (auto& pc : out) pc.d = d;
    return out;
}

}  // namespace qcong
