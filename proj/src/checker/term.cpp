#include <algorithm>

#include "qcong/checker.hpp"

namespace qcong {

namespace {

LaurentPoly binomial_poly(int s, long e) {
    // 1 - s q^e, e > 0
    std::vector<Integer> c(static_cast<std::size_t>(e) + 1);
    c[0] = 1;
    c[static_cast<std::size_t>(e)] = -s;
    return LaurentPoly(0, std::move(c));
}

long generic_valuation(const LaurentPoly& p, long m) {
    const LaurentPoly& phi = cyclotomic(m);
    if (p.high_degree() - p.low_degree() < phi.high_degree()) return 0;
    long v = 0;
    LaurentPoly cur = p;
    for (;;) {
        auto r = exact_div(cur, phi);
        if (!std::holds_alternative<LaurentPoly>(r)) return v;
        cur = std::get<LaurentPoly>(std::move(r));
        ++v;
    }
}

void erase_zeros(FactorBag& b) {
    std::erase_if(b.binomials, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(b.cyclotomics, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(b.generic, [](const auto& g) { return g.second == 0; });
}

FactoredTerm zero_term() {
    FactoredTerm t;
    t.coeff = 0;
    return t;
}

FactoredTerm constant(const Rational& c) {
    FactoredTerm t;
    t.coeff = c;
    if (c == 0) t.coeff = 0;
    return t;
}

/// The factor 1 - s q^e for any integer e.
FactoredTerm binomial_term(int s, long e) {
    FactoredTerm t;
    if (e == 0) {
        if (s == 1) {
            t.zeros = 1;
            return t;
        }
        t.coeff = 2;
        return t;
    }
    if (e < 0) {
        // 1 - s q^e = -s q^e (1 - s q^-e)
        t.coeff = -s;
        t.shift = e;
        e = -e;
    }
    t.factors.binomials[{s, e}] = 1;
    return t;
}

FactoredTerm q_power(long e) {
    FactoredTerm t;
    t.shift = e;
    return t;
}

// Monomial sign*q^e from a value; used for Pochhammer arguments.
std::pair<int, long> as_signed_monomial(const FactoredTerm& t, const char* what) {
    if (!t.factors.empty() || (t.coeff != 1 && t.coeff != -1))
        throw CaseError(std::string(what) + " must be +-q^t");
    return {t.coeff == 1 ? 1 : -1, t.shift};
}

long int_of(const Expr& e, const EvalContext& ctx) { return eval_int(e, ctx.env); }

void mark_a(FactoredTerm& t, const Expr& e, const EvalContext& ctx) {
    if (!ctx.a_exp || !e.mentions("a")) return;
    t.a_num = FactorBag{};
    t.a_den = FactorBag{};
    for (const auto& [k, v] : t.factors.binomials) (v > 0 ? t.a_num : t.a_den).binomials[k] = std::abs(v);
    for (const auto& [k, v] : t.factors.cyclotomics) (v > 0 ? t.a_num : t.a_den).cyclotomics[k] = std::abs(v);
    for (const auto& [p, v] : t.factors.generic) (v > 0 ? t.a_num : t.a_den).generic.emplace_back(p, std::abs(v));
}

}  // namespace

void FactorBag::merge(const FactorBag& o, long times) {
    for (const auto& [k, v] : o.binomials) binomials[k] += v * times;
    for (const auto& [k, v] : o.cyclotomics) cyclotomics[k] += v * times;
    for (const auto& [p, v] : o.generic) {
        auto it = std::find_if(generic.begin(), generic.end(), [&](const auto& g) { return g.first == p; });
        if (it == generic.end())
            generic.emplace_back(p, v * times);
        else
            it->second += v * times;
    }
    erase_zeros(*this);
}

long FactorBag::phi_valuation(long m) const {
    long v = 0;
    for (const auto& [k, mult] : binomials) v += mult * binomial_phi_valuation(k.second, k.first == -1, m);
    if (auto it = cyclotomics.find(m); it != cyclotomics.end()) v += it->second;
    for (const auto& [p, mult] : generic) v += mult * generic_valuation(p, m);
    return v;
}

long FactorBag::denominator_phi_valuation(long m) const {
    long v = 0;
    for (const auto& [k, mult] : binomials)
        if (mult < 0) v -= mult * binomial_phi_valuation(k.second, k.first == -1, m);
    if (auto it = cyclotomics.find(m); it != cyclotomics.end() && it->second < 0) v -= it->second;
    for (const auto& [p, mult] : generic)
        if (mult < 0) v -= mult * generic_valuation(p, m);
    return v;
}

FactoredTerm operator*(const FactoredTerm& x, const FactoredTerm& y) {
    if (x.coeff == 0 || y.coeff == 0) return zero_term();
    FactoredTerm t;
    t.coeff = x.coeff * y.coeff;
    t.shift = x.shift + y.shift;
    t.zeros = x.zeros + y.zeros;
    t.factors = x.factors;
    t.factors.merge(y.factors);
    t.a_num = x.a_num;
    t.a_num.merge(y.a_num);
    t.a_den = x.a_den;
    t.a_den.merge(y.a_den);
    return t;
}

FactoredTerm FactoredTerm::inverse() const {
    if (coeff == 0) throw VanishingDenominator("division by zero");
    FactoredTerm t;
    t.coeff = 1 / coeff;
    t.shift = -shift;
    t.zeros = -zeros;
    t.factors.merge(factors, -1);
    t.a_num = a_den;
    t.a_den = a_num;
    return t;
}

FactoredTerm FactoredTerm::power(long e) const {
    if (e < 0) return inverse().power(-e);
    if (e == 0) return constant(1);
    if (coeff == 0) return zero_term();
    FactoredTerm t;
    t.zeros = zeros * e;
    mpz_pow_ui(t.coeff.get_num_mpz_t(), coeff.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(t.coeff.get_den_mpz_t(), coeff.get_den_mpz_t(), static_cast<unsigned long>(e));
    t.shift = shift * e;
    t.factors.merge(factors, e);
    t.a_num.merge(a_num, e);
    t.a_den.merge(a_den, e);
    return t;
}

RationalFn FactoredTerm::to_rational() const {
    if (is_zero()) return RationalFn();
    LaurentPoly num = LaurentPoly::monomial(coeff.get_num(), shift);
    LaurentPoly den(coeff.get_den());
    auto put = [&](const LaurentPoly& p, long mult) {
        LaurentPoly& target = mult > 0 ? num : den;
        target = target * pow(p, static_cast<unsigned long>(mult > 0 ? mult : -mult));
    };
    for (const auto& [k, mult] : factors.binomials) put(binomial_poly(k.first, k.second), mult);
    for (const auto& [m, mult] : factors.cyclotomics) put(cyclotomic(m), mult);
    for (const auto& [p, mult] : factors.generic) put(p, mult);
    return RationalFn(num, den);
}

FactoredTerm factor_poly(const LaurentPoly& p) {
    if (p.is_zero()) return zero_term();
    FactoredTerm t;
    t.shift = p.offset();
    LaurentPoly q = p.without_offset();
    const auto& c = q.coeffs();
    const std::size_t n = c.size();
    if (n == 1) {
        t.coeff = c[0];
        return t;
    }
    std::size_t nonzero = 0;
    for (const auto& x : c) nonzero += x != 0;
    if (nonzero == 2 && abs(c[0]) == abs(c[n - 1])) {
        t.coeff = c[0];
        const int s = c[n - 1] == c[0] ? -1 : 1;   // c0 (1 + (cl/c0) q^e) = c0 (1 - s q^e)
        t.factors.binomials[{s, static_cast<long>(n - 1)}] = 1;
        return t;
    }
    t.coeff = q.content();
    if (q.leading() < 0) t.coeff = -t.coeff;
    LaurentPoly rest = q.primitive_part();
    // Peel off cyclotomic factors of small polynomials.
    if (rest.high_degree() <= 64) {
        const long deg0 = rest.high_degree();
        for (long m = 1; m <= 2 * deg0 * deg0 + 2 && rest.high_degree() > 0; ++m) {
            if (euler_phi(m) > rest.high_degree()) continue;
            for (;;) {
                auto r = exact_div(rest, cyclotomic(m));
                if (!std::holds_alternative<LaurentPoly>(r)) break;
                rest = std::get<LaurentPoly>(std::move(r));
                ++t.factors.cyclotomics[m];
            }
        }
    }
    if (rest.high_degree() > 0) {
        if (rest.leading() < 0) {
            rest = -rest;
            t.coeff = -t.coeff;
        }
        t.factors.generic.emplace_back(rest, 1);
    } else {
        t.coeff *= rest.coeffs()[0];
    }
    return t;
}

FactoredTerm eval_term(const Expr& e, const EvalContext& ctx) {
    using K = Expr::Kind;
    switch (e.kind) {
        case K::number: return constant(Rational(e.value));
        case K::symbol:
            if (e.name == "q") return q_power(ctx.q_scale);
            if (e.name == "a") {
                if (!ctx.a_exp) throw CaseError("parameter a needs a substitution a = q^t");
                return q_power(*ctx.a_exp);
            }
            return constant(int_of(e, ctx));
        case K::neg: {
            FactoredTerm t = eval_term(*e.args[0], ctx);
            t.coeff = -t.coeff;
            return t;
        }
        case K::mul: return eval_term(*e.args[0], ctx) * eval_term(*e.args[1], ctx);
        case K::div: return eval_term(*e.args[0], ctx) * eval_term(*e.args[1], ctx).inverse();
        case K::pow: return eval_term(*e.args[0], ctx).power(int_of(*e.args[1], ctx));
        case K::mod: return constant(int_of(e, ctx));
        case K::add:
        case K::sub: {
            FactoredTerm x = eval_term(*e.args[0], ctx), y = eval_term(*e.args[1], ctx);
            if (x.zeros < 0 || y.zeros < 0) throw VanishingDenominator("vanishing denominator in " + e.to_string());
            if (e.kind == K::sub) y.coeff = -y.coeff;
            if (x.is_zero()) return y;
            if (y.is_zero()) return x;
            if (x.factors.empty() && y.factors.empty() && (x.shift == y.shift || x.is_zero() || y.is_zero())) {
                FactoredTerm t;
                t.coeff = x.coeff + y.coeff;
                t.shift = x.is_zero() ? y.shift : x.shift;
                if (t.coeff == 0) return zero_term();
                return t;
            }
            const RationalFn sum = x.to_rational() + y.to_rational();
            if (sum.is_zero()) return zero_term();
            FactoredTerm t = factor_poly(sum.num()) * factor_poly(sum.den()).inverse();
            mark_a(t, e, ctx);
            return t;
        }
        case K::call: break;
    }
    const std::string& f = e.name;
    const auto& args = e.args;
    if (f == "qint") {
        if (args.empty() || args.size() > 2) throw CaseError("qint() takes 1 or 2 arguments");
        const long x = int_of(*args[0], ctx);
        const long s = (args.size() == 2 ? int_of(*args[1], ctx) : 1) * ctx.q_scale;
        if (x == 0) return zero_term();
        return binomial_term(1, s * x) * binomial_term(1, s).inverse();
    }
    if (f == "poch") {
        if (args.size() != 3) throw CaseError("poch() takes 3 arguments");
        const auto [sign, start] = as_signed_monomial(eval_term(*args[0], ctx), "poch() first argument");
        const auto [ysign, step] = as_signed_monomial(eval_term(*args[1], ctx), "poch() base");
        if (ysign != 1 || step == 0) throw CaseError("poch() base must be q^t with t != 0");
        const long len = int_of(*args[2], ctx);
        if (len < 0) throw CaseError("poch() with negative length");
        FactoredTerm t;
        for (long i = 0; i < len; ++i) t = t * binomial_term(sign, start + step * i);
        mark_a(t, e, ctx);
        return t;
    }
    if (f == "qbinom") {
        if (args.size() < 2 || args.size() > 3) throw CaseError("qbinom() takes 2 or 3 arguments");
        const long N = int_of(*args[0], ctx), k = int_of(*args[1], ctx);
        const long s = (args.size() == 3 ? int_of(*args[2], ctx) : 1) * ctx.q_scale;
        if (k < 0 || k > N) return zero_term();
        FactoredTerm t;
        for (long i = 0; i < k; ++i) t = t * binomial_term(1, s * (N - i)) * binomial_term(1, s * (i + 1)).inverse();
        return t;
    }
    // Integer-valued helpers (kron, binom, floor, ...).
    return constant(int_of(e, ctx));
}

}  // namespace qcong
