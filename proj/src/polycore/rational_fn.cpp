#include "qcong/polycore.hpp"

#include <ostream>

namespace qcong {

RationalFn::RationalFn(const LaurentPoly& p) : num_(p), den_(1) {}

RationalFn::RationalFn(const Rational& c) {
    Rational r = c;
    r.canonicalize();
    num_ = LaurentPoly(r.get_num());
    den_ = LaurentPoly(r.get_den());
}

RationalFn::RationalFn(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = LaurentPoly();
        den_ = LaurentPoly(1);
        return;
    }
    LaurentPoly n = num;
    LaurentPoly d = den;
    // q-powers are units; move them all to the numerator.
    n = n.shifted(-d.offset());
    d = d.without_offset();
    if (d.span_degree() > 0 && n.span_degree() > 0) {
        LaurentPoly g = gcd_q(n, d);
        if (!g.is_constant()) {
            n = divide_exact(n, g);
            d = divide_exact(d, g);
        }
    }
    Integer cn = n.content();
    Integer cd = d.content();
    Integer g;
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (d.leading() < 0) g = -g;
    if (g != 1) {
        std::vector<Integer> nc = n.coeffs(), dc = d.coeffs();
        for (auto& c : nc) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        for (auto& c : dc) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        n = LaurentPoly(n.offset(), std::move(nc));
        d = LaurentPoly(0, std::move(dc));
    }
    num_ = std::move(n);
    den_ = std::move(d);
}

Rational RationalFn::evaluate(const Rational& t) const {
    Rational d = den_.evaluate(t);
    if (d == 0) throw std::domain_error("rational function evaluated at a pole");
    Rational r = num_.evaluate(t) / d;
    r.canonicalize();
    return r;
}

RationalFn RationalFn::inverse() const {
    if (num_.is_zero()) throw std::domain_error("inverse of zero rational function");
    return RationalFn(den_, num_);
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFn(a.num_ + b.num_, a.den_);
    if (a.den_.is_constant() || b.den_.is_constant())
        return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    LaurentPoly g = gcd_q(a.den_, b.den_);
    if (g.is_constant())
        return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    // a/(gA') + b/(gB') = (aB' + bA') / (g A' B'); the integer contents are
    // carried along exactly because divide_exact works over Z.
    LaurentPoly a_rest = divide_exact(a.den_, g);
    LaurentPoly b_rest = divide_exact(b.den_, g);
    return RationalFn(a.num_ * b_rest + b.num_ * a_rest, a.den_ * b_rest);
}

RationalFn operator-(const RationalFn& a) { return RationalFn(RationalFn::Raw{}, -a.num_, a.den_); }

RationalFn operator-(const RationalFn& a, const RationalFn& b) { return a + (-b); }

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    if (a.is_zero() || b.is_zero()) return RationalFn();
    if (a.is_polynomial() && b.is_polynomial())
        return RationalFn(RationalFn::Raw{}, a.num_ * b.num_, LaurentPoly(1));
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) { return a * b.inverse(); }

std::string RationalFn::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFn& f) { return os << f.to_string(); }

RationalFn rf_normalize(const LaurentPoly& num, const LaurentPoly& den) { return RationalFn(num, den); }
RationalFn rf_add(const RationalFn& a, const RationalFn& b) { return a + b; }
RationalFn rf_mul(const RationalFn& a, const RationalFn& b) { return a * b; }
RationalFn rf_neg(const RationalFn& a) { return -a; }

RationalFn pow(const RationalFn& a, long e) {
    if (e < 0) return pow(a.inverse(), -e);
    RationalFn result(1);
    RationalFn base = a;
    auto k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

RationalFn subst_power(const RationalFn& a, long s) {
    return RationalFn(subst_power(a.num(), s), subst_power(a.den(), s));
}

}  // namespace qcong
