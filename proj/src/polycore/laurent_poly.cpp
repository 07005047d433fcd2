#include "qcong/polycore.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace qcong {

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) coeffs_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const Integer& c) {
    if (c != 0) coeffs_.push_back(c);
}

LaurentPoly::LaurentPoly(long offset, std::vector<Integer> coeffs)
    : offset_(offset), coeffs_(std::move(coeffs)) {
    trim();
}

LaurentPoly LaurentPoly::monomial(const Integer& c, long exp) {
    if (c == 0) return {};
    return LaurentPoly(exp, {c});
}

LaurentPoly LaurentPoly::from_ints(std::initializer_list<long> coeffs, long offset) {
    std::vector<Integer> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) v.emplace_back(c);
    return LaurentPoly(offset, std::move(v));
}

void LaurentPoly::trim() {
    std::size_t lo = 0;
    while (lo < coeffs_.size() && coeffs_[lo] == 0) ++lo;
    if (lo == coeffs_.size()) {
        coeffs_.clear();
        offset_ = 0;
        return;
    }
    std::size_t hi = coeffs_.size();
    while (coeffs_[hi - 1] == 0) --hi;
    coeffs_.resize(hi);
    if (lo > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lo));
        offset_ += static_cast<long>(lo);
    }
}

Integer LaurentPoly::coeff(long exp) const {
    if (coeffs_.empty() || exp < offset_ || exp > high_degree()) return 0;
    return coeffs_[static_cast<std::size_t>(exp - offset_)];
}

const Integer& LaurentPoly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

const Integer& LaurentPoly::trailing() const {
    if (coeffs_.empty()) throw std::domain_error("trailing coefficient of zero polynomial");
    return coeffs_.front();
}

LaurentPoly LaurentPoly::shifted(long s) const {
    LaurentPoly r = *this;
    if (!r.coeffs_.empty()) r.offset_ += s;
    return r;
}

Integer LaurentPoly::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

LaurentPoly LaurentPoly::primitive_part() const {
    if (coeffs_.empty()) return {};
    Integer g = content();
    if (coeffs_.back() < 0) g = -g;
    LaurentPoly r = *this;
    if (g != 1)
        for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return r;
}

Rational LaurentPoly::evaluate(const Rational& t) const {
    if (coeffs_.empty()) return 0;
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= t;
        acc += *it;
    }
    if (offset_ != 0) {
        if (t == 0) throw std::domain_error("evaluating a negative power of q at 0");
        Rational base = offset_ > 0 ? t : Rational(1) / t;
        unsigned long e = static_cast<unsigned long>(offset_ > 0 ? offset_ : -offset_);
        Rational p = 1;
        while (e) {
            if (e & 1) p *= base;
            base *= base;
            e >>= 1;
        }
        acc *= p;
    }
    acc.canonicalize();
    return acc;
}

namespace {

// out[i] += a[i] (or -= when negate) for aligned ranges.
void accumulate(std::vector<Integer>& out, long out_off, const std::vector<Integer>& in, long in_off,
                bool negate) {
    for (std::size_t i = 0; i < in.size(); ++i) {
        auto idx = static_cast<std::size_t>(in_off - out_off) + i;
        if (negate)
            out[idx] -= in[i];
        else
            out[idx] += in[i];
    }
}

LaurentPoly combine(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return subtract ? -b : b;
    long lo = std::min(a.low_degree(), b.low_degree());
    long hi = std::max(a.high_degree(), b.high_degree());
    std::vector<Integer> out(static_cast<std::size_t>(hi - lo + 1));
    accumulate(out, lo, a.coeffs(), a.offset(), false);
    accumulate(out, lo, b.coeffs(), b.offset(), subtract);
    return LaurentPoly(lo, std::move(out));
}

void schoolbook(std::span<const Integer> a, std::span<const Integer> b, std::span<Integer> out) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        const mpz_srcptr ai = a[i].get_mpz_t();
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(out[i + j].get_mpz_t(), ai, b[j].get_mpz_t());
    }
}

// out (size >= a.size() + b.size() - 1) accumulates a*b.
void karatsuba(std::span<const Integer> a, std::span<const Integer> b, std::span<Integer> out,
               std::size_t threshold) {
    if (a.size() < b.size()) std::swap(a, b);
    if (b.empty()) return;
    if (b.size() < threshold) {
        schoolbook(a, b, out);
        return;
    }
    if (a.size() >= 2 * b.size()) {
        // Unbalanced: slice the longer operand into chunks of the shorter length.
        for (std::size_t start = 0; start < a.size(); start += b.size()) {
            std::size_t len = std::min(b.size(), a.size() - start);
            karatsuba(a.subspan(start, len), b, out.subspan(start), threshold);
        }
        return;
    }
    const std::size_t h = a.size() / 2;
    auto a0 = a.first(h), a1 = a.subspan(h);
    auto b0 = b.first(std::min(h, b.size())), b1 = b.subspan(std::min(h, b.size()));

    std::vector<Integer> z0(a0.size() + b0.size() - 1);
    karatsuba(a0, b0, z0, threshold);
    std::vector<Integer> z2;
    if (!b1.empty()) {
        z2.resize(a1.size() + b1.size() - 1);
        karatsuba(a1, b1, z2, threshold);
    }

    std::vector<Integer> sa(std::max(a0.size(), a1.size()));
    for (std::size_t i = 0; i < a0.size(); ++i) sa[i] = a0[i];
    for (std::size_t i = 0; i < a1.size(); ++i) sa[i] += a1[i];
    std::vector<Integer> sb(std::max(b0.size(), b1.size()));
    for (std::size_t i = 0; i < b0.size(); ++i) sb[i] = b0[i];
    for (std::size_t i = 0; i < b1.size(); ++i) sb[i] += b1[i];

    std::vector<Integer> z1(sa.size() + sb.size() - 1);
    karatsuba(sa, sb, z1, threshold);
    for (std::size_t i = 0; i < z0.size(); ++i) z1[i] -= z0[i];
    for (std::size_t i = 0; i < z2.size(); ++i) z1[i] -= z2[i];

    for (std::size_t i = 0; i < z0.size(); ++i) out[i] += z0[i];
    for (std::size_t i = 0; i < z1.size(); ++i)
        if (z1[i] != 0) out[i + h] += z1[i];
    for (std::size_t i = 0; i < z2.size(); ++i) out[i + 2 * h] += z2[i];
}

}  // namespace

std::vector<Integer> multiply_dense(std::span<const Integer> a, std::span<const Integer> b,
                                    std::size_t threshold) {
    if (a.empty() || b.empty()) return {};
    std::vector<Integer> out(a.size() + b.size() - 1);
    karatsuba(a, b, out, std::max<std::size_t>(threshold, 2));
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) { return *this = combine(*this, o, false); }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this = combine(*this, o, true); }

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
    if (c == 0) return *this = LaurentPoly();
    for (auto& x : coeffs_) x *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return LaurentPoly(a.offset() + b.offset(), multiply_dense(a.coeffs(), b.coeffs()));
}

LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.offset_ == b.offset_ && a.coeffs_ == b.coeffs_;
}

std::string LaurentPoly::to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Integer& c = coeffs_[i];
        if (c == 0) continue;
        long e = offset_ + static_cast<long>(i);
        Integer mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (e == 0) {
            os << mag.get_str();
            continue;
        }
        if (mag != 1) os << mag.get_str() << "*";
        os << "q";
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
LaurentPoly neg(const LaurentPoly& a) { return -a; }

LaurentPoly pow(const LaurentPoly& a, unsigned long e) {
    LaurentPoly result(1);
    LaurentPoly base = a;
    while (e) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

DivisionResult exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("exact_div by zero polynomial");
    if (a.is_zero()) return LaurentPoly();
    // Offsets carry units q^k; divide the offset-free parts.
    const auto& bc = b.coeffs();
    const std::size_t nb = bc.size();
    std::vector<Integer> rem = a.coeffs();
    if (rem.size() < nb) return DivisibilityFailure{a, "dividend has smaller span than divisor"};
    const std::size_t nq = rem.size() - nb + 1;
    std::vector<Integer> quot(nq);
    const Integer& lead = bc.back();
    Integer t;
    for (std::size_t i = nq; i-- > 0;) {
        Integer& top = rem[i + nb - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
            long e = a.offset() + static_cast<long>(i + nb - 1);
            return DivisibilityFailure{LaurentPoly::monomial(top, e),
                                       "leading coefficient not divisible"};
        }
        mpz_divexact(quot[i].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        const mpz_srcptr qi = quot[i].get_mpz_t();
        for (std::size_t j = 0; j < nb; ++j) mpz_submul(rem[i + j].get_mpz_t(), qi, bc[j].get_mpz_t());
    }
    for (std::size_t i = 0; i + 1 < nb; ++i) {
        if (rem[i] != 0) {
            std::vector<Integer> tail(rem.begin(), rem.begin() + static_cast<std::ptrdiff_t>(nb - 1));
            return DivisibilityFailure{LaurentPoly(a.offset(), std::move(tail)), "nonzero remainder"};
        }
    }
    return LaurentPoly(a.offset() - b.offset(), std::move(quot));
}

LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    auto r = exact_div(a, b);
    if (auto* q = std::get_if<LaurentPoly>(&r)) return std::move(*q);
    throw std::runtime_error("divide_exact: (" + b.to_string() + ") does not divide (" +
                             a.to_string() + ")");
}

bool divides(const LaurentPoly& b, const LaurentPoly& a) {
    return std::holds_alternative<LaurentPoly>(exact_div(a, b));
}

LaurentPoly subst_power(const LaurentPoly& a, long s) {
    if (s == 0) throw std::domain_error("subst_power with s = 0");
    if (a.is_zero()) return a;
    const auto& c = a.coeffs();
    const long n = static_cast<long>(c.size());
    const long step = s > 0 ? s : -s;
    std::vector<Integer> out(static_cast<std::size_t>((n - 1) * step + 1));
    for (long i = 0; i < n; ++i) {
        long idx = s > 0 ? i : (n - 1 - i);
        out[static_cast<std::size_t>(idx * step)] = c[static_cast<std::size_t>(i)];
    }
    long new_off = s > 0 ? a.offset() * s : a.high_degree() * s;
    return LaurentPoly(new_off, std::move(out));
}

LaurentPoly subst_negate(const LaurentPoly& a) {
    std::vector<Integer> c = a.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        long e = a.offset() + static_cast<long>(i);
        if (e % 2 != 0) c[i] = -c[i];
    }
    return LaurentPoly(a.offset(), std::move(c));
}

}  // namespace qcong
