#pragma once

// Exact Laurent polynomials in q with big-integer coefficients, and reduced
// rational functions built from them.

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace qcong {

using Integer = mpz_class;
using Rational = mpq_class;

/// Below this length both operands are multiplied by schoolbook.
inline constexpr std::size_t kKaratsubaThreshold = 64;

/// Dense Laurent polynomial sum_i coeffs[i] q^(offset + i).
///
/// Canonical form: the first and last stored coefficients are nonzero; the
/// zero polynomial has no coefficients and offset 0.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
    LaurentPoly(const Integer& c);  // NOLINT(google-explicit-constructor)
    LaurentPoly(long offset, std::vector<Integer> coeffs);

    /// c * q^exp
    static LaurentPoly monomial(const Integer& c, long exp);
    /// Coefficients listed from q^0 upwards.
    static LaurentPoly from_ints(std::initializer_list<long> coeffs, long offset = 0);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1 && offset_ == 0; }
    /// True for c*q^k with c != 0.
    bool is_monomial() const noexcept { return coeffs_.size() == 1; }

    long offset() const noexcept { return offset_; }
    long low_degree() const noexcept { return offset_; }
    long high_degree() const noexcept {
        return offset_ + static_cast<long>(coeffs_.size()) - 1;
    }
    /// high_degree - low_degree; 0 for monomials and zero.
    long span_degree() const noexcept {
        return coeffs_.empty() ? 0 : static_cast<long>(coeffs_.size()) - 1;
    }
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    Integer coeff(long exp) const;
    const Integer& leading() const;
    const Integer& trailing() const;

    /// Multiplies by q^s.
    LaurentPoly shifted(long s) const;
    /// Drops the q-power so that the constant term is nonzero (offset 0).
    LaurentPoly without_offset() const { return shifted(-offset_); }

    Integer content() const;
    /// Divides out the content and makes the leading coefficient positive.
    LaurentPoly primitive_part() const;

    Rational evaluate(const Rational& t) const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Integer& c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
    friend LaurentPoly operator-(const LaurentPoly& a);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Human-readable form, e.g. "q^-1 + 2 - q^3".
    std::string to_string() const;

private:
    void trim();

    long offset_ = 0;
    std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

LaurentPoly add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly neg(const LaurentPoly& a);
LaurentPoly pow(const LaurentPoly& a, unsigned long e);

/// Coefficient-vector product; uses Karatsuba once both lengths reach
/// `threshold`.
std::vector<Integer> multiply_dense(std::span<const Integer> a, std::span<const Integer> b,
                                    std::size_t threshold = kKaratsubaThreshold);

/// Negative answer of exact_div: the first coefficient that could not be
/// cleared, or the nonzero remainder left after long division.
struct DivisibilityFailure {
    LaurentPoly remainder;
    std::string reason;
};

using DivisionResult = std::variant<LaurentPoly, DivisibilityFailure>;

/// Exact quotient in Z[q, 1/q]: returns c with a == b * c, or a
/// DivisibilityFailure. Throws std::domain_error when b is zero.
DivisionResult exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// exact_div that throws std::runtime_error on failure.
LaurentPoly divide_exact(const LaurentPoly& a, const LaurentPoly& b);

bool divides(const LaurentPoly& b, const LaurentPoly& a);

/// Primitive gcd over Q with positive leading coefficient and offset 0.
/// Modular (small-prime images + CRT) with a subresultant fallback.
LaurentPoly gcd_q(const LaurentPoly& a, const LaurentPoly& b);

/// Deterministic subresultant-PRS gcd; same normalization as gcd_q.
LaurentPoly gcd_subresultant(const LaurentPoly& a, const LaurentPoly& b);

/// a(q^s) for nonzero s.
LaurentPoly subst_power(const LaurentPoly& a, long s);
/// a(-q).
LaurentPoly subst_negate(const LaurentPoly& a);

/// Reduced quotient num/den.
///
/// gcd(num, den) is constant, both polynomial parts are primitive up to an
/// integer content pair that is coprime, den has offset 0 and a positive
/// leading coefficient, and every power of q lives in num.
class RationalFn {
public:
    RationalFn() : num_(), den_(1) {}
    RationalFn(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFn(const LaurentPoly& p);  // NOLINT(google-explicit-constructor)
    RationalFn(const Rational& c);  // NOLINT(google-explicit-constructor)

    /// Normalizing constructor; throws std::domain_error when den is zero.
    RationalFn(const LaurentPoly& num, const LaurentPoly& den);

    const LaurentPoly& num() const noexcept { return num_; }
    const LaurentPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant() && den_.coeffs()[0] == 1; }

    Rational evaluate(const Rational& t) const;
    RationalFn inverse() const;

    friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
    friend RationalFn operator-(const RationalFn& a);
    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

    std::string to_string() const;

private:
    struct Raw {};
    RationalFn(Raw, LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {}

    LaurentPoly num_;
    LaurentPoly den_;
};

std::ostream& operator<<(std::ostream& os, const RationalFn& f);

RationalFn rf_normalize(const LaurentPoly& num, const LaurentPoly& den);
RationalFn rf_add(const RationalFn& a, const RationalFn& b);
RationalFn rf_mul(const RationalFn& a, const RationalFn& b);
RationalFn rf_neg(const RationalFn& a);
RationalFn pow(const RationalFn& a, long e);
RationalFn subst_power(const RationalFn& a, long s);

}  // namespace qcong
