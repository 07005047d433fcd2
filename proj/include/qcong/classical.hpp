#pragma once

// Exact rational evaluation of classical (q -> 1) sums and p-adic checks of
// the supercongruences at z = 1.

#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "qcong/catalog.hpp"

namespace qcong {

/// Valuation of zero.
inline constexpr long kInfiniteValuation = std::numeric_limits<long>::max();

long padic_valuation(const Integer& x, long p);
long padic_valuation(const Rational& x, long p);

/// Exact value of a classical expression: rationals, + - * /, integer
/// powers, binom(), rf(x,k) (rising factorial), fact(), kron(), delta().
Rational eval_rational(const Expr& e, const IntEnv& env);


/// Sum of the lhs (or rhs, without the prefactor) at prime p and level r.
Rational classical_sum(const Case& c, bool rhs, long p, long r, std::optional<long> d = std::nullopt);

struct PadicCheck {
    long p = 0;
    long r = 0;
    std::optional<long> d;
    Rational delta;            // lhs - prefactor * rhs
    long achieved = 0;         // kInfiniteValuation when delta == 0
    long target = 0;
    std::optional<long> conjectured_target;

    bool passed() const { return achieved >= target; }
    std::optional<bool> conjecture_holds() const {
        if (!conjectured_target) return std::nullopt;
        return achieved >= *conjectured_target;
    }
};

/// Throws CaseError when (p, r, d) is not admissible or p is not prime.
PadicCheck check_classical(const Case& c, long p, long r, std::optional<long> d = std::nullopt);

/// Dwork congruence f_{r+1}/f_r = f_r/f_{r-1} (mod p^{m r}) at z = 1, in
/// the cross-multiplied form f_{r+1} f_{r-1} - f_r^2 = 0 (mod p^{m r + v})
/// with v = min(v_p(f_r), v_p(f_{r-1})). One entry per r = 1..r_max; the
/// entry's target already includes v.
std::vector<PadicCheck> dwork_quotient_check(const std::function<Rational(long)>& term,
                                             const std::function<long(long)>& bound, long p, long r_max, long m);

/// The same for a classical case, with f_r the case's lhs at level r
/// (f_0 is the lhs at r = 0).
std::vector<PadicCheck> dwork_quotient_check(const Case& c, long p, long r_max, long m,
                                             std::optional<long> d = std::nullopt);

}  // namespace qcong
