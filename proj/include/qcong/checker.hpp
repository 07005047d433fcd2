#pragma once

// Verification of q-congruences and q-identities at concrete parameters.
//
// Every summand, prefactor and root substitution is evaluated into a
// FactoredTerm: a rational constant times a power of q times binomials
// (1 -+ q^e), cyclotomic polynomials and a few leftover polynomials. Two
// engines decide divisibility of Delta = LHS - omega*RHS by each Phi_m^e of
// the modulus: a localized one working modulo Phi_m^P, and a naive one that
// builds the exact numerator over the cyclotomic lcm of all denominators.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcong/catalog.hpp"

namespace qcong {

class ModulusNotInvertible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InsufficientSamples : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DegreeGuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Signed multiplicities of factors; negative means denominator.
struct FactorBag {
    std::map<std::pair<int, long>, long> binomials;   // (s, e) -> mult, factor 1 - s q^e, e > 0
    std::map<long, long> cyclotomics;                 // m -> mult of Phi_m(q)
    std::vector<std::pair<LaurentPoly, long>> generic;   // primitive, offset 0

    void merge(const FactorBag& o, long times = 1);
    bool empty() const { return binomials.empty() && cyclotomics.empty() && generic.empty(); }
    long phi_valuation(long m) const;
    /// Phi_m-valuation of the denominator part only (a nonnegative number).
    long denominator_phi_valuation(long m) const;
};

struct FactoredTerm {
    Rational coeff = 1;
    long shift = 0;
    // Net number of vanishing factors (1 - q^0); positive means the value is
    // zero while the other factors are still tracked, negative is an error.
    long zeros = 0;
    FactorBag factors;
    // Factors produced by subexpressions that mention the parameter a, split
    // into numerator and denominator parts with nonnegative multiplicities.
    // They are never cancelled against each other: at a = q^t a numerator
    // (a q^2; q^4)_k can cancel a denominator (q^4/a; q^4)_k, but the generic
    // denominator still picks up the factor.
    FactorBag a_num, a_den;

    bool is_zero() const { return coeff == 0 || zeros > 0; }
    RationalFn to_rational() const;
    long phi_valuation(long m) const { return factors.phi_valuation(m); }

    friend FactoredTerm operator*(const FactoredTerm& x, const FactoredTerm& y);
    FactoredTerm inverse() const;   // throws VanishingDenominator on zero
    FactoredTerm power(long e) const;
};

/// Splits a Laurent polynomial into constant, q-shift, binomial and
/// cyclotomic factors where possible.
FactoredTerm factor_poly(const LaurentPoly& p);

struct EvalContext {
    IntEnv env;
    long q_scale = 1;              // q stands for q^q_scale
    std::optional<long> a_exp;     // a = q^a_exp (not scaled)
};

/// Evaluates a q-side expression. Throws VanishingDenominator, CaseError
/// (unsupported construct) or NonIntegral.
FactoredTerm eval_term(const Expr& e, const EvalContext& ctx);

enum class Side { lhs, rhs };
enum class Engine { localized, naive };

std::string to_string(Engine e);

/// Instance of a case: main variable, level, optional d and a = q^t.
struct Params {
    long n = 0;
    long r = 1;
    std::optional<long> d;
    std::optional<long> a_exp;

    std::string to_string() const;
};

/// Terms of one side (the rhs without omega).
std::vector<FactoredTerm> side_terms(const Case& c, Side side, const Params& p);
std::vector<RationalFn> build_side(const Case& c, Side side, const Params& p);
FactoredTerm prefactor_term(const Case& c, const Params& p);

/// LHS terms followed by -omega*RHS terms.
std::vector<FactoredTerm> delta_terms(const Case& c, const Params& p);

enum class FactorStatus { pass, fail, not_invertible, skipped };
std::string to_string(FactorStatus s);

struct FactorOutcome {
    long m = 0;
    long exponent = 0;
    FactorStatus status = FactorStatus::pass;
    // Exact valuation of Delta at Phi_m when below the target; equal to the
    // target (a lower bound) on pass.
    long achieved = 0;
    bool exact_zero = false;   // Delta vanished identically (localized: mod Phi^P)
    long allowance = 0;        // sampled parametric checks only
    std::string note;
};

struct VerificationReport {
    std::string case_id;
    Params params;
    CyclotomicMultiset modulus;
    std::vector<FactorOutcome> factors;
    Engine engine = Engine::localized;
    long term_count = 0;
    double ms = 0;
    std::string note;

    bool passed() const;
    bool skipped() const;
};

/// Default bound on the degree of exact numerators handled by the naive
/// engine; overridable with QCONG_DEGREE_GUARD.
long default_degree_guard();

struct CheckOptions {
    Engine engine = Engine::localized;
    long degree_guard = 0;   // 0: default_degree_guard()
    bool emit_poly = false;  // naive engine: keep failing numerators in notes
};

/// Checks Delta against an explicit modulus.
std::vector<FactorOutcome> check_terms(const std::vector<FactoredTerm>& delta, const CyclotomicMultiset& modulus,
                                       const CheckOptions& opt);

VerificationReport check_congruence(const Case& c, const Params& p, const CheckOptions& opt = {});

/// Exact equality LHS == omega*RHS.
bool check_identity(const Case& c, const Params& p);
/// Exact value of Delta as a reduced rational function.
RationalFn delta_value(const Case& c, const Params& p);

struct RootCheck {
    long j = 0;
    long exponent = 0;   // a = q^exponent
    bool holds = false;
};

/// Exact identities at every a = q^{+-x(j)}.
std::vector<RootCheck> check_roots(const Case& c, const Params& p);

struct ParametricReport {
    // One report per sample a = q^t against the a-free part of the modulus.
    // A factor passes when its valuation reaches the exponent minus the
    // allowance, the Phi_m-valuation of the lcm of the a-dependent
    // denominators at that sample.
    std::vector<VerificationReport> sampled;
    std::vector<long> samples;
    std::vector<RootCheck> roots;
    long a_degree_bound = 0;   // samples below this are not an interpolation proof
    bool passed() const;
};

ParametricReport check_parametric_sampled(const Case& c, const Params& p, int sample_count, long exponent_ceiling = 200,
                                          const CheckOptions& opt = {});

struct CrossCheck {
    bool agree = false;
    bool skipped = false;
    VerificationReport localized;
    VerificationReport naive;
};

CrossCheck oracle_crosscheck(const Case& c, const Params& p, long degree_guard = 0);

}  // namespace qcong
