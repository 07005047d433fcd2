#pragma once

// q-combinatorial building blocks: cyclotomic polynomials, q-integers,
// q-Pochhammer products, Gaussian binomials, Kronecker symbols, and the
// flattening of moduli into multisets of cyclotomic factors.

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qcong/polycore.hpp"

namespace qcong {

/// Raised when a modulus factor cannot be rewritten as a product of
/// cyclotomic polynomials in q.
class NonCyclotomicFactor : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A denominator factor 1 - q^0 came up while building a product.
class VanishingDenominator : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<long> divisors(long n);
long euler_phi(long n);

/// Phi_n(q); monic of degree euler_phi(n). Results are cached for the life
/// of the process and the cache may be read from any thread.
const LaurentPoly& cyclotomic(long n);

/// [n]_{q^s} = (1 - q^{sn}) / (1 - q^s). Defined for every integer n
/// ([0] = 0, [-n]_{q^s} = -q^{-sn}[n]_{q^s}); s must be nonzero.
LaurentPoly q_integer(long n, long base_scale = 1);

/// prod_{j=0}^{length-1} (1 - q^{start + step*j}) for the standard kind and
/// (1 + q^{start + step*j}) for the signed kind.
struct PochhammerSpec {
    enum class Kind { standard, signed_ };
    Kind kind = Kind::standard;
    long start = 1;
    long step = 1;
    long length = 0;
};

LaurentPoly pochhammer(const PochhammerSpec& spec);

/// Gaussian binomial [n choose k] in base q^s; zero when k > n or k < 0.
LaurentPoly q_binomial(long n, long k, long base_scale = 1);

/// Kronecker symbol (a / n), including n = 0, n even and n negative.
int kronecker(long a, long n);

/// <x>_n: the t in [0, n) with t = x (mod n). Throws std::domain_error when
/// the denominator of x is not invertible modulo n.
long least_nonneg_residue(const Rational& x, long n);

/// prod Phi_m(q)^e over the listed (m, e); indices are distinct and sorted.
struct CyclotomicMultiset {
    std::vector<std::pair<long, long>> factors;

    void add(long index, long exponent);
    long exponent_of(long index) const;
    bool operator==(const CyclotomicMultiset&) const = default;
    std::string to_string() const;
};

/// Fully expanded product of a multiset.
LaurentPoly expand(const CyclotomicMultiset& ms);

/// Phi_m(q^s) for s >= 1, or Phi_m(-q^{|s|}) for s <= -1, as a multiset of
/// cyclotomic factors in q. The sign lost in e.g. Phi_1(-q) = -Phi_2(q) is
/// dropped (units do not change a modulus).
CyclotomicMultiset cyclotomic_substitution(long m, long scale);

/// One factor of a symbolic modulus after its integer parameters have been
/// evaluated: [arg]_{q^scale}^power or Phi_arg(q^scale)^power, where a
/// negative scale means q -> -q^{|scale|}.
struct ModulusFactor {
    enum class Kind { q_integer, cyclotomic };
    Kind kind = Kind::cyclotomic;
    long arg = 1;
    long scale = 1;
    long power = 1;
};

/// Flattens the product into cyclotomic factors in q. Each identity used is
/// re-checked by multiplying back against the direct expansion while the
/// factor's degree stays below `verify_degree`.
CyclotomicMultiset normalize_modulus(const std::vector<ModulusFactor>& factors,
                                     long verify_degree = 4096);

/// Number of factors of the Pochhammer product divisible by Phi_d, which is
/// its Phi_d-adic valuation because each 1 -/+ q^e is squarefree.
long phi_valuation_of_cyclotomic_product(const PochhammerSpec& spec, long d);

/// Phi_d-adic valuation of 1 - q^e (standard) or 1 + q^e (signed); e != 0.
int binomial_phi_valuation(long e, bool signed_kind, long d);

}  // namespace qcong
