#include "qcong/qkit.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace qcong {

std::vector<long> divisors(long n) {
    if (n <= 0) throw std::domain_error("divisors of a non-positive integer");
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

long euler_phi(long n) {
    if (n <= 0) throw std::domain_error("euler_phi of a non-positive integer");
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

struct CyclotomicCache {
    std::shared_mutex mu;
    std::unordered_map<long, std::unique_ptr<LaurentPoly>> table;
};

CyclotomicCache& cache() {
    static CyclotomicCache c;
    return c;
}

}  // namespace

const LaurentPoly& cyclotomic(long n) {
    if (n <= 0) throw std::domain_error("cyclotomic index must be positive");
    auto& c = cache();
    {
        std::shared_lock lock(c.mu);
        auto it = c.table.find(n);
        if (it != c.table.end()) return *it->second;
    }
    // Computed without holding the lock: the divisor lookups recurse.
    LaurentPoly p = LaurentPoly::monomial(1, n) - LaurentPoly(1);
    for (long d : divisors(n)) {
        if (d == n) break;
        p = divide_exact(p, cyclotomic(d));
    }
    std::unique_lock lock(c.mu);
    auto [it, inserted] = c.table.try_emplace(n, std::make_unique<LaurentPoly>(std::move(p)));
    return *it->second;
}

LaurentPoly q_integer(long n, long base_scale) {
    if (base_scale == 0) throw std::domain_error("q-integer base must be a nonzero power of q");
    if (n == 0) return LaurentPoly();
    if (n < 0) {
        // [-n]_{q^s} = -q^{-sn} [n]_{q^s}
        return -q_integer(-n, base_scale).shifted(base_scale * n);
    }
    std::vector<Integer> ones(static_cast<std::size_t>(n), Integer(1));
    LaurentPoly base(0, std::move(ones));
    return base_scale == 1 ? base : subst_power(base, base_scale);
}

LaurentPoly pochhammer(const PochhammerSpec& spec) {
    if (spec.length < 0) throw std::domain_error("negative Pochhammer length");
    const Integer sign = spec.kind == PochhammerSpec::Kind::standard ? -1 : 1;
    LaurentPoly result(1);
    for (long j = 0; j < spec.length; ++j) {
        const long e = spec.start + spec.step * j;
        LaurentPoly factor = LaurentPoly(1) + LaurentPoly::monomial(sign, e);
        if (factor.is_zero()) return LaurentPoly();
        result *= factor;
    }
    return result;
}

LaurentPoly q_binomial(long n, long k, long base_scale) {
    if (k < 0 || n < 0 || k > n) return LaurentPoly();
    k = std::min(k, n - k);
    // (q^{n-k+1}; q)_k / (q; q)_k, built one exact division at a time so the
    // intermediate stays a Gaussian binomial.
    LaurentPoly result(1);
    for (long j = 1; j <= k; ++j) {
        result *= LaurentPoly(1) - LaurentPoly::monomial(1, n - k + j);
        result = divide_exact(result, LaurentPoly(1) - LaurentPoly::monomial(1, j));
    }
    return base_scale == 1 ? result : subst_power(result, base_scale);
}

int kronecker(long a, long n) {
    static constexpr int tab2[8] = {0, 1, 0, -1, 0, -1, 0, 1};
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    if (a % 2 == 0 && n % 2 == 0) return 0;
    long v = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v;
    }
    int k = (v % 2 == 0) ? 1 : tab2[a & 7];
    if (n < 0) {
        n = -n;
        if (a < 0) k = -k;
    }
    while (true) {
        if (a == 0) return n > 1 ? 0 : k;
        v = 0;
        while (a % 2 == 0) {
            a /= 2;
            ++v;
        }
        if (v % 2 == 1) k *= tab2[n & 7];
        if (a & n & 2) k = -k;
        const long r = a < 0 ? -a : a;
        a = n % r;
        n = r;
    }
}

long least_nonneg_residue(const Rational& x, long n) {
    if (n <= 0) throw std::domain_error("residue modulus must be positive");
    if (n == 1) return 0;
    Integer m = n;
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), x.get_den_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("denominator not invertible modulo " + std::to_string(n));
    Integer t = x.get_num() * inv;
    mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
    return t.get_si();
}

void CyclotomicMultiset::add(long index, long exponent) {
    if (index <= 0) throw std::domain_error("cyclotomic index must be positive");
    if (exponent == 0) return;
    auto it = std::lower_bound(factors.begin(), factors.end(), std::make_pair(index, 0L),
                               [](const auto& a, const auto& b) { return a.first < b.first; });
    if (it != factors.end() && it->first == index) {
        it->second += exponent;
        if (it->second == 0) factors.erase(it);
    } else {
        factors.insert(it, {index, exponent});
    }
}

long CyclotomicMultiset::exponent_of(long index) const {
    for (const auto& [m, e] : factors)
        if (m == index) return e;
    return 0;
}

std::string CyclotomicMultiset::to_string() const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, e] : factors) {
        if (!first) os << " * ";
        first = false;
        os << "Phi_" << m;
        if (e != 1) os << "^" << e;
    }
    return os.str();
}

LaurentPoly expand(const CyclotomicMultiset& ms) {
    LaurentPoly result(1);
    for (const auto& [m, e] : ms.factors) {
        if (e < 0) throw std::domain_error("cannot expand a negative cyclotomic exponent");
        result *= pow(cyclotomic(m), static_cast<unsigned long>(e));
    }
    return result;
}

CyclotomicMultiset cyclotomic_substitution(long m, long scale) {
    if (m <= 0) throw NonCyclotomicFactor("cyclotomic index must be positive");
    if (scale == 0) throw NonCyclotomicFactor("Phi_m(q^0) is a constant");
    CyclotomicMultiset out;
    const long s = scale < 0 ? -scale : scale;
    // Phi_m(q^s) = prod over d | s' of Phi_{m d}(q), where the usual rule is
    // applied prime by prime: for p | m, Phi_m(q^p) = Phi_{mp}; for p not
    // dividing m, Phi_m(q^p) = Phi_{mp} Phi_m.
    std::vector<std::pair<long, long>> cur = {{m, 1}};
    long rest = s;
    for (long p = 2; rest > 1; ++p) {
        while (rest % p == 0) {
            rest /= p;
            std::vector<std::pair<long, long>> next;
            for (auto [idx, e] : cur) {
                next.push_back({idx * p, e});
                if (idx % p != 0) next.push_back({idx, e});
            }
            cur = std::move(next);
        }
    }
    if (scale > 0) {
        for (auto [idx, e] : cur) out.add(idx, e);
        return out;
    }
    // Phi_k(-x): Phi_{2k}(x) for odd k, Phi_{k/2}(x) for k = 2 mod 4,
    // Phi_k(x) for 4 | k. Applied with x = q, after the substitution above
    // (Phi_m(-q^s) = Phi_m((-q)^s) only for odd s, so handle -q first).
    if (s % 2 == 1) {
        for (auto [idx, e] : cur) {
            long k = idx;
            if (k % 2 == 1)
                out.add(2 * k, e);
            else if (k % 4 == 2)
                out.add(k / 2, e);
            else
                out.add(k, e);
        }
        return out;
    }
    // Even s: (-q^s) = -(q^s); substitute y = -q^{s} via Phi_m(-y) first,
    // then y = q^s.
    CyclotomicMultiset flipped;
    if (m % 2 == 1)
        flipped.add(2 * m, 1);
    else if (m % 4 == 2)
        flipped.add(m / 2, 1);
    else
        flipped.add(m, 1);
    for (auto [idx, e] : flipped.factors) {
        CyclotomicMultiset part = cyclotomic_substitution(idx, s);
        for (auto [j, f] : part.factors) out.add(j, f * e);
    }
    return out;
}

namespace {

LaurentPoly direct_factor(const ModulusFactor& f) {
    const long s = f.scale < 0 ? -f.scale : f.scale;
    LaurentPoly base = f.kind == ModulusFactor::Kind::q_integer ? q_integer(f.arg) : cyclotomic(f.arg);
    if (f.scale < 0) base = subst_negate(base);
    return subst_power(base, s);
}

bool equal_up_to_sign(const LaurentPoly& a, const LaurentPoly& b) { return a == b || a == -b; }

}  // namespace

CyclotomicMultiset normalize_modulus(const std::vector<ModulusFactor>& factors, long verify_degree) {
    CyclotomicMultiset out;
    for (const auto& f : factors) {
        if (f.power < 0) throw NonCyclotomicFactor("negative modulus exponent");
        if (f.power == 0) continue;
        if (f.scale == 0) throw NonCyclotomicFactor("modulus factor in q^0 is a constant");
        CyclotomicMultiset piece;
        if (f.kind == ModulusFactor::Kind::q_integer) {
            if (f.arg <= 0) throw NonCyclotomicFactor("q-integer modulus needs a positive argument");
            for (long d : divisors(f.arg)) {
                if (d == 1) continue;
                for (auto [j, e] : cyclotomic_substitution(d, f.scale).factors) piece.add(j, e);
            }
        } else {
            if (f.arg <= 0) throw NonCyclotomicFactor("cyclotomic index must be positive");
            piece = cyclotomic_substitution(f.arg, f.scale);
        }
        const long s = f.scale < 0 ? -f.scale : f.scale;
        const long direct_degree = s * (f.kind == ModulusFactor::Kind::q_integer ? f.arg - 1 : euler_phi(f.arg));
        if (direct_degree <= verify_degree) {
            if (!equal_up_to_sign(expand(piece), direct_factor(f)))
                throw NonCyclotomicFactor("cyclotomic factorization check failed");
        }
        for (auto [j, e] : piece.factors) out.add(j, e * f.power);
    }
    return out;
}

int binomial_phi_valuation(long e, bool signed_kind, long d) {
    if (e == 0) throw std::domain_error("1 -/+ q^0 has no cyclotomic factorization");
    if (d <= 0) throw std::domain_error("cyclotomic index must be positive");
    const long a = e < 0 ? -e : e;
    if (!signed_kind) return a % d == 0 ? 1 : 0;
    // 1 + q^a = (1 - q^{2a}) / (1 - q^a)
    return (2 * a) % d == 0 && a % d != 0 ? 1 : 0;
}

long phi_valuation_of_cyclotomic_product(const PochhammerSpec& spec, long d) {
    const bool signed_kind = spec.kind == PochhammerSpec::Kind::signed_;
    long v = 0;
    for (long j = 0; j < spec.length; ++j) v += binomial_phi_valuation(spec.start + spec.step * j, signed_kind, d);
    return v;
}

}  // namespace qcong
