#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "qcong/qkit.hpp"

using namespace qcong;

namespace {

LaurentPoly P(std::initializer_list<long> c, long off = 0) { return LaurentPoly::from_ints(c, off); }

Integer binom(long n, long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Legendre symbol by brute-force search for squares.
int legendre_brute(long a, long p) {
    long r = ((a % p) + p) % p;
    if (r == 0) return 0;
    for (long x = 1; x < p; ++x)
        if (x * x % p == r) return 1;
    return -1;
}

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST(Cyclotomic, SmallValues) {
    EXPECT_EQ(cyclotomic(1), P({-1, 1}));
    EXPECT_EQ(cyclotomic(6), P({1, -1, 1}));
    EXPECT_EQ(cyclotomic(12), P({1, 0, -1, 0, 1}));
    EXPECT_EQ(cyclotomic(105).high_degree(), 48);
    EXPECT_EQ(cyclotomic(105).coeff(7), -2);
}

TEST(Cyclotomic, ProductOverDivisors) {
    for (long n = 1; n <= 200; ++n) {
        LaurentPoly prod(1);
        for (long d : divisors(n)) prod *= cyclotomic(d);
        EXPECT_EQ(prod, LaurentPoly::monomial(1, n) - LaurentPoly(1)) << n;
        EXPECT_EQ(cyclotomic(n).high_degree(), euler_phi(n));
    }
}

TEST(Cyclotomic, ConcurrentLookups) {
    std::vector<std::thread> pool;
    std::vector<LaurentPoly> results(8);
    for (int t = 0; t < 8; ++t) pool.emplace_back([t, &results] { results[t] = cyclotomic(360 + 7 * (t % 2)); });
    for (auto& th : pool) th.join();
    for (int t = 2; t < 8; ++t) EXPECT_EQ(results[t], results[t % 2]);
}

TEST(QInteger, Examples) {
    EXPECT_EQ(q_integer(3, 1), P({1, 1, 1}));
    EXPECT_EQ(q_integer(1, 7), P({1}));
    EXPECT_EQ(q_integer(5, 2), P({1, 0, 1, 0, 1, 0, 1, 0, 1}));
    EXPECT_TRUE(q_integer(0).is_zero());
    // [-1] = -q^-1
    EXPECT_EQ(q_integer(-1), P({-1}, -1));
}

TEST(Pochhammer, Examples) {
    EXPECT_EQ(pochhammer({PochhammerSpec::Kind::standard, 1, 2, 2}), P({1, -1, 0, -1, 1}));
    EXPECT_EQ(pochhammer({PochhammerSpec::Kind::signed_, 0, 1, 1}), P({2}));
    EXPECT_EQ(pochhammer({PochhammerSpec::Kind::standard, -2, 4, 1}), P({-1, 0, 1}, -2));
    EXPECT_EQ(pochhammer({PochhammerSpec::Kind::standard, 3, 1, 0}), P({1}));
    EXPECT_TRUE(pochhammer({PochhammerSpec::Kind::standard, -2, 1, 3}).is_zero());
}

TEST(Pochhammer, Splitting) {
    using K = PochhammerSpec::Kind;
    for (long k = 0; k <= 20; ++k)
        EXPECT_EQ(pochhammer({K::standard, 1, 1, 2 * k}),
                  pochhammer({K::standard, 1, 2, k}) * pochhammer({K::standard, 2, 2, k}));
}

TEST(QBinomial, Examples) {
    EXPECT_EQ(q_binomial(2, 1), P({1, 1}));
    EXPECT_EQ(q_binomial(4, 2), P({1, 1, 2, 1, 1}));
    EXPECT_EQ(q_binomial(9, 0), P({1}));
    EXPECT_TRUE(q_binomial(3, 4).is_zero());
    EXPECT_EQ(q_binomial(4, 2, 3), subst_power(P({1, 1, 2, 1, 1}), 3));
}

TEST(QBinomial, ClassicalLimit) {
    for (long n = 0; n <= 30; ++n)
        for (long k = 0; k <= n; ++k) EXPECT_EQ(q_binomial(n, k).evaluate(1), Rational(binom(n, k)));
}

TEST(Kronecker, Examples) {
    EXPECT_EQ(kronecker(-1, 5), 1);
    EXPECT_EQ(kronecker(-3, 5), -1);
    EXPECT_EQ(kronecker(-3, 3), 0);
    EXPECT_EQ(kronecker(-3, 7), 1);
    EXPECT_EQ(kronecker(-2, 3), 1);
    EXPECT_EQ(kronecker(5, 2), -1);
    EXPECT_EQ(kronecker(1, 2), 1);
    EXPECT_EQ(kronecker(-1, -1), -1);
    EXPECT_EQ(kronecker(1, 0), 1);
    EXPECT_EQ(kronecker(2, 0), 0);
}

TEST(Kronecker, EulerCriterionForOddPrimes) {
    for (long p = 3; p < 200; ++p) {
        if (!is_prime(p)) continue;
        for (long a = -60; a <= 60; ++a) EXPECT_EQ(kronecker(a, p), legendre_brute(a, p)) << a << "/" << p;
    }
}

TEST(Kronecker, CompletelyMultiplicative) {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<long> v(-300, 300);
    for (int i = 0; i < 1000; ++i) {
        long a = v(rng), b = v(rng), n = v(rng);
        if (n != 0) EXPECT_EQ(kronecker(a * b, n), kronecker(a, n) * kronecker(b, n));
        long m = v(rng);
        if (n != 0 && m != 0 && a != 0) EXPECT_EQ(kronecker(a, n * m), kronecker(a, n) * kronecker(a, m)) << a << " " << n << " " << m;
    }
}

TEST(Residue, Examples) {
    EXPECT_EQ(least_nonneg_residue(Rational(-1, 2), 5), 2);
    EXPECT_EQ(least_nonneg_residue(Rational(3), 5), 3);
    EXPECT_EQ(least_nonneg_residue(Rational(-1, 3), 7), 2);
    EXPECT_EQ(least_nonneg_residue(Rational(-12), 5), 3);
    EXPECT_THROW(least_nonneg_residue(Rational(1, 5), 5), std::domain_error);
}

TEST(Modulus, Examples) {
    using K = ModulusFactor::Kind;
    auto ms = normalize_modulus({{K::q_integer, 25, 1, 1}, {K::cyclotomic, 5, 1, 2}, {K::cyclotomic, 25, 1, 2}});
    EXPECT_EQ(ms.factors, (std::vector<std::pair<long, long>>{{5, 3}, {25, 3}}));
    EXPECT_EQ(normalize_modulus({{K::cyclotomic, 3, 2, 1}}).factors,
              (std::vector<std::pair<long, long>>{{3, 1}, {6, 1}}));
    EXPECT_EQ(normalize_modulus({{K::cyclotomic, 5, -1, 1}}).factors, (std::vector<std::pair<long, long>>{{10, 1}}));
}

TEST(Modulus, SubstitutionMatchesDirectExpansion) {
    for (long m = 1; m <= 40; ++m) {
        for (long s : {1L, 2L, 3L, 4L, 6L, -1L, -2L, -3L}) {
            auto ms = cyclotomic_substitution(m, s);
            LaurentPoly base = s < 0 ? subst_negate(cyclotomic(m)) : cyclotomic(m);
            LaurentPoly direct = subst_power(base, s < 0 ? -s : s);
            LaurentPoly back = expand(ms);
            EXPECT_TRUE(back == direct || back == -direct) << m << " " << s;
        }
    }
}

TEST(Modulus, QIntegerInSquaredBase) {
    using K = ModulusFactor::Kind;
    // [5]_{q^2} = Phi_5(q^2) = Phi_5 Phi_10
    auto ms = normalize_modulus({{K::q_integer, 5, 2, 1}});
    EXPECT_EQ(ms.factors, (std::vector<std::pair<long, long>>{{5, 1}, {10, 1}}));
}

TEST(Modulus, RejectsNonCyclotomic) {
    using K = ModulusFactor::Kind;
    EXPECT_THROW(normalize_modulus({{K::q_integer, 0, 1, 1}}), NonCyclotomicFactor);
    EXPECT_THROW(normalize_modulus({{K::cyclotomic, 3, 0, 1}}), NonCyclotomicFactor);
}

TEST(PhiValuation, Examples) {
    using K = PochhammerSpec::Kind;
    EXPECT_EQ(phi_valuation_of_cyclotomic_product({K::standard, 1, 2, 12}, 5), 2);
    EXPECT_EQ(phi_valuation_of_cyclotomic_product({K::standard, 2, 2, 2}, 5), 0);
    EXPECT_EQ(phi_valuation_of_cyclotomic_product({K::standard, 1, 1, 9}, 1), 9);
}

TEST(PhiValuation, MatchesRepeatedDivision) {
    using K = PochhammerSpec::Kind;
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> start(1, 6), step(1, 5), len(0, 8);
    for (int i = 0; i < 25; ++i) {
        PochhammerSpec spec{i % 3 == 0 ? K::signed_ : K::standard, start(rng), step(rng), len(rng)};
        LaurentPoly p = pochhammer(spec);
        for (long d = 1; d <= 50; ++d) {
            long v = phi_valuation_of_cyclotomic_product(spec, d);
            LaurentPoly cur = p;
            for (long t = 0; t < v; ++t) {
                auto r = exact_div(cur, cyclotomic(d));
                ASSERT_TRUE(std::holds_alternative<LaurentPoly>(r));
                cur = std::get<LaurentPoly>(r);
            }
            EXPECT_FALSE(divides(cyclotomic(d), cur)) << d;
        }
    }
}
