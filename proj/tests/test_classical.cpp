#include <gtest/gtest.h>

#include <random>

#include "qcong/classical.hpp"

using namespace qcong;

namespace {

Rational rat(long a, long b = 1) {
    Rational x(a, b);
    x.canonicalize();
    return x;
}

Rational binom(long n, long k) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(b);
}

}  // namespace

TEST(Valuation, Examples) {
    EXPECT_EQ(padic_valuation(rat(250, 3), 5), 3);
    EXPECT_EQ(padic_valuation(rat(3, 25), 5), -2);
    EXPECT_EQ(padic_valuation(rat(0), 7), kInfiniteValuation);
    EXPECT_EQ(padic_valuation(Integer(-48), 2), 4);
}

TEST(Valuation, Additive) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> v(-100000, 100000), w(1, 100000);
    for (int i = 0; i < 500; ++i) {
        long a = v(rng), c = v(rng);
        if (a == 0) a = 1;
        if (c == 0) c = 1;
        const Rational x = rat(a, w(rng)), y = rat(c, w(rng));
        for (long p : {2, 3, 5, 7})
            EXPECT_EQ(padic_valuation(Rational(x * y), p), padic_valuation(x, p) + padic_valuation(y, p));
    }
}

TEST(Eval, HalfRisingFactorialIsCentralBinomial) {
    const auto e = parse_expr("rf(1/2,k)/fact(k)");
    for (long k = 0; k <= 100; ++k) {
        Rational want = binom(2 * k, k);
        Integer four;
        mpz_ui_pow_ui(four.get_mpz_t(), 4, static_cast<unsigned long>(k));
        want /= four;
        EXPECT_EQ(eval_rational(*e, {{"k", k}}), want) << k;
    }
}

TEST(Sum, Ramanujan14AtFive) {
    EXPECT_EQ(classical_sum(lookup("classical-1.4"), false, 5, 1), rat(1) + rat(3, 32) + rat(595, 73728));
}

TEST(Sum, RV1AtThree) {
    EXPECT_EQ(classical_sum(lookup("classical-RV1"), false, 3, 1), rat(1) + rat(1, 4) + rat(9, 64));
}

TEST(Check, ProvenTargets) {
    const auto a = check_classical(lookup("classical-1.4"), 5, 1);
    EXPECT_EQ(a.target, 3);
    EXPECT_TRUE(a.passed());
    const auto b = check_classical(lookup("classical-rv-1"), 5, 2, 1);
    EXPECT_EQ(b.target, 4);
    EXPECT_TRUE(b.passed());
    const auto c = check_classical(lookup("classical-1.7"), 5, 1);
    EXPECT_TRUE(c.passed());
    ASSERT_TRUE(c.conjectured_target);
    EXPECT_EQ(*c.conjectured_target, 4);
}

TEST(Check, RejectsInadmissible) {
    EXPECT_THROW(check_classical(lookup("classical-1.4"), 3, 1), CaseError);
    EXPECT_THROW(check_classical(lookup("classical-1.4"), 9, 1), CaseError);
}

TEST(Check, SignFlipFails) {
    const auto m = mutate(lookup("classical-1.4"), Mutation::prefactor_sign);
    ASSERT_TRUE(m);
    EXPECT_FALSE(check_classical(*m, 5, 1).passed());
}

TEST(Dwork, ConstantSeriesPasses) {
    auto delta0 = [](long k) { return k == 0 ? rat(1) : rat(0); };
    auto bound = [](long r) { return r == 0 ? 0L : 4L * r; };
    for (const auto& pc : dwork_quotient_check(delta0, bound, 5, 3, 3)) EXPECT_TRUE(pc.passed()) << pc.r;
}

TEST(Dwork, PerturbedSeriesFailsAtLevelOne) {
    auto a = [](long k) { return k <= 1 ? rat(1) : rat(0); };
    auto bound = [](long r) {
        long b = 1;
        for (long i = 0; i < r; ++i) b *= 5;
        return b - 1;
    };
    const auto checks = dwork_quotient_check(a, bound, 5, 2, 3);
    ASSERT_FALSE(checks.empty());
    EXPECT_EQ(checks[0].r, 1);
    EXPECT_FALSE(checks[0].passed());
}

TEST(Dwork, Ramanujan14Family) {
    for (const auto& pc : dwork_quotient_check(lookup("classical-1.4"), 5, 2, 3)) EXPECT_TRUE(pc.passed()) << pc.r;
}
