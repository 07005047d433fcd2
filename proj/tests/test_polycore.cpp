#include <gtest/gtest.h>

#include <random>

#include "qcong/polycore.hpp"

using namespace qcong;

namespace {

LaurentPoly P(std::initializer_list<long> c, long off = 0) { return LaurentPoly::from_ints(c, off); }

LaurentPoly random_poly(std::mt19937& rng, int max_deg, int max_coeff = 20) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::uniform_int_distribution<int> coef(-max_coeff, max_coeff);
    std::uniform_int_distribution<int> off(-5, 5);
    std::vector<Integer> c(deg(rng) + 1);
    for (auto& x : c) x = coef(rng);
    if (c.back() == 0) c.back() = 1;
    return LaurentPoly(off(rng), std::move(c));
}

// Schoolbook product written out independently of the library.
std::vector<Integer> naive_product(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Integer> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

}  // namespace

TEST(LaurentPoly, CanonicalZero) {
    LaurentPoly z(0, {Integer(0), Integer(0)});
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.offset(), 0);
    EXPECT_TRUE(z.coeffs().empty());
}

TEST(LaurentPoly, TrimsBothEnds) {
    LaurentPoly p(-2, {Integer(0), Integer(3), Integer(0), Integer(1), Integer(0)});
    EXPECT_EQ(p.offset(), -1);
    EXPECT_EQ(p.coeffs().size(), 3u);
    EXPECT_EQ(p.leading(), 1);
    EXPECT_EQ(p.trailing(), 3);
}

TEST(LaurentPoly, DifferenceOfSquares) { EXPECT_EQ(mul(P({1, 1}), P({1, -1})), P({1, 0, -1})); }

TEST(LaurentPoly, AdditiveInverse) {
    std::mt19937 rng(7);
    for (int i = 0; i < 20; ++i) {
        auto p = random_poly(rng, 30);
        EXPECT_TRUE(add(p, neg(p)).is_zero());
    }
}

TEST(LaurentPoly, OffsetBookkeeping) {
    EXPECT_EQ(mul(P({1, 1}, -1), LaurentPoly::monomial(1, 1)), P({1, 1}));
}

TEST(LaurentPoly, ToString) {
    EXPECT_EQ(P({1, 0, -2}, -1).to_string(), "q^-1 - 2*q");
    EXPECT_EQ(LaurentPoly().to_string(), "0");
}

TEST(LaurentPoly, Evaluate) {
    auto p = P({1, 2}, -1);  // q^-1 + 2
    EXPECT_EQ(p.evaluate(Rational(1, 2)), Rational(4));
}

TEST(ExactDiv, Simple) {
    auto r = exact_div(P({-1, 0, 1}), P({-1, 1}));
    ASSERT_TRUE(std::holds_alternative<LaurentPoly>(r));
    EXPECT_EQ(std::get<LaurentPoly>(r), P({1, 1}));
}

TEST(ExactDiv, NotDivisible) {
    auto r = exact_div(P({1, 0, 1}), P({-1, 1}));
    ASSERT_TRUE(std::holds_alternative<DivisibilityFailure>(r));
    EXPECT_FALSE(std::get<DivisibilityFailure>(r).remainder.is_zero());
}

TEST(ExactDiv, SextonicBySixthCyclotomic) {
    // q^6 - 1 = (q^2 - q + 1)(q^4 + q^3 - q - 1)
    auto r = exact_div(P({-1, 0, 0, 0, 0, 0, 1}), P({1, -1, 1}));
    ASSERT_TRUE(std::holds_alternative<LaurentPoly>(r));
    EXPECT_EQ(std::get<LaurentPoly>(r), P({-1, -1, 0, 1, 1}));
}

TEST(ExactDiv, NonIntegralQuotientFails) { EXPECT_FALSE(divides(P({2}), P({1, 1}))); }

TEST(ExactDiv, ZeroDivisorThrows) { EXPECT_THROW(exact_div(P({1}), LaurentPoly()), std::domain_error); }

TEST(ExactDiv, RoundTripProperty) {
    std::mt19937 rng(11);
    for (int i = 0; i < 60; ++i) {
        auto p = random_poly(rng, 50);
        auto q = random_poly(rng, 50);
        auto r = exact_div(mul(p, q), q);
        ASSERT_TRUE(std::holds_alternative<LaurentPoly>(r));
        EXPECT_EQ(std::get<LaurentPoly>(r), p);
    }
}

TEST(Gcd, SmallCases) {
    EXPECT_EQ(gcd_q(P({-1, 0, 1}), P({-1, 0, 0, 1})), P({-1, 1}));
    EXPECT_EQ(gcd_q(P({0, 4, 6}), LaurentPoly()), P({2, 3}));
    auto q5m1 = P({-1, 0, 0, 0, 0, 1});
    auto q10m1 = LaurentPoly::monomial(1, 10) - LaurentPoly(1);
    EXPECT_EQ(gcd_q(q5m1 * q5m1, q10m1), q5m1);
    EXPECT_EQ(gcd_subresultant(q5m1 * q5m1, q10m1), q5m1);
}

TEST(Gcd, BothZeroThrows) { EXPECT_THROW(gcd_q(LaurentPoly(), LaurentPoly()), std::domain_error); }

TEST(Gcd, AssociateProperty) {
    std::mt19937 rng(23);
    int tested = 0;
    for (int i = 0; i < 40; ++i) {
        auto p = random_poly(rng, 25);
        auto q = random_poly(rng, 25);
        auto g = random_poly(rng, 12);
        if (gcd_q(p, q).span_degree() != 0) continue;
        ++tested;
        auto h = gcd_q(p * g, q * g);
        auto expected = g.without_offset().primitive_part();
        EXPECT_EQ(h, expected);
        EXPECT_EQ(gcd_subresultant(p * g, q * g), expected);
    }
    EXPECT_GT(tested, 20);
}

TEST(Subst, Examples) {
    EXPECT_EQ(subst_power(P({1, 1}), 2), P({1, 0, 1}));
    EXPECT_EQ(subst_power(P({1, 1}), -1), P({1, 1}, -1));
    EXPECT_EQ(subst_negate(P({1, -1, 1})), P({1, 1, 1}));
}

TEST(Subst, CompositionProperty) {
    std::mt19937 rng(5);
    const long shifts[] = {-2, -1, 2, 3};
    for (int i = 0; i < 10; ++i) {
        auto p = random_poly(rng, 20);
        for (long s : shifts)
            for (long t : shifts) EXPECT_EQ(subst_power(subst_power(p, s), t), subst_power(p, s * t));
    }
}

TEST(Karatsuba, MatchesSchoolbook) {
    std::mt19937 rng(99);
    for (int len : {1, 5, 63, 64, 65, 130, 257, 500}) {
        for (int other : {1, 40, 64, 300}) {
            std::vector<Integer> a(len), b(other);
            std::uniform_int_distribution<long> c(-1000000, 1000000);
            for (auto& x : a) x = c(rng);
            for (auto& x : b) x = c(rng);
            EXPECT_EQ(multiply_dense(a, b, 8), naive_product(a, b)) << len << "x" << other;
            EXPECT_EQ(multiply_dense(a, b), naive_product(a, b)) << len << "x" << other;
        }
    }
}

TEST(RationalFn, Normalize) {
    auto f = rf_normalize(P({-1, 0, 1}), P({-1, 1}));
    EXPECT_EQ(f.num(), P({1, 1}));
    EXPECT_EQ(f.den(), P({1}));
    auto g = rf_normalize(P({0, 2, 2}), P({0, 4}));
    EXPECT_EQ(g.num(), P({1, 1}));
    EXPECT_EQ(g.den(), P({2}));
}

TEST(RationalFn, AddToZero) {
    RationalFn a(LaurentPoly(1), P({1, -1}));
    RationalFn b(LaurentPoly(-1), P({1, -1}));
    auto s = rf_add(a, b);
    EXPECT_TRUE(s.is_zero());
    EXPECT_EQ(s.den(), P({1}));
}

TEST(RationalFn, ZeroDenominatorRejected) {
    EXPECT_THROW(RationalFn(P({1}), LaurentPoly()), std::domain_error);
}

TEST(RationalFn, DenominatorSignAndUnits) {
    RationalFn f(P({1}), P({0, 0, -3, 3}));  // 1 / (3q^3 - 3q^2)
    // contents 1 and 3 are already coprime, so the 3 stays below
    EXPECT_EQ(f.den(), P({-3, 3}));
    EXPECT_EQ(f.num(), P({1}, -2));
    EXPECT_GT(f.den().leading(), 0);
    EXPECT_EQ(f.den().offset(), 0);
}

TEST(RationalFn, EvaluationProperty) {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    for (int i = 0; i < 20; ++i) {
        RationalFn a(random_poly(rng, 8, 5), random_poly(rng, 6, 5));
        RationalFn b(random_poly(rng, 8, 5), random_poly(rng, 6, 5));
        auto sum = rf_add(a, b);
        auto prod = rf_mul(a, b);
        int checked = 0;
        while (checked < 20) {
            Rational t(num(rng), den(rng));
            t.canonicalize();
            if (t == 0) continue;
            Rational da = a.den().evaluate(t), db = b.den().evaluate(t);
            if (da == 0 || db == 0) continue;
            EXPECT_EQ(sum.evaluate(t), a.evaluate(t) + b.evaluate(t));
            EXPECT_EQ(prod.evaluate(t), a.evaluate(t) * b.evaluate(t));
            ++checked;
        }
    }
}

TEST(RationalFn, PowAndInverse) {
    RationalFn f(P({1, 1}), P({1, -1}));
    EXPECT_EQ(pow(f, 3) * pow(f, -3), RationalFn(1));
    EXPECT_EQ(f * f.inverse(), RationalFn(1));
    EXPECT_EQ(subst_power(f, 2), RationalFn(P({1, 0, 1}), P({1, 0, -1})));
}
