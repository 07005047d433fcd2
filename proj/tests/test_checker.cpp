#include <gtest/gtest.h>

#include "qcong/catalog.hpp"
#include "qcong/checker.hpp"

using namespace qcong;

namespace {

RationalFn sum_of(const std::vector<RationalFn>& terms) {
    RationalFn s;
    for (const auto& t : terms) s = s + t;
    return s;
}

Params at(long n, long r = 1, std::optional<long> d = std::nullopt, std::optional<long> a = std::nullopt) {
    return Params{n, r, d, a};
}

}  // namespace

TEST(BuildSide, Thm11aTermCountAndFirstTerm) {
    const auto terms = build_side(lookup("thm1.1a"), Side::lhs, at(5, 1, 2));
    ASSERT_EQ(terms.size(), 3u);
    EXPECT_EQ(terms[0], RationalFn(1));
}

TEST(BuildSide, Thm12aSecondTermByHand) {
    // [4] (1-q)^3 q^-1 / ((1-q)^2 (1-q^2)) = [4] q^-1 / (1+q)
    const auto terms = build_side(lookup("thm1.2a"), Side::lhs, at(7, 1, 1));
    const RationalFn want(LaurentPoly::from_ints({1, 1, 1, 1}, -1), LaurentPoly::from_ints({1, 1}));
    EXPECT_EQ(terms.at(1), want);
}

TEST(BuildSide, RootSubstitutionKillsLateTerms) {
    // a = q^{-(2j+1)n}: terms with k > ((2j+1)n-1)/2 vanish
    const Case& c = lookup("thm2.3");
    const long n = 5;
    const auto terms = build_side(c, Side::lhs, at(n, 1, 1, -n));
    ASSERT_EQ(terms.size(), 5u);
    for (long k = 0; k < 5; ++k) EXPECT_EQ(terms[k].is_zero(), k > (n - 1) / 2) << k;
}

TEST(Identity, Lemma22ByHand) {
    // both sides are -q^{-2}[5] at n = 5
    const Case& c = lookup("lem2.2");
    EXPECT_TRUE(check_identity(c, at(5)));
    const RationalFn want = -RationalFn(LaurentPoly::from_ints({1, 1, 1, 1, 1}, -2));
    EXPECT_EQ(sum_of(build_side(c, Side::lhs, at(5))), want);
    for (long n : {7, 9, 11, 13}) EXPECT_TRUE(check_identity(c, at(n))) << n;
}

TEST(Identity, Lem32ByHand) {
    const Case& c = lookup("lem-3-2");
    const RationalFn want(LaurentPoly::from_ints({1, 1, 1, 1, 1, 1, 1}, -3));
    EXPECT_EQ(sum_of(build_side(c, Side::lhs, at(7))), want);
    for (long n : {3, 5, 7, 9}) EXPECT_TRUE(check_identity(c, at(n))) << n;
}

TEST(Congruence, Thm11aPassesAtFullExponent) {
    const auto rep = check_congruence(lookup("thm1.1a"), at(5, 1, 2));
    ASSERT_EQ(rep.factors.size(), 1u);
    EXPECT_EQ(rep.factors[0].m, 5);
    EXPECT_EQ(rep.factors[0].exponent, 3);
    EXPECT_TRUE(rep.passed());
}

TEST(Congruence, Main4AtLevelTwo) {
    const auto rep = check_congruence(lookup("main-4"), at(5, 2, 1));
    ASSERT_EQ(rep.factors.size(), 2u);
    EXPECT_EQ(rep.factors[0].m, 5);
    EXPECT_EQ(rep.factors[1].m, 25);
    for (const auto& f : rep.factors) EXPECT_EQ(f.exponent, 3);
    EXPECT_TRUE(rep.passed());
}

TEST(Congruence, ExtraQInPrefactorFails) {
    const auto m = mutate(lookup("thm1.1a"), Mutation::prefactor_times_q);
    ASSERT_TRUE(m);
    EXPECT_FALSE(check_congruence(*m, at(5, 1, 1)).passed());
}

TEST(Congruence, ZeroTermRhs) {
    // r = 1: the right-hand sum is its k=0 term
    EXPECT_EQ(build_side(lookup("thm1.2a"), Side::rhs, at(5, 1, 1)).size(), 1u);
}

TEST(Engines, AgreeOnSmallCases) {
    for (const char* id : {"thm1.2a", "thm1.1a", "main-4", "q-rv"})
        for (long n : {5, 7}) {
            const Case& c = lookup(id);
            for (long d : c.d_values) {
                const auto cc = oracle_crosscheck(c, at(n, 1, d));
                EXPECT_FALSE(cc.skipped);
                EXPECT_TRUE(cc.agree) << id << " " << n << " " << d;
                EXPECT_TRUE(cc.localized.passed());
            }
        }
    const auto cc = oracle_crosscheck(lookup("thm1.2a"), at(9, 1, 1));
    EXPECT_TRUE(cc.agree);
}

TEST(Engines, AgreeOnFailure) {
    const auto m = mutate(lookup("main-4"), Mutation::bracket_shift);
    ASSERT_TRUE(m);
    const auto cc = oracle_crosscheck(*m, at(5, 1, 1));
    EXPECT_TRUE(cc.agree);
    EXPECT_FALSE(cc.localized.passed());
    EXPECT_FALSE(cc.naive.passed());
}

TEST(Engines, DegreeGuardSkips) {
    const auto rep = check_congruence(lookup("thm1.1a"), at(7, 1, 1), CheckOptions{Engine::naive, 10});
    EXPECT_TRUE(rep.skipped());
}

TEST(Parametric, Thm23Sampled) {
    const auto rep = check_parametric_sampled(lookup("thm2.3"), at(5, 1, 2), 4);
    EXPECT_EQ(rep.samples.size(), 4u);
    EXPECT_FALSE(rep.roots.empty());
    for (const auto& r : rep.roots) EXPECT_TRUE(r.holds) << r.exponent;
    EXPECT_TRUE(rep.passed());
    // sampled exponents are distinct modulo every modulus index
    for (std::size_t i = 0; i < rep.samples.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) EXPECT_NE((rep.samples[i] - rep.samples[j]) % 5, 0);
}

TEST(Parametric, RootAtBoundary) {
    // j = (n^{r-1}-1)/2 at n = 5, r = 2
    const auto roots = check_roots(lookup("main-2-par"), at(5, 2, 2));
    ASSERT_FALSE(roots.empty());
    EXPECT_EQ(roots.back().j, 2);
    for (const auto& r : roots) EXPECT_TRUE(r.holds);
}

TEST(Parametric, CorruptedBracketFails) {
    Case c = lookup("thm2.3");
    std::string s = c.lhs.summand.text;
    const auto pos = s.find("qint(8k+1)");
    ASSERT_NE(pos, std::string::npos);
    s.replace(pos, 10, "qint(8k+2)");
    c.lhs.summand = SourceExpr(s);
    EXPECT_FALSE(check_parametric_sampled(c, at(5, 1, 2), 4).passed());
}

TEST(Parametric, TooFewResidues) {
    // Phi_3 divides [9]: only three residues mod 3
    EXPECT_THROW(check_parametric_sampled(lookup("main-3-par"), at(9, 1, 1), 4), InsufficientSamples);
    EXPECT_TRUE(check_parametric_sampled(lookup("main-3-par"), at(9, 1, 1), 3).passed());
}

TEST(Catalog, SmallestInstancesAreWellFormed) {
    for (const Case& c : builtin_cases()) {
        if (c.domain != Domain::q) continue;
        const auto inst = smallest_instance(c);
        ASSERT_TRUE(inst) << c.id;
        // a = 1 for the parametric ones
        const std::optional<long> a = c.has_a_slot() ? std::optional<long>(0) : std::nullopt;
        EXPECT_NO_THROW(delta_terms(c, at(inst->n, inst->r, inst->d, a))) << c.id;
    }
}
