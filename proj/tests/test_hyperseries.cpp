#include <gtest/gtest.h>

#include <random>

#include "qcong/hyperseries.hpp"

using namespace qcong;

namespace {

HyperSeriesSpec random_spec(std::mt19937& rng) {
    std::uniform_int_distribution<long> e(1, 9), s(0, 1);
    HyperSeriesSpec spec;
    const int order = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i <= order; ++i) spec.upper.push_back({s(rng) ? 1 : -1, e(rng)});
    // lower parameters q^t with t > 0 never vanish
    for (int i = 0; i < order; ++i) spec.lower.push_back({1, e(rng)});
    spec.base_scale = 1 + static_cast<long>(rng() % 3);
    spec.argument = {s(rng) ? 1 : -1, e(rng) - 5};
    spec.truncation = 4;
    return spec;
}

}  // namespace

TEST(Phi, EmptyTruncationIsOne) {
    HyperSeriesSpec spec;
    spec.upper = {{1, 3}, {-1, 2}};
    spec.lower = {{1, 5}};
    spec.argument = {1, 1};
    EXPECT_EQ(eval_phi(spec), RationalFn(1));
}

TEST(Phi, UnitUpperParameterTerminates) {
    HyperSeriesSpec spec;
    spec.upper = {{1, 0}};
    spec.argument = {1, 2};
    spec.truncation = 7;
    EXPECT_EQ(eval_phi(spec), RationalFn(1));
}

TEST(Phi, OneTermByHand) {
    // 2phi1(q^2, q^3; q^4; q, z = q) at N = 1: 1 + (1-q^2)(1-q^3) q / ((1-q)(1-q^4))
    HyperSeriesSpec spec;
    spec.upper = {{1, 2}, {1, 3}};
    spec.lower = {{1, 4}};
    spec.argument = {1, 1};
    spec.truncation = 1;
    const RationalFn want = RationalFn(1) + RationalFn(LaurentPoly::from_ints({1, 0, -1}) *
                                                           LaurentPoly::from_ints({0, 1, 0, 0, -1}),
                                                       LaurentPoly::from_ints({1, -1}) * LaurentPoly::from_ints({1, 0, 0, 0, -1}));
    EXPECT_EQ(eval_phi(spec), want);
}

TEST(Phi, LinearInTruncation) {
    std::mt19937 rng(20261019);
    for (int i = 0; i < 40; ++i) {
        HyperSeriesSpec spec = random_spec(rng);
        const RationalFn full = eval_phi(spec);
        const long N = spec.truncation;
        spec.truncation = N - 1;
        EXPECT_EQ(full, eval_phi(spec) + phi_term(spec, N)) << i;
    }
}

TEST(Phi, RejectsMalformedAndVanishing) {
    HyperSeriesSpec spec;
    spec.upper = {{1, 1}};
    spec.lower = {{1, 2}};
    EXPECT_THROW(eval_phi(spec), std::invalid_argument);
    spec.upper = {{1, 1}, {1, 1}};
    spec.lower = {{1, -2}};
    spec.truncation = 4;   // (q^-2; q)_3 contains 1 - q^0
    EXPECT_THROW(eval_phi(spec), VanishingDenominator);
    spec.truncation = 2;
    EXPECT_NO_THROW(eval_phi(spec));
}

TEST(Watson, InstancesHold) {
    for (long n : {3, 5, 7, 9}) {
        EXPECT_TRUE(watson_instance_check(n)) << n;
        const auto w = watson_4k_plus_1(n);
        EXPECT_EQ(w.direct, w.phi87) << n;
    }
}

TEST(Watson, ShiftedArgumentBreaksIt) {
    EXPECT_FALSE(watson_4k_plus_1(3, 1).holds());
    EXPECT_FALSE(watson_4k_minus_1(3, 1).holds());
    EXPECT_THROW(watson_instance_check(4), std::invalid_argument);
}
