#include <gtest/gtest.h>

#include <algorithm>

#include "montyhall/bayes.hpp"
#include "oracle.hpp"
#include "test_support.hpp"

namespace {

using namespace montyhall;

TEST(LeastLikelyDoorTest, Examples) {
    EXPECT_EQ(least_likely_door(test_support::skewed_prior()), 3);
    EXPECT_EQ(least_likely_door(uniform_prior(3)), 1);
    EXPECT_EQ(least_likely_door(make_prior({0.2, 0.5, 0.3})), 1);
    EXPECT_EQ(least_likely_door(make_prior({0.4, 0.2, 0.2, 0.2})), 2);
}

TEST(BayesOptimalTest, Examples) {
    const BayesSolution skewed = bayes_optimal(test_support::skewed_prior(), fair_reveal(3));
    EXPECT_EQ(skewed.strategy, Strategy::always_switch(DoorSet(3), 3));
    EXPECT_NEAR(skewed.value, 7.0 / 9, 1e-12);

    const BayesSolution classic = bayes_optimal(uniform_prior(3), fair_reveal(3));
    EXPECT_EQ(classic.theta_star, 1);
    EXPECT_NEAR(classic.value, 2.0 / 3, 1e-12);

    const BayesSolution four = bayes_optimal(make_prior({0.1, 0.2, 0.3, 0.4}), fair_reveal(4));
    EXPECT_EQ(four.strategy, Strategy::always_switch(DoorSet(4), 1));
    EXPECT_NEAR(four.value, 0.9, 1e-12);
}

TEST(BayesOptimalTest, IndependentOfTheHost) {
    test_support::RandomInputs gen(31);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 3 + trial % 3;
        const Prior p = gen.prior(n);
        const BayesSolution reference = bayes_optimal(p, fair_reveal(n));
        for (int k = 0; k < 5; ++k) {
            const BayesSolution other = bayes_optimal(p, gen.reveal(n));
            EXPECT_EQ(other.strategy, reference.strategy);
            EXPECT_EQ(other.value, reference.value);
        }
    }
}

TEST(BayesOptimalTest, DimensionMismatch) {
    try {
        (void)bayes_optimal(uniform_prior(3), fair_reveal(4));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
    }
}

TEST(BestDecisionTest, SwitchesOnTies) {
    const Prior p = test_support::skewed_prior();
    const DecisionValue best = best_decision_for(p, test_support::three_door_reveal_with_row1(0.75), 1);
    EXPECT_EQ(best.decision.at(2), Action::Switch);
    EXPECT_EQ(best.decision.at(3), Action::Switch);
    EXPECT_NEAR(best.value, 5.0 / 9, 1e-12);
}

TEST(BestDecisionTest, MatchesWhenTheHostIsTelling) {
    // q(1,2) = 0.9: p_2 - p_1 q = 3/9 - 3.6/9 < 0, so keep door 1 when 2 is offered.
    const Prior p = test_support::skewed_prior();
    const DecisionValue best = best_decision_for(p, test_support::three_door_reveal_with_row1(0.9), 1);
    EXPECT_EQ(best.decision.at(2), Action::Match);
    EXPECT_EQ(best.decision.at(3), Action::Switch);
    // p_1 + (p_3 - p_1 * 0.1) = 4/9 + 2/9 - 0.4/9
    EXPECT_NEAR(best.value, 5.6 / 9, 1e-12);
}

TEST(BestDecisionTest, LeastLikelyDoorAlwaysSwitches) {
    test_support::RandomInputs gen(5);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + trial % 4;
        const Prior p = gen.prior(n);
        const RevealMechanism q = gen.reveal(n);
        EXPECT_TRUE(best_decision_for(p, q, least_likely_door(p)).decision.always_switch());
    }
    const DecisionValue classic = best_decision_for(uniform_prior(3), fair_reveal(3), 1);
    EXPECT_TRUE(classic.decision.always_switch());
    EXPECT_NEAR(classic.value, 2.0 / 3, 1e-12);
}

TEST(BestDecisionTest, OptimalPerDoorAgainstEveryDecision) {
    test_support::RandomInputs gen(77);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + trial % 3;
        const Prior p = gen.prior(n);
        const RevealMechanism q = gen.reveal(n);
        double best_over_doors = 0.0;
        for (Door x = 1; x <= n; ++x) {
            const DecisionValue best = best_decision_for(p, q, x);
            const double achieved = expected_win(p, q, Strategy(best.decision));
            EXPECT_NEAR(achieved, best.value, 1e-12);
            for (const auto& a : enumerate_decisions(DoorSet(n), x)) {
                EXPECT_GE(achieved + 1e-12, expected_win(p, q, Strategy(a)));
            }
            best_over_doors = std::max(best_over_doors, best.value);
        }
        const auto values = p.values();
        EXPECT_NEAR(best_over_doors, 1.0 - *std::min_element(values.begin(), values.end()), 1e-12);
    }
}

TEST(ExhaustiveBestTest, Examples) {
    EXPECT_NEAR(exhaustive_best(test_support::skewed_prior(), fair_reveal(3)).value, 7.0 / 9, 1e-12);
    const StrategyValue classic = exhaustive_best(uniform_prior(3), fair_reveal(3));
    EXPECT_NEAR(classic.value, 2.0 / 3, 1e-12);
    EXPECT_EQ(classic.strategy, Strategy::always_switch(DoorSet(3), 1));
}

TEST(ExhaustiveBestTest, AgreesWithOracleAndClosedForm) {
    test_support::RandomInputs gen(1234);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 3 + trial % 2;
        const Prior p = gen.prior(n);
        const RevealMechanism q = gen.reveal(n);
        double oracle_best = 0.0;
        for (const auto& s : oracle::all_strategies(n)) {
            oracle_best = std::max(oracle_best, oracle::process_win_probability(
                                                    test_support::to_vector(p), test_support::to_matrix(q), s));
        }
        const StrategyValue brute = exhaustive_best(p, q);
        const BayesSolution bayes = bayes_optimal(p, q);
        ASSERT_NEAR(brute.value, bayes.value, 1e-12);
        ASSERT_NEAR(oracle_best, bayes.value, 1e-12);
        EXPECT_EQ(brute.strategy, bayes.strategy);
    }
}

TEST(ExhaustiveBestTest, SizeLimit) {
    try {
        (void)exhaustive_best(uniform_prior(7), fair_reveal(7));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::SizeLimit);
    }
}

}  // namespace
