#include <gtest/gtest.h>

#include <random>

#include "matchvote/axioms.hpp"
#include "matchvote/sequential_rules.hpp"
#include "oracles.hpp"

using namespace matchvote;

namespace {

constexpr int kTrials = 240;

MatchingElection instance(std::mt19937_64& rng, int trial, int shape) {
    return oracle::random_election(rng, 2 + trial % 6, 0.3 + 0.05 * (trial % 7), 1 + trial % 3, shape);
}

}  // namespace

TEST(RuleGuarantees, RuleXProvidesEjrWhenItFills) {
    std::mt19937_64 rng(101);
    int judged = 0;
    for (int trial = 0; judged < kTrials && trial < 20 * kTrials; ++trial) {
        const auto e = instance(rng, trial, trial % 3);
        const auto o = rule_x(e, e.k());
        if (o.committee.size() != e.k()) continue;
        ++judged;
        EXPECT_TRUE(check_ejr(e, o.committee).satisfied) << "trial " << trial;
    }
    EXPECT_GE(judged, kTrials);
}

TEST(RuleGuarantees, SeqPhragmenProvidesPjr) {
    std::mt19937_64 rng(102);
    for (int trial = 0; trial < kTrials; ++trial) {
        const auto e = instance(rng, trial, trial % 3);
        EXPECT_TRUE(check_pjr(e, seq_phragmen(e, e.k()).committee).satisfied) << "trial " << trial;
    }
}

TEST(RuleGuarantees, LsPavIsCoreStable) {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < kTrials; ++trial) {
        const auto e = instance(rng, trial, trial % 3);
        EXPECT_TRUE(check_core(e, ls_pav(e, e.k()).committee).satisfied) << "trial " << trial;
    }
}

TEST(RuleGuarantees, SeqPavProvidesEjrOnSymmetricElections) {
    std::mt19937_64 rng(104);
    for (int trial = 0; trial < kTrials; ++trial) {
        const auto e = instance(rng, trial, 1);
        EXPECT_TRUE(check_ejr(e, seq_thiele(e, WeightSequence::pav(), e.k()).committee).satisfied) << "trial " << trial;
    }
}
