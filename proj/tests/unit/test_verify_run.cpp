#include <gtest/gtest.h>

#include "matchvote/errors.hpp"
#include "matchvote/fixtures.hpp"
#include "matchvote/verify_run.hpp"

using namespace matchvote;

TEST(VerifyRun, SixAgentSeqPav) {
    const auto f = make_fixture("fig1");
    const auto c = verify_run(f.election, RuleTag::SeqThiele, f.sequences.at("seq-pav"));
    EXPECT_TRUE(c.valid);
    EXPECT_EQ(c.optima, (std::vector<Rational>{3, Rational(5, 2), Rational(3, 2)}));
    EXPECT_EQ(c.attained, c.optima);
}

TEST(VerifyRun, SixAgentSeqPavWrongFirstRound) {
    const auto f = make_fixture("fig1");
    const auto& m = f.matchings;
    const auto c = verify_run(f.election, RuleTag::SeqThiele, {m.at("c3"), m.at("c1"), m.at("c2")});
    EXPECT_FALSE(c.valid);
    EXPECT_EQ(c.first_invalid, 0);
    EXPECT_EQ(c.attained.at(0), Rational(2));
    EXPECT_EQ(c.optima.at(0), Rational(3));
}

TEST(VerifyRun, SixAgentPhragmenBothTieBranches) {
    const auto f = make_fixture("fig1");
    EXPECT_TRUE(verify_run(f.election, RuleTag::SeqPhragmen, f.sequences.at("phragmen-c1-first")).valid);
    EXPECT_TRUE(verify_run(f.election, RuleTag::SeqPhragmen, f.sequences.at("phragmen-c2-first")).valid);
}

TEST(VerifyRun, SixAgentPhragmenRepeatingC1IsTooLate) {
    // After c1 at t = 1/3, c2 is affordable after another 1/9 while c1 needs 1/3.
    const auto f = make_fixture("fig1");
    const auto& m = f.matchings;
    const auto c = verify_run(f.election, RuleTag::SeqPhragmen, {m.at("c1"), m.at("c1"), m.at("c2")});
    EXPECT_FALSE(c.valid);
    EXPECT_EQ(c.first_invalid, 1);
    EXPECT_EQ(c.optima.at(1), Rational(1, 9));
    EXPECT_EQ(c.attained.at(1), Rational(1, 3));
}

TEST(VerifyRun, TriangleAlternatingPhragmenRun) {
    const auto f = make_fixture("prop-phragmen-ejr");
    const auto c = verify_run(f.election, RuleTag::SeqPhragmen, f.sequences.at("run"));
    EXPECT_TRUE(c.valid);
    EXPECT_EQ(c.optima.at(0), Rational(1, 2));
}

TEST(VerifyRun, TriangleBlockPhragmenRunFails) {
    const auto f = make_fixture("prop-phragmen-ejr");
    const Matching left = f.matchings.at("a1a2");
    const Matching right = f.matchings.at("a2a3");
    const auto c = verify_run(f.election, RuleTag::SeqPhragmen, {left, left, left, right, right, right});
    EXPECT_FALSE(c.valid);
    EXPECT_EQ(c.first_invalid, 1);
}

TEST(VerifyRun, RuleXThirteenAgentPrices) {
    const auto f = make_fixture("prop-rulex-core");
    const auto c = verify_run(f.election, RuleTag::RuleX, f.sequences.at("run"));
    ASSERT_TRUE(c.valid) << c.reason;
    std::vector<Rational> expected(8, Rational(1, 8));
    expected.insert(expected.end(), 3, Rational(1, 3));
    expected.insert(expected.end(), 2, Rational(1));
    EXPECT_EQ(c.attained, expected);
}

TEST(VerifyRun, RuleXRejectsUnaffordable) {
    const auto f = make_fixture("fig1");
    const auto c = verify_run(f.election, RuleTag::RuleX, f.sequences.at("seq-pav"));
    EXPECT_FALSE(c.valid);
    EXPECT_EQ(c.first_invalid, 2);
}

TEST(VerifyRun, NonCandidateRejected) {
    const auto f = make_fixture("fig1");
    const auto c = verify_run(f.election, RuleTag::SeqThiele, {Matching({{0, 1}})});
    EXPECT_FALSE(c.valid);
    EXPECT_EQ(c.first_invalid, 0);
}

TEST(VerifyRun, UnsupportedRule) {
    const auto f = make_fixture("fig1");
    EXPECT_THROW((void)verify_run(f.election, RuleTag::LsPav, f.sequences.at("seq-pav")), ValidationError);
}
