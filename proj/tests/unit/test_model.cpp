#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "matchvote/classify.hpp"
#include "matchvote/committee.hpp"
#include "matchvote/errors.hpp"
#include "matchvote/fixtures.hpp"
#include "matchvote/scoring.hpp"
#include "matchvote/weights.hpp"
#include "oracles.hpp"

using namespace matchvote;

namespace {

MatchingElection fig1() { return make_fixture("fig1").election; }

std::vector<AgentId> ids(const MatchingElection& e, std::initializer_list<const char*> names) {
    std::vector<AgentId> out;
    for (const char* n : names) out.push_back(e.index_of(n));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(Election, SixAgentShape) {
    const auto e = fig1();
    EXPECT_EQ(e.n(), 6);
    EXPECT_EQ(e.k(), 3);
    EXPECT_TRUE(e.approves(e.index_of("a1"), e.index_of("a2")));
    EXPECT_FALSE(e.approves(e.index_of("a2"), e.index_of("a1")));
}

TEST(Election, RejectsSelfApproval) {
    EXPECT_THROW(MatchingElection({"a1", "a2"}, {{0}, {}}, 1), ValidationError);
}

TEST(Election, RejectsEmptyProfile) {
    EXPECT_THROW(MatchingElection({"a1", "a2"}, {{}, {}}, 1), ValidationError);
}

TEST(Election, RejectsNonPositiveK) {
    EXPECT_THROW(MatchingElection({"a1", "a2"}, {{1}, {}}, 0), ValidationError);
}

TEST(Election, ApprovalGraphSplitsMutualAndOneSided) {
    const auto g = approval_graph(fig1());
    // a3-a4 is the only mutual approval.
    ASSERT_EQ(g.undirected.size(), 1U);
    EXPECT_EQ(g.undirected[0], Pair(2, 3));
    EXPECT_EQ(g.directed.size(), 4U);
}

TEST(Matching, CanonicalOrder) {
    const Matching m({{4, 3}, {1, 0}});
    EXPECT_EQ(m.pairs(), (std::vector<Pair>{{0, 1}, {3, 4}}));
    EXPECT_EQ(m.partner(4), 3);
    EXPECT_THROW(Matching({{0, 1}, {1, 2}}), std::invalid_argument);
}

TEST(Approvers, SixAgentCandidates) {
    const auto f = make_fixture("fig1");
    const auto& e = f.election;
    EXPECT_EQ(approvers(e, f.matchings.at("c1")), ids(e, {"a1", "a3", "a4"}));
    EXPECT_EQ(approvers(e, f.matchings.at("c2")), ids(e, {"a1", "a5", "a6"}));
    EXPECT_EQ(approvers(e, f.matchings.at("c3")), ids(e, {"a2", "a6"}));
    EXPECT_TRUE(approvers(e, Matching{}).empty());
}

TEST(Minimality, DropsPairsWithoutApprover) {
    const auto e = fig1();
    const Matching m({{0, 1}, {4, 5}});
    EXPECT_FALSE(is_minimal(e, m));
    EXPECT_EQ(minimize(e, m), Matching({{0, 1}}));
}

TEST(Scoring, SixAgentPavScores) {
    const auto f = make_fixture("fig1");
    const auto pav = WeightSequence::pav();
    const auto s = thiele_score(f.election, pav, f.committees.at("c1-c2-c3"));
    EXPECT_EQ(s.total, Rational(7));
    EXPECT_EQ(s.happiness, (std::vector<int>{2, 1, 1, 1, 1, 2}));
    EXPECT_EQ(thiele_score(f.election, pav, f.committees.at("c1-c1-c2")).total, Rational(41, 6));
}

TEST(Scoring, EmptyCommitteeScoresZero) {
    EXPECT_EQ(thiele_score(fig1(), WeightSequence::pav(), Committee{}).total, Rational(0));
}

TEST(Weights, Sequences) {
    EXPECT_EQ(WeightSequence::pav()(3), Rational(1, 3));
    EXPECT_EQ(WeightSequence::av()(5), Rational(1));
    EXPECT_EQ(WeightSequence::cc()(2), Rational(0));
    const auto c = WeightSequence::custom({Rational(1), Rational(1, 2)});
    EXPECT_EQ(c(2), Rational(1, 2));
    EXPECT_EQ(c(3), Rational(0));
    EXPECT_THROW(WeightSequence::custom({Rational(1, 2)}), ValidationError);
    EXPECT_THROW(WeightSequence::custom({Rational(1), Rational(2)}), ValidationError);
}

TEST(Committee, TraceCollapsesToCounts) {
    const Matching a({{0, 1}});
    const Matching b({{1, 2}});
    const auto c = Committee::from_trace({a, b, a});
    EXPECT_EQ(c.size(), 3);
    EXPECT_EQ(c.count(a), 2);
    EXPECT_EQ(c, Committee::from_counts({{a, 2}, {b, 1}}));
    ASSERT_TRUE(c.trace().has_value());
    EXPECT_EQ(c.trace()->size(), 3U);
}

TEST(Classify, Examples) {
    EXPECT_EQ(classify(fig1()).tag(), "bipartite");
    const auto tri = make_fixture("prop-phragmen-ejr").election;
    const auto t = classify(tri);
    EXPECT_TRUE(t.symmetric);
    EXPECT_FALSE(t.bipartite);
    const MatchingElection pair({"a", "b"}, {{1}, {0}}, 1);
    const auto p = classify(pair);
    EXPECT_TRUE(p.symmetric);
    EXPECT_TRUE(p.bipartite);
    EXPECT_EQ(p.side, (std::vector<int>{0, 1}));
}

TEST(Classify, GeneralOnOddOneSidedCycle) {
    const MatchingElection e({"a", "b", "c"}, {{1}, {2}, {0}}, 1);
    const auto c = classify(e);
    EXPECT_FALSE(c.symmetric);
    EXPECT_FALSE(c.bipartite);
    EXPECT_EQ(c.tag(), "general");
}

TEST(ModelProperties, RandomElections) {
    std::mt19937_64 rng(11);
    const auto pav = WeightSequence::pav();
    for (int trial = 0; trial < 200; ++trial) {
        const auto e = oracle::random_election(rng, 3 + trial % 5, 0.4, 3, trial % 3);
        const auto cands = oracle::candidates(e);
        const auto cls = classify(e);
        for (const auto& m : cands) {
            for (const auto& [a, b] : m.pairs()) EXPECT_TRUE(e.approves(a, b) || e.approves(b, a));
            if (cls.symmetric) EXPECT_EQ(approvers(e, m).size(), 2 * m.size());
        }
        // Happiness is the multiplicity-weighted approver count and scores only grow.
        Committee w;
        Rational last(0);
        for (const auto& m : cands) {
            w.add(m);
            const auto s = thiele_score(e, pav, w);
            EXPECT_EQ(s.happiness, oracle::happiness(e, w.members()));
            EXPECT_GE(s.total, last);
            last = s.total;
        }
        // Relabelling agents preserves the class.
        std::vector<int> perm(static_cast<std::size_t>(e.n()));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::string> names(perm.size());
        std::vector<std::vector<AgentId>> sets(perm.size());
        for (AgentId a = 0; a < e.n(); ++a) {
            names[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])] = e.name(a);
            for (AgentId b : e.approvals(a))
                sets[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])].push_back(perm[static_cast<std::size_t>(b)]);
        }
        const auto relabelled = classify(MatchingElection(names, sets, e.k()));
        EXPECT_EQ(relabelled.tag(), cls.tag());
        EXPECT_EQ(relabelled.symmetric, cls.symmetric);
        EXPECT_EQ(relabelled.bipartite, cls.bipartite);
    }
}
