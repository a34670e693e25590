#include <gtest/gtest.h>

#include <random>

#include "matchvote/approval_winner.hpp"
#include "matchvote/axioms.hpp"
#include "matchvote/classify.hpp"
#include "matchvote/enumerate.hpp"
#include "matchvote/errors.hpp"
#include "matchvote/fixtures.hpp"
#include "matchvote/sequential_rules.hpp"
#include "oracles.hpp"

using namespace matchvote;

namespace {

std::vector<AgentId> ids(const MatchingElection& e, std::initializer_list<const char*> names) {
    std::vector<AgentId> out;
    for (const char* n : names) out.push_back(e.index_of(n));
    std::sort(out.begin(), out.end());
    return out;
}

bool at_least(std::size_t size, int ell, const MatchingElection& e) {
    return static_cast<long long>(size) * e.k() >= static_cast<long long>(ell) * e.n();
}

// Witnesses are re-validated with direct arithmetic, independent of the checker.
void expect_witness(const MatchingElection& e, const Committee& w, const AxiomVerdict& v) {
    ASSERT_FALSE(v.satisfied);
    ASSERT_GE(v.ell, 1);
    ASSERT_LE(v.ell, e.k());
    EXPECT_TRUE(at_least(v.group.size(), v.ell, e));
    EXPECT_EQ(v.threshold, Rational(v.ell) * Rational(e.n()) / Rational(e.k()));
    const auto h = oracle::happiness(e, w.members());
    if (v.axiom == Axiom::Core) {
        ASSERT_TRUE(v.deviation.has_value());
        EXPECT_EQ(v.deviation->size(), v.ell);
        EXPECT_TRUE(verify_blocking(e, w, v.group, *v.deviation));
        return;
    }
    ASSERT_TRUE(v.candidate.has_value());
    EXPECT_TRUE(is_candidate(e, *v.candidate));
    const auto sup = oracle::approver_set(e, v.candidate->pairs());
    for (AgentId a : v.group) EXPECT_TRUE(std::binary_search(sup.begin(), sup.end(), a));
    if (v.axiom == Axiom::Ejr) {
        for (AgentId a : v.group) EXPECT_LT(h[static_cast<std::size_t>(a)], v.ell);
    } else {
        int approved = 0;
        for (const auto& [m, count] : w.counts()) {
            const auto s = oracle::approver_set(e, m.pairs());
            const bool any = std::any_of(v.group.begin(), v.group.end(),
                                         [&](AgentId a) { return std::binary_search(s.begin(), s.end(), a); });
            if (any) approved += count;
        }
        EXPECT_LT(approved, v.ell);
    }
}

Committee random_committee(std::mt19937_64& rng, const std::vector<Matching>& cands, int k) {
    std::uniform_int_distribution<std::size_t> pick(0, cands.size() - 1);
    Committee w;
    for (int i = 0; i < k; ++i) w.add(cands[pick(rng)]);
    return w;
}

}  // namespace

TEST(Ejr, TrianglePhragmenRunViolates) {
    const auto f = make_fixture("prop-phragmen-ejr");
    const auto v = check_ejr(f.election, f.committees.at("run"));
    EXPECT_FALSE(v.satisfied);
    EXPECT_EQ(v.ell, 4);
    EXPECT_EQ(v.group, ids(f.election, {"a1", "a3"}));
    expect_witness(f.election, f.committees.at("run"), v);
}

TEST(Ejr, SixAgentSeqPavSatisfied) {
    const auto f = make_fixture("fig1");
    EXPECT_TRUE(check_ejr(f.election, f.committees.at("c1-c2-c3")).satisfied);
}

TEST(Ejr, PjrInstanceViolates) {
    const auto f = make_fixture("footnote4");
    const auto v = check_ejr(f.election, f.committees.at("c-c-c'-c'"));
    EXPECT_FALSE(v.satisfied);
    expect_witness(f.election, f.committees.at("c-c-c'-c'"), v);
}

TEST(Pjr, PjrInstance) {
    const auto f = make_fixture("footnote4");
    const auto v = check_pjr(f.election, f.committees.at("c-c-c'-c'"));
    EXPECT_FALSE(v.satisfied);
    EXPECT_EQ(v.ell, 3);
    EXPECT_EQ(v.group, f.groups.at("pjr-violators"));
    expect_witness(f.election, f.committees.at("c-c-c'-c'"), v);
    EXPECT_TRUE(check_pjr(f.election, f.committees.at("c-c-c-c'")).satisfied);
    EXPECT_FALSE(oracle::pjr_violated(f.election, f.committees.at("c-c-c-c'").members()));
    EXPECT_TRUE(oracle::pjr_violated(f.election, f.committees.at("c-c-c'-c'").members()));
}

TEST(Pjr, SixAgentPhragmenCommitteeSatisfied) {
    const auto f = make_fixture("fig1");
    EXPECT_TRUE(check_pjr(f.election, f.committees.at("c1-c1-c2")).satisfied);
}

TEST(Pjr, EveryoneFullyServed) {
    const MatchingElection e({"a", "b"}, {{1}, {0}}, 3);
    const Matching m({{0, 1}});
    EXPECT_TRUE(check_pjr(e, Committee::from_trace({m, m, m})).satisfied);
}

TEST(Core, SixAgentCommitteesStable) {
    const auto f = make_fixture("fig1");
    for (const auto& [name, w] : f.committees) EXPECT_TRUE(check_core(f.election, w).satisfied) << name;
}

TEST(Core, ThirteenAgentRunBlocked) {
    const auto f = make_fixture("prop-rulex-core");
    const auto& w = f.committees.at("run");
    const auto v = check_core(f.election, w);
    EXPECT_FALSE(v.satisfied);
    EXPECT_EQ(v.ell, 4);
    expect_witness(f.election, w, v);
    EXPECT_TRUE(verify_blocking(f.election, w, f.groups.at("blocking"), f.committees.at("deviation")));
}

TEST(Core, SingleSeatNeedsEveryone) {
    const auto f = make_fixture("fig1");
    const auto e = f.election.with_k(1);
    EXPECT_TRUE(check_core(e, Committee::from_trace({f.matchings.at("c1")})).satisfied);
}

TEST(VerifyBlocking, NinetyEightAgentGroup) {
    const auto f = make_fixture("prop-seq-core");
    const auto& e = f.election;
    EXPECT_EQ(f.groups.at("blocking"), ids(e, {"a27", "b27", "c40", "c41"}));
    EXPECT_TRUE(verify_blocking(e, f.committees.at("run"), f.groups.at("blocking"), f.committees.at("deviation")));
}

TEST(VerifyBlocking, RejectsBadWitnesses) {
    const auto f = make_fixture("fig1");
    const auto& e = f.election;
    const auto& w = f.committees.at("c1-c2-c3");
    const auto c2 = Committee::from_trace({f.matchings.at("c2")});
    EXPECT_FALSE(verify_blocking(e, w, {}, c2));
    EXPECT_FALSE(verify_blocking(e, w, ids(e, {"a5", "a6"}), c2));
    EXPECT_FALSE(verify_blocking(e, w, {4, 4}, c2));
    EXPECT_FALSE(verify_blocking(e, w, ids(e, {"a5", "a6"}), Committee{}));
    EXPECT_FALSE(verify_blocking(e, w, ids(e, {"a1", "a2"}), Committee::from_trace({Matching({{0, 1}})})));
}

TEST(Axioms, TagsRoundTrip) {
    for (auto a : {Axiom::Ejr, Axiom::Pjr, Axiom::Core}) EXPECT_EQ(parse_axiom(to_string(a)), a);
    EXPECT_THROW((void)parse_axiom("jr"), ValidationError);
}

// Checkers agree with scans over all agent groups; core implies EJR implies PJR.
TEST(Axioms, MatchBruteForceAndImplicationChain) {
    std::mt19937_64 rng(4);
    int violations[3] = {0, 0, 0};
    for (int trial = 0; trial < 600; ++trial) {
        const int n = 2 + trial % 6;
        const int k = 1 + trial % 3;
        const auto e = oracle::random_election(rng, n, 0.45, k, trial % 3);
        const auto cands = enumerate_candidates(e);
        // Odd trials repeat one candidate, which leaves groups unserved.
        auto w = random_committee(rng, cands, trial % 2 == 0 ? k : 1);
        if (trial % 2 == 1 && k > 1) w.add(w.support().front(), k - 1);
        const auto members = w.members();
        const auto ejr = check_ejr(e, w);
        const auto pjr = check_pjr(e, w);
        const auto core = check_core(e, w);
        EXPECT_EQ(!ejr.satisfied, oracle::ejr_violated(e, members)) << "trial " << trial;
        EXPECT_EQ(!pjr.satisfied, oracle::pjr_violated(e, members)) << "trial " << trial;
        EXPECT_EQ(!core.satisfied, oracle::core_violated(e, members)) << "trial " << trial;
        if (core.satisfied) EXPECT_TRUE(ejr.satisfied);
        if (ejr.satisfied) EXPECT_TRUE(pjr.satisfied);
        for (const auto* v : {&ejr, &pjr, &core})
            if (!v->satisfied) {
                expect_witness(e, w, *v);
                ++violations[static_cast<int>(v->axiom)];
            }
    }
    // The corpus must actually exercise the violation paths.
    for (int count : violations) EXPECT_GT(count, 10);
}

TEST(Axioms, PjrGuard) {
    // 21 distinct members with k = 21: 2^21 subsets exceed the budget.
    std::vector<std::string> names;
    std::vector<std::vector<AgentId>> sets(42);
    for (int i = 0; i < 42; ++i) names.push_back("v" + std::to_string(i));
    for (int i = 0; i < 21; ++i) sets[static_cast<std::size_t>(2 * i)].push_back(2 * i + 1);
    const MatchingElection e(names, sets, 21);
    Committee w;
    for (int i = 0; i < 21; ++i) w.add(Matching({{2 * i, 2 * i + 1}}));
    EXPECT_THROW((void)check_pjr(e, w), GuardError);
}
