#include <gtest/gtest.h>

#include <random>

#include <boost/multiprecision/cpp_int.hpp>

#include "detail/lex_weight.hpp"
#include "matchvote/weighted_graph.hpp"
#include "oracles.hpp"

using matchvote::Matching;
using matchvote::Pair;
using matchvote::Rational;
using matchvote::WeightedGraph;

TEST(MaxWeightMatching, TriangleTakesHeaviestEdge) {
    WeightedGraph g(3);
    g.add_edge(0, 1, 2);
    g.add_edge(1, 2, 2);
    g.add_edge(0, 2, 3);
    EXPECT_EQ(max_weight_matching(g), Matching({{0, 2}}));
}

TEST(MaxWeightMatching, ZeroWeightEdgeIsDropped) {
    WeightedGraph g(2);
    g.add_edge(0, 1, 0);
    EXPECT_TRUE(max_weight_matching(g).empty());
}

TEST(MaxWeightMatching, PathPrefersHeavierEnd) {
    WeightedGraph g(3);
    g.add_edge(0, 1, 5);
    g.add_edge(1, 2, 4);
    EXPECT_EQ(max_weight_matching(g), Matching({{0, 1}}));
}

TEST(MaxWeightMatching, TieResolvesToSmallestPairList) {
    // Square: {01,23} and {03,12} both weigh 2.
    WeightedGraph g(4);
    g.add_edge(2, 3, 1);
    g.add_edge(1, 2, 1);
    g.add_edge(0, 3, 1);
    g.add_edge(0, 1, 1);
    EXPECT_EQ(max_weight_matching(g), Matching({{0, 1}, {2, 3}}));
}

TEST(MaxWeightMatching, ParallelEdgesKeepHeaviest) {
    WeightedGraph g(2);
    g.add_edge(0, 1, 1);
    g.add_edge(1, 0, Rational(5, 2));
    EXPECT_EQ(matching_weight(g, max_weight_matching(g)), Rational(5, 2));
}

TEST(MaxWeightMatching, RejectsBadEdges) {
    WeightedGraph g(2);
    EXPECT_THROW(g.add_edge(0, 0, 1), std::invalid_argument);
    EXPECT_THROW(g.add_edge(0, 2, 1), std::invalid_argument);
    EXPECT_THROW(g.add_edge(0, 1, -1), std::invalid_argument);
}

TEST(MaxWeightMatching, OddTieSlackIsAnInvariantBreach) {
    using W = matchvote::detail::LexWeight<std::int64_t>;
    EXPECT_THROW(half(W{Rational(1), 3}), std::logic_error);
    EXPECT_EQ(half(W{Rational(1), 4}).tie, 2);
}

namespace {

WeightedGraph random_graph(std::mt19937_64& rng, int nodes, double density, int max_num, int max_den) {
    std::bernoulli_distribution keep(density);
    std::uniform_int_distribution<int> num(0, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    WeightedGraph g(nodes);
    for (int u = 0; u < nodes; ++u)
        for (int v = u + 1; v < nodes; ++v)
            if (keep(rng)) g.add_edge(u, v, Rational(num(rng), den(rng)));
    return g;
}

}  // namespace

TEST(MaxWeightMatching, AgreesWithEnumerationOnRandomGraphs) {
    std::mt19937_64 rng(20240601);
    for (int trial = 0; trial < 600; ++trial) {
        const int nodes = 2 + trial % 9;
        const auto g = random_graph(rng, nodes, 0.3 + 0.1 * (trial % 7), 1 + trial % 6, 1 + trial % 4);
        const auto brute = oracle::max_weight(g);
        const auto got = max_weight_matching(g);
        ASSERT_EQ(matching_weight(g, got), brute.weight) << "trial " << trial;
        ASSERT_EQ(got, brute.best) << "trial " << trial;
    }
}

TEST(MaxWeightMatching, UnitWeightsGiveMaximumCardinality) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        const int nodes = 2 + trial % 9;
        std::bernoulli_distribution keep(0.35);
        std::vector<Pair> edges;
        for (int u = 0; u < nodes; ++u)
            for (int v = u + 1; v < nodes; ++v)
                if (keep(rng)) edges.emplace_back(u, v);
        EXPECT_EQ(static_cast<int>(matchvote::max_cardinality_matching(nodes, edges).size()), oracle::nu(nodes, edges));
    }
}

TEST(MaxWeightMatching, WideGraphsUseBigTieIntegers) {
    // 14-node complete graph has 91 edges, past the 64-bit tie path.
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> num(1, 3);
    for (int trial = 0; trial < 3; ++trial) {
        WeightedGraph g(14);
        for (int u = 0; u < 14; ++u)
            for (int v = u + 1; v < 14; ++v) g.add_edge(u, v, num(rng));
        const auto got = max_weight_matching(g);
        EXPECT_EQ(matching_weight(g, got), oracle::max_weight(g).weight);
    }
}
