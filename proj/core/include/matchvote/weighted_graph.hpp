#pragma once

#include <vector>

#include "matchvote/election.hpp"
#include "matchvote/rational.hpp"

namespace matchvote {

struct WeightedEdge {
    int u;
    int v;
    Rational weight;
};

/// Undirected graph with exact non-negative edge weights.
class WeightedGraph {
public:
    explicit WeightedGraph(int nodes) : nodes_(nodes) {}

    /// Throws std::invalid_argument on self-loops, bad endpoints or negative weight.
    void add_edge(int u, int v, Rational weight);

    [[nodiscard]] int nodes() const { return nodes_; }
    [[nodiscard]] const std::vector<WeightedEdge>& edges() const { return edges_; }

private:
    int nodes_;
    std::vector<WeightedEdge> edges_;
};

/// Exact maximum-weight matching.
///
/// Zero-weight edges never appear in the result. Among optimal matchings the
/// lexicographically smallest canonical pair list is returned. Parallel edges
/// collapse to their heaviest copy.
[[nodiscard]] Matching max_weight_matching(const WeightedGraph& g);

/// Total weight of m in g (heaviest parallel copy per pair).
[[nodiscard]] Rational matching_weight(const WeightedGraph& g, const Matching& m);

/// Maximum-cardinality matching of an unweighted graph, same tie rule.
[[nodiscard]] Matching max_cardinality_matching(int nodes, const std::vector<Pair>& edges);

}  // namespace matchvote
