#pragma once

#include <vector>

#include "matchvote/election.hpp"
#include "matchvote/weighted_graph.hpp"

namespace matchvote {

/// Structure shared by all maximum matchings of a graph.
///
/// y: vertices missed by some maximum matching. x: neighbours of y outside y.
/// w: the rest. components: connected components of G[y], each sorted, in
/// order of their smallest vertex.
struct GallaiEdmondsDecomposition {
    std::vector<int> y;
    std::vector<int> x;
    std::vector<int> w;
    std::vector<std::vector<int>> components;
    /// Maximum matching size of the whole graph.
    int nu = 0;
};

/// Computed from n+1 maximum-cardinality matchings, then verified: G[w] is
/// perfectly matchable, every component is factor-critical, a maximum
/// matching sends x into distinct components, and
/// nu = (|V| - #components + |x|) / 2. Throws std::logic_error otherwise.
[[nodiscard]] GallaiEdmondsDecomposition gallai_edmonds(int nodes, const std::vector<Pair>& edges);
[[nodiscard]] GallaiEdmondsDecomposition gallai_edmonds(const WeightedGraph& g);

/// Edges of the subgraph induced by keep (a per-vertex flag).
[[nodiscard]] std::vector<Pair> induced_edges(const std::vector<Pair>& edges, const std::vector<char>& keep);

}  // namespace matchvote
