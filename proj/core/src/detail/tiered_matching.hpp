#pragma once

// Maximum-weight matching with a secondary integer objective.
//
// Edges are compared by exact primary weight, then by the summed tier, then
// by the canonical lexicographic order. Edges with zero primary and zero tier
// are dropped; an edge with zero primary but positive tier may be used.

#include <vector>

#include "matchvote/election.hpp"
#include "matchvote/rational.hpp"

namespace matchvote::detail {

struct TieredEdge {
    Pair pair;
    Rational primary;
    int tier = 0;
};

/// Edges must be distinct canonical pairs.
[[nodiscard]] Matching max_weight_matching_tiered(int nodes, std::vector<TieredEdge> edges);

}  // namespace matchvote::detail
