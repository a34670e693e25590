#pragma once

#include <vector>

#include "matchvote/committee.hpp"
#include "matchvote/election.hpp"
#include "matchvote/rational.hpp"
#include "matchvote/weights.hpp"

namespace matchvote {

inline constexpr int kDefaultEdgeGuard = 16;
inline constexpr long long kMultisetGuard = 1'000'000;

/// All candidates in canonical order, by exhaustive search over matchings of
/// the approval graph. Pareto filtering compares approver sets directly and
/// does not use the matching engine. Throws GuardError past edge_guard edges.
[[nodiscard]] std::vector<Matching> enumerate_candidates(const MatchingElection& e, int edge_guard = kDefaultEdgeGuard);

/// C(count + k - 1, k), saturating at limit + 1.
[[nodiscard]] long long multiset_count(long long count, int k, long long limit = kMultisetGuard);

struct ScoredCommittee {
    Committee committee;
    Rational score;
};

/// Best size-k multiset of enumerated candidates; the first optimum in
/// canonical multiset order wins. Throws GuardError when the search exceeds
/// kMultisetGuard multisets.
[[nodiscard]] ScoredCommittee oracle_optimal_committee(const MatchingElection& e, const WeightSequence& w, int k);

}  // namespace matchvote
