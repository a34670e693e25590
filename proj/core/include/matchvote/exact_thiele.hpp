#pragma once

#include <optional>
#include <vector>

#include "matchvote/committee.hpp"
#include "matchvote/election.hpp"
#include "matchvote/gallai_edmonds.hpp"
#include "matchvote/weights.hpp"

namespace matchvote {

/// Optimal w-Thiele committee of a bipartite election via the k-copy
/// meta-election and a k-regular multigraph decomposition. Throws
/// ValidationError on non-bipartite input.
[[nodiscard]] Committee bipartite_thiele(const MatchingElection& e, const WeightSequence& w, int k);

/// Bipartite image ψ of a symmetric election and what is needed to map
/// committees back.
///
/// ψ has Y on one side and X plus |Y_i| - 1 dummies per Y-component on the
/// other; each dummy mutually approves all of its component. psi is empty
/// when ψ has no approvals, in which case every committee lifts to copies of
/// the fixed matching.
struct SymmetricReduction {
    MatchingElection original;
    GallaiEdmondsDecomposition decomposition;
    std::optional<MatchingElection> psi;
    /// ψ agent -> original agent, or -1 for dummies.
    std::vector<AgentId> to_original;
    /// Original agent -> ψ agent, or -1 for agents in W.
    std::vector<AgentId> to_psi;
    /// Original agent -> Y-component index, or -1.
    std::vector<int> component_of;
    /// Perfect matching of G[W].
    Matching w_matching;
};

/// Throws ValidationError on non-symmetric input.
[[nodiscard]] SymmetricReduction symmetric_to_bipartite(const MatchingElection& e);

/// Maps a committee of ψ back: X-Y pairs are kept, the W matching is added
/// and each Y-component gets a near-perfect matching avoiding its designated
/// agent. Throws std::invalid_argument if a member is not a candidate of ψ.
[[nodiscard]] Committee lift_committee(const SymmetricReduction& r, const Committee& psi_committee);

/// Lifted image of the empty ψ-committee member (degenerate reductions).
[[nodiscard]] Matching lift_matching(const SymmetricReduction& r, const Matching& psi_matching);

/// Dispatches bipartite, then symmetric, then guarded brute force.
[[nodiscard]] Committee exact_thiele(const MatchingElection& e, const WeightSequence& w, int k);

}  // namespace matchvote
