#pragma once

#include <vector>

#include "matchvote/election.hpp"
#include "matchvote/rational.hpp"

namespace matchvote {

/// ω: one non-negative weight per agent.
using AgentWeighting = std::vector<Rational>;

/// Sum of ω over the approvers of m.
[[nodiscard]] Rational approval_weight(const MatchingElection& e, const AgentWeighting& omega, const Matching& m);

/// Candidate maximizing the ω-weight of its approvers.
///
/// Phase 1 solves a maximum-weight matching on the undirected view (one-sided
/// pair weighs ω of the approver, mutual pair the sum). Phase 2 repairs the
/// result to a candidate without losing any approver. Both phases break ties
/// by the smallest canonical pair list. Throws std::invalid_argument on a
/// negative or wrongly sized weighting.
[[nodiscard]] Matching weighted_approval_winner(const MatchingElection& e, const AgentWeighting& omega);

/// Candidate M' with approvers(m) ⊆ approvers(M'). Requires m minimal.
[[nodiscard]] Matching pareto_repair(const MatchingElection& e, const Matching& m);

/// Minimal and Pareto optimal.
[[nodiscard]] bool is_candidate(const MatchingElection& e, const Matching& m);

}  // namespace matchvote
