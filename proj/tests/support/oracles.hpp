#pragma once

// Exhaustive reference implementations. Nothing here calls the matching
// engine, so agreement with the library is meaningful.

#include <cstdint>
#include <random>
#include <vector>

#include "matchvote/committee.hpp"
#include "matchvote/election.hpp"
#include "matchvote/rational.hpp"
#include "matchvote/weighted_graph.hpp"
#include "matchvote/weights.hpp"

namespace oracle {

using matchvote::AgentId;
using matchvote::Committee;
using matchvote::Matching;
using matchvote::MatchingElection;
using matchvote::Pair;
using matchvote::Rational;
using matchvote::WeightSequence;

/// Every matching (as sorted pair lists) over the given edge list.
std::vector<std::vector<Pair>> all_matchings(int nodes, const std::vector<Pair>& edges);

struct BruteMatching {
    Rational weight;
    Matching best;  // lexicographically smallest optimum without zero-weight edges
};

BruteMatching max_weight(const matchvote::WeightedGraph& g);

/// Maximum matching size.
int nu(int nodes, const std::vector<Pair>& edges);

/// Y, X, W by the vertex-deletion definition.
struct BruteDecomposition {
    std::vector<int> y, x, w;
};
BruteDecomposition gallai_edmonds(int nodes, const std::vector<Pair>& edges);

/// Every approval as an (approver, approved) pair; duplicates for mutual approvals.
std::vector<Pair> approval_edges(const MatchingElection& e);

/// Approvers via the raw profile.
std::vector<AgentId> approver_set(const MatchingElection& e, const std::vector<Pair>& m);

/// Minimal Pareto-optimal matchings, found by comparing approver sets of all matchings.
std::vector<Matching> candidates(const MatchingElection& e);

/// Max over all matchings of the summed weight of approvers.
Rational max_approval_weight(const MatchingElection& e, const std::vector<Rational>& omega);

/// All size-k multisets over indices [0, count).
std::vector<std::vector<int>> multisets(int count, int k);

std::vector<int> happiness(const MatchingElection& e, const std::vector<Matching>& committee);

Rational thiele(const WeightSequence& w, const std::vector<int>& happiness);

struct BestCommittee {
    Rational score;
    std::vector<Matching> members;
};
BestCommittee best_committee(const MatchingElection& e, const WeightSequence& w, int k);

/// Round optima by enumerating candidates.
Rational best_marginal(const MatchingElection& e, const WeightSequence& w, const std::vector<int>& happiness);
/// min over candidates of (1 - sum of supporter budgets) / |supporters|.
Rational phragmen_time(const MatchingElection& e, const std::vector<Rational>& budgets);
/// min over affordable candidates of the price q with sum min(b, q) = 1; negative if none.
Rational rule_x_price(const MatchingElection& e, const std::vector<Rational>& budgets);
/// Price at which a fixed supporter set collects one dollar; negative if unaffordable.
Rational water_fill(const std::vector<Rational>& budgets, const std::vector<AgentId>& supporters);

/// Exhaustive axiom checks over all agent groups.
bool ejr_violated(const MatchingElection& e, const std::vector<Matching>& committee);
bool pjr_violated(const MatchingElection& e, const std::vector<Matching>& committee);
bool core_violated(const MatchingElection& e, const std::vector<Matching>& committee);

/// Random election of the given shape; approvals drawn per ordered pair.
MatchingElection random_election(std::mt19937_64& rng, int n, double p, int k, int shape);

}  // namespace oracle
