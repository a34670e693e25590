#pragma once

#include <vector>

#include "matchvote/committee.hpp"
#include "matchvote/election.hpp"
#include "matchvote/rational.hpp"
#include "matchvote/weights.hpp"

namespace matchvote {

struct ThieleScore {
    Rational total;
    std::vector<int> happiness;
};

/// sc_w(W) = sum over agents of w_1 + ... + w_{h_a(W)}.
[[nodiscard]] ThieleScore thiele_score(const MatchingElection& e, const WeightSequence& w, const Committee& committee);

/// Same sum for a precomputed happiness vector.
[[nodiscard]] Rational thiele_total(const WeightSequence& w, const std::vector<int>& happiness);

}  // namespace matchvote
