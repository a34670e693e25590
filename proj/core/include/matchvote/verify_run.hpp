#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matchvote/election.hpp"
#include "matchvote/rational.hpp"
#include "matchvote/sequential_rules.hpp"
#include "matchvote/weights.hpp"

namespace matchvote {

struct RunCertificate {
    RuleTag rule = RuleTag::SeqThiele;
    /// Round optimum per replayed round.
    std::vector<Rational> optima;
    /// Value the given matching achieves in the same round.
    std::vector<Rational> attained;
    bool valid = true;
    /// First failing round (0-based), or -1.
    int first_invalid = -1;
    std::string reason;
};

/// Replays rule on sequence; valid iff every given matching is a candidate
/// that attains its round's optimum exactly. Supports seq-thiele (weights
/// default to PAV), seq-phragmen and rule-x; throws ValidationError for
/// other tags.
[[nodiscard]] RunCertificate verify_run(const MatchingElection& e, RuleTag rule, const std::vector<Matching>& sequence,
                                        const std::optional<WeightSequence>& w = std::nullopt);

}  // namespace matchvote
