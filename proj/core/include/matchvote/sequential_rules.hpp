#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matchvote/committee.hpp"
#include "matchvote/election.hpp"
#include "matchvote/rational.hpp"
#include "matchvote/weights.hpp"

namespace matchvote {

enum class RuleTag { SeqThiele, SeqPhragmen, RuleX, LsPav, ExactThiele };

[[nodiscard]] std::string to_string(RuleTag rule);
/// Accepts the CLI spellings; throws ValidationError otherwise.
[[nodiscard]] RuleTag parse_rule(std::string_view text);

/// What Rule X does once no candidate is affordable.
enum class Completion { None, Fill };

struct RoundRecord {
    Matching chosen;
    /// Marginal score (Thiele), purchase time t* (Phragmén) or price q* (Rule X).
    Rational optimum;
    /// Post-round β (Phragmén) or remaining budgets (Rule X); empty otherwise.
    std::vector<Rational> budgets;
    /// Per-agent payment this round (Rule X).
    std::vector<Rational> payments;
    /// Rule X completion round rather than a purchase.
    bool filled = false;
};

struct RuleOutcome {
    RuleTag rule = RuleTag::SeqThiele;
    Committee committee;
    std::vector<RoundRecord> rounds;
    /// Total time for seq-Phragmén.
    Rational elapsed;
    /// Improving swaps for LS-PAV.
    std::size_t swaps = 0;
};

/// k rounds; each buys the approval winner under ω(a) = w_{h_a + 1}.
[[nodiscard]] RuleOutcome seq_thiele(const MatchingElection& e, const WeightSequence& w, int k);

/// Each round buys the first candidate whose supporters hold one dollar,
/// found by searching the optimal value curve over [0, 1].
[[nodiscard]] RuleOutcome seq_phragmen(const MatchingElection& e, int k);

/// Budgets start at k/n; each round buys at the minimal affordable price.
/// Stops when nothing is affordable, then applies the completion policy.
[[nodiscard]] RuleOutcome rule_x(const MatchingElection& e, int k, Completion completion = Completion::None);

/// Local search for PAV from the seq-PAV committee (or initial, if given),
/// swapping whenever the score rises by at least 1/((2k-1)(k-1)k).
[[nodiscard]] RuleOutcome ls_pav(const MatchingElection& e, int k, const std::optional<Committee>& initial = std::nullopt);

/// LS-PAV acceptance threshold; requires k >= 2.
[[nodiscard]] Rational ls_pav_epsilon(int k);

}  // namespace matchvote
