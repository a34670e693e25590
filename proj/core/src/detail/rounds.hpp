#pragma once

// Round optima shared by the rules and the run verifier.

#include <optional>
#include <vector>

#include "matchvote/approval_winner.hpp"
#include "matchvote/election.hpp"
#include "matchvote/rational.hpp"

namespace matchvote::detail {

/// Earliest t in [0, 1] at which some candidate's supporters hold one dollar.
Rational phragmen_time(const MatchingElection& e, const std::vector<Rational>& beta);

/// Minimal q such that some candidate collects one dollar from
/// min(b_a, q) per supporter; nullopt when nothing is affordable.
std::optional<Rational> rule_x_price(const MatchingElection& e, const std::vector<Rational>& budgets);

/// Time at which this supporter set alone reaches one dollar.
Rational supporters_time(const std::vector<Rational>& beta, const std::vector<AgentId>& supporters);

/// Price at which this supporter set collects one dollar; nullopt if unaffordable.
std::optional<Rational> supporters_price(const std::vector<Rational>& budgets, const std::vector<AgentId>& supporters);

}  // namespace matchvote::detail
