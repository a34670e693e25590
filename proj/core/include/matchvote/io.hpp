#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matchvote/axioms.hpp"
#include "matchvote/classify.hpp"
#include "matchvote/committee.hpp"
#include "matchvote/election.hpp"
#include "matchvote/gallai_edmonds.hpp"
#include "matchvote/rational.hpp"
#include "matchvote/sequential_rules.hpp"
#include "matchvote/verify_run.hpp"

namespace matchvote {

// Wire formats. Agents appear by name, rationals as "p/q" strings.
//
//   election:  {"agents": ["a1", ...], "approvals": {"a1": ["a2"], ...}, "k": 3}
//   committee: {"matchings": [{"pairs": [["a1","a2"]], "count": 1}, ...]}
//   sequence:  {"sequence": [{"pairs": [...], "count": 3}, ...]}  (counts expand in place)
//   weights:   ["1", "1/2", ...]  or  {"weights": [...]}
//
// Parsers throw ParseError on malformed JSON or shape and ValidationError on
// model violations (unknown agents, self-approval, overlapping pairs).

[[nodiscard]] MatchingElection parse_election(std::string_view text);
[[nodiscard]] Committee parse_committee(const MatchingElection& e, std::string_view text);
[[nodiscard]] std::vector<Matching> parse_sequence(const MatchingElection& e, std::string_view text);
[[nodiscard]] std::vector<Rational> parse_weights(std::string_view text);

[[nodiscard]] std::string election_to_json(const MatchingElection& e);
[[nodiscard]] std::string committee_to_json(const MatchingElection& e, const Committee& c);
[[nodiscard]] std::string sequence_to_json(const MatchingElection& e, const std::vector<Matching>& sequence);

/// Committee, Thiele score when given, and the per-round trace.
[[nodiscard]] std::string outcome_to_json(const MatchingElection& e, const RuleOutcome& outcome,
                                          const std::optional<Rational>& score = std::nullopt);
[[nodiscard]] std::string verdict_to_json(const MatchingElection& e, const AxiomVerdict& verdict);
[[nodiscard]] std::string certificate_to_json(const MatchingElection& e, const RunCertificate& cert);
[[nodiscard]] std::string candidates_to_json(const MatchingElection& e, const std::vector<Matching>& candidates);
/// Classification plus, for symmetric elections, the Gallai-Edmonds structure.
[[nodiscard]] std::string analysis_to_json(const MatchingElection& e, const ElectionClass& cls,
                                           const std::optional<GallaiEdmondsDecomposition>& ge);

}  // namespace matchvote
