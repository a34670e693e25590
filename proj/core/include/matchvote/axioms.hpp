#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "matchvote/committee.hpp"
#include "matchvote/election.hpp"
#include "matchvote/rational.hpp"

namespace matchvote {

enum class Axiom { Ejr, Pjr, Core };

[[nodiscard]] std::string to_string(Axiom axiom);
/// "ejr", "pjr" or "core"; throws ValidationError otherwise.
[[nodiscard]] Axiom parse_axiom(std::string_view text);

/// Outcome of an axiom check. Cohesion thresholds use k from the election.
///
/// EJR witness: |group| >= ell*n/k, everyone in group approves candidate and
/// has happiness below ell. PJR witness: same size bound and common
/// candidate, and the committee holds fewer than ell copies approved by
/// anyone in group. Core witness: |group| >= ell*n/k and every member
/// strictly prefers deviation (size ell) to the committee.
struct AxiomVerdict {
    Axiom axiom = Axiom::Ejr;
    bool satisfied = true;
    int ell = 0;
    std::vector<AgentId> group;
    std::optional<Matching> candidate;
    std::optional<Committee> deviation;
    /// ell * n / k.
    Rational threshold;
};

/// One approval-winner call per ell, weight 1 on agents with happiness below ell.
[[nodiscard]] AxiomVerdict check_ejr(const MatchingElection& e, const Committee& w);

/// One approval-winner call per subset of the committee's distinct members.
/// Throws GuardError when 2^|support| * k exceeds 10^6.
[[nodiscard]] AxiomVerdict check_pjr(const MatchingElection& e, const Committee& w);

/// Exhaustive search over deviations of size 1..k; the first violation by
/// smallest ell, then canonical multiset order, is reported. Throws
/// GuardError past the enumeration or multiset limits.
[[nodiscard]] AxiomVerdict check_core(const MatchingElection& e, const Committee& w);

/// Whether group blocks w through deviation.
[[nodiscard]] bool verify_blocking(const MatchingElection& e, const Committee& w, const std::vector<AgentId>& group,
                                   const Committee& deviation);

}  // namespace matchvote
