#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "matchvote/election.hpp"

namespace matchvote {

enum class ElectionShape { General, Bipartite, Symmetric };

[[nodiscard]] std::string to_string(ElectionShape shape);
/// Throws ValidationError for unknown names.
[[nodiscard]] ElectionShape parse_shape(std::string_view text);

/// Bernoulli(p) approvals: per ordered pair (general), per unordered pair
/// made mutual (symmetric) or per ordered pair across the split after the
/// first ceil(n/2) agents (bipartite).
struct GeneratorParams {
    ElectionShape shape = ElectionShape::General;
    int n = 6;
    double p = 0.5;
    int k = 3;
    std::uint64_t seed = 0;
};

/// Deterministic in params; redraws all-empty profiles. Agents are a1..an.
/// Throws ValidationError on n < 2, k < 1 or p outside (0, 1].
[[nodiscard]] MatchingElection generate(const GeneratorParams& params);

}  // namespace matchvote
