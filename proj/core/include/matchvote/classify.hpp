#pragma once

#include <string>
#include <vector>

#include "matchvote/election.hpp"

namespace matchvote {

struct ElectionClass {
    bool symmetric = false;
    bool bipartite = false;
    /// Side (0 or 1) per agent when bipartite, else empty. Lexicographically
    /// smallest 2-coloring: the lowest agent of every component is on side 0.
    std::vector<int> side;

    [[nodiscard]] bool general() const { return !symmetric && !bipartite; }
    /// "general", "symmetric", "bipartite" or "symmetric+bipartite".
    [[nodiscard]] std::string tag() const;
};

[[nodiscard]] ElectionClass classify(const MatchingElection& e);

}  // namespace matchvote
