#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "matchvote/committee.hpp"
#include "matchvote/election.hpp"

namespace matchvote {

/// A published instance rebuilt in code, with the named matchings,
/// committees, selection sequences and agent groups its claims refer to.
struct Fixture {
    std::string name;
    MatchingElection election;
    std::map<std::string, Matching> matchings;
    std::map<std::string, Committee> committees;
    std::map<std::string, std::vector<Matching>> sequences;
    std::map<std::string, std::vector<AgentId>> groups;
};

/// fig1, footnote4, prop-seq-core, prop-rulex-core, prop-phragmen-ejr.
[[nodiscard]] std::vector<std::string> fixture_names();

/// Throws ValidationError for unknown names.
[[nodiscard]] Fixture make_fixture(std::string_view name);

}  // namespace matchvote
