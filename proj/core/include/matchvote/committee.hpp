#pragma once

#include <map>
#include <optional>
#include <vector>

#include "matchvote/election.hpp"

namespace matchvote {

/// Multiset of matchings with an optional selection order.
///
/// Invariant: when a trace is present it collapses exactly to the counts.
class Committee {
public:
    Committee() = default;
    static Committee from_trace(std::vector<Matching> trace);
    static Committee from_counts(const std::vector<std::pair<Matching, int>>& counts);

    /// Appends one copy; extends the trace if one is kept.
    void add(const Matching& m, int count = 1);

    [[nodiscard]] int size() const { return size_; }
    [[nodiscard]] bool empty() const { return size_ == 0; }
    [[nodiscard]] int count(const Matching& m) const;
    [[nodiscard]] const std::map<Matching, int>& counts() const { return counts_; }
    /// Distinct members in canonical order.
    [[nodiscard]] std::vector<Matching> support() const;
    /// All copies in canonical order.
    [[nodiscard]] std::vector<Matching> members() const;
    [[nodiscard]] const std::optional<std::vector<Matching>>& trace() const { return trace_; }

    /// Multiset equality; traces are ignored.
    friend bool operator==(const Committee& a, const Committee& b) { return a.counts_ == b.counts_; }

private:
    std::map<Matching, int> counts_;
    std::optional<std::vector<Matching>> trace_;
    int size_ = 0;
};

/// h_a(W): copies in W that agent a approves.
[[nodiscard]] std::vector<int> happiness(const MatchingElection& e, const Committee& w);

}  // namespace matchvote
