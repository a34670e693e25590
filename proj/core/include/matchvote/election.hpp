#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace matchvote {

using AgentId = int;

/// Unordered agent pair stored as (smaller, larger).
using Pair = std::pair<AgentId, AgentId>;

/// Set of disjoint agent pairs in canonical (sorted) order.
class Matching {
public:
    Matching() = default;
    /// Canonicalizes; throws std::invalid_argument on self-pairs or shared agents.
    explicit Matching(std::vector<Pair> pairs);

    [[nodiscard]] const std::vector<Pair>& pairs() const { return pairs_; }
    [[nodiscard]] std::size_t size() const { return pairs_.size(); }
    [[nodiscard]] bool empty() const { return pairs_.empty(); }
    [[nodiscard]] bool contains(Pair p) const;
    /// Partner of a, or -1.
    [[nodiscard]] AgentId partner(AgentId a) const;

    friend auto operator<=>(const Matching&, const Matching&) = default;
    friend bool operator==(const Matching&, const Matching&) = default;

private:
    std::vector<Pair> pairs_;
};

/// Agents with approval sets over each other and a committee size.
///
/// Immutable after construction. Approval sets are sorted and the pairwise
/// relation is cached as a dense matrix.
class MatchingElection {
public:
    /// Throws ValidationError on self-approval, out-of-range ids, n < 2,
    /// k <= 0, duplicate names or an all-empty profile.
    MatchingElection(std::vector<std::string> names, std::vector<std::vector<AgentId>> approvals, int k);
    /// Names agents a1..an.
    MatchingElection(std::vector<std::vector<AgentId>> approvals, int k);

    [[nodiscard]] int n() const { return static_cast<int>(names_.size()); }
    [[nodiscard]] int k() const { return k_; }
    [[nodiscard]] const std::vector<std::string>& names() const { return names_; }
    [[nodiscard]] const std::string& name(AgentId a) const { return names_.at(static_cast<std::size_t>(a)); }
    /// Throws ValidationError for unknown names.
    [[nodiscard]] AgentId index_of(std::string_view name) const;

    [[nodiscard]] const std::vector<AgentId>& approvals(AgentId a) const {
        return approvals_[static_cast<std::size_t>(a)];
    }
    [[nodiscard]] const std::vector<std::vector<AgentId>>& approval_profile() const { return approvals_; }
    [[nodiscard]] bool approves(AgentId a, AgentId b) const {
        return matrix_[static_cast<std::size_t>(a) * names_.size() + static_cast<std::size_t>(b)] != 0;
    }
    /// Pairs {a,b} where at least one endpoint approves the other, sorted.
    [[nodiscard]] const std::vector<Pair>& view_edges() const { return view_edges_; }

    [[nodiscard]] MatchingElection with_k(int k) const;

    friend bool operator==(const MatchingElection& a, const MatchingElection& b) {
        return a.names_ == b.names_ && a.approvals_ == b.approvals_ && a.k_ == b.k_;
    }

private:
    std::vector<std::string> names_;
    std::vector<std::vector<AgentId>> approvals_;
    int k_ = 1;
    std::vector<char> matrix_;
    std::vector<Pair> view_edges_;
    std::unordered_map<std::string, AgentId> index_;
};

/// Mixed graph: undirected for mutual approvals, directed (a,b) when only a approves b.
struct ApprovalGraph {
    std::vector<Pair> undirected;
    std::vector<Pair> directed;
};

[[nodiscard]] ApprovalGraph approval_graph(const MatchingElection& e);

/// Agents matched to a partner they approve, ascending.
[[nodiscard]] std::vector<AgentId> approvers(const MatchingElection& e, const Matching& m);

/// Every pair approved by at least one endpoint and every agent in range.
[[nodiscard]] bool is_minimal(const MatchingElection& e, const Matching& m);

/// Drops pairs neither endpoint approves.
[[nodiscard]] Matching minimize(const MatchingElection& e, const Matching& m);

[[nodiscard]] std::string to_string(const MatchingElection& e, const Matching& m);

}  // namespace matchvote
