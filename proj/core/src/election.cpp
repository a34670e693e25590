#include "matchvote/election.hpp"

#include <algorithm>
#include <stdexcept>

#include "matchvote/errors.hpp"

namespace matchvote {

Matching::Matching(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
    for (auto& [a, b] : pairs_) {
        if (a == b) throw std::invalid_argument("matching pairs an agent with itself");
        if (a > b) std::swap(a, b);
    }
    std::sort(pairs_.begin(), pairs_.end());
    std::vector<AgentId> seen;
    seen.reserve(pairs_.size() * 2);
    for (const auto& [a, b] : pairs_) {
        seen.push_back(a);
        seen.push_back(b);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("matching uses an agent twice");
}

bool Matching::contains(Pair p) const {
    if (p.first > p.second) std::swap(p.first, p.second);
    return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

AgentId Matching::partner(AgentId a) const {
    for (const auto& [x, y] : pairs_) {
        if (x == a) return y;
        if (y == a) return x;
    }
    return -1;
}

MatchingElection::MatchingElection(std::vector<std::string> names, std::vector<std::vector<AgentId>> approvals, int k)
    : names_(std::move(names)), approvals_(std::move(approvals)), k_(k) {
    const int n = static_cast<int>(names_.size());
    if (n < 2) throw ValidationError("agents: at least two agents are required");
    if (approvals_.size() != names_.size()) throw ValidationError("approvals: one approval set per agent is required");
    if (k_ <= 0) throw ValidationError("k: committee size must be positive");
    for (int a = 0; a < n; ++a) {
        if (!index_.emplace(names_[static_cast<std::size_t>(a)], a).second)
            throw ValidationError("agents: duplicate agent name '" + names_[static_cast<std::size_t>(a)] + "'");
    }
    matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
    bool any = false;
    for (int a = 0; a < n; ++a) {
        auto& set = approvals_[static_cast<std::size_t>(a)];
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        for (AgentId b : set) {
            if (b < 0 || b >= n) throw ValidationError("approvals: unknown agent id " + std::to_string(b));
            if (b == a) throw ValidationError("approvals: agent '" + names_[static_cast<std::size_t>(a)] + "' approves itself");
            matrix_[static_cast<std::size_t>(a) * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)] = 1;
        }
        any = any || !set.empty();
    }
    if (!any) throw ValidationError("approvals: at least one agent must approve someone");
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (approves(a, b) || approves(b, a)) view_edges_.emplace_back(a, b);
}

namespace {

std::vector<std::string> default_names(std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 1; i <= n; ++i) names.push_back("a" + std::to_string(i));
    return names;
}

}  // namespace

MatchingElection::MatchingElection(std::vector<std::vector<AgentId>> approvals, int k)
    // Copied, not moved: argument evaluation order would otherwise empty it before it is sized.
    : MatchingElection(default_names(approvals.size()), approvals, k) {}

AgentId MatchingElection::index_of(std::string_view name) const {
    const auto it = index_.find(std::string(name));
    if (it == index_.end()) throw ValidationError("unknown agent '" + std::string(name) + "'");
    return it->second;
}

MatchingElection MatchingElection::with_k(int k) const { return MatchingElection(names_, approvals_, k); }

ApprovalGraph approval_graph(const MatchingElection& e) {
    ApprovalGraph g;
    for (AgentId a = 0; a < e.n(); ++a) {
        for (AgentId b : e.approvals(a)) {
            if (!e.approves(b, a))
                g.directed.emplace_back(a, b);
            else if (a < b)
                g.undirected.emplace_back(a, b);
        }
    }
    return g;
}

std::vector<AgentId> approvers(const MatchingElection& e, const Matching& m) {
    std::vector<AgentId> out;
    for (const auto& [a, b] : m.pairs()) {
        if (e.approves(a, b)) out.push_back(a);
        if (e.approves(b, a)) out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_minimal(const MatchingElection& e, const Matching& m) {
    for (const auto& [a, b] : m.pairs()) {
        if (a < 0 || b >= e.n()) return false;
        if (!e.approves(a, b) && !e.approves(b, a)) return false;
    }
    return true;
}

Matching minimize(const MatchingElection& e, const Matching& m) {
    std::vector<Pair> kept;
    for (const auto& [a, b] : m.pairs())
        if (e.approves(a, b) || e.approves(b, a)) kept.emplace_back(a, b);
    return Matching(std::move(kept));
}

std::string to_string(const MatchingElection& e, const Matching& m) {
    std::string out = "{";
    for (std::size_t i = 0; i < m.pairs().size(); ++i) {
        if (i > 0) out += ", ";
        out += e.name(m.pairs()[i].first) + "-" + e.name(m.pairs()[i].second);
    }
    return out + "}";
}

}  // namespace matchvote
