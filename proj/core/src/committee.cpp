#include "matchvote/committee.hpp"

#include <stdexcept>

namespace matchvote {

Committee Committee::from_trace(std::vector<Matching> trace) {
    Committee c;
    c.trace_.emplace();
    for (auto& m : trace) c.add(m);
    return c;
}

Committee Committee::from_counts(const std::vector<std::pair<Matching, int>>& counts) {
    Committee c;
    for (const auto& [m, count] : counts) c.add(m, count);
    return c;
}

void Committee::add(const Matching& m, int count) {
    if (count <= 0) throw std::invalid_argument("committee multiplicity must be positive");
    counts_[m] += count;
    size_ += count;
    if (trace_)
        for (int i = 0; i < count; ++i) trace_->push_back(m);
}

int Committee::count(const Matching& m) const {
    const auto it = counts_.find(m);
    return it == counts_.end() ? 0 : it->second;
}

std::vector<Matching> Committee::support() const {
    std::vector<Matching> out;
    out.reserve(counts_.size());
    for (const auto& [m, count] : counts_) out.push_back(m);
    return out;
}

std::vector<Matching> Committee::members() const {
    std::vector<Matching> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (const auto& [m, count] : counts_)
        for (int i = 0; i < count; ++i) out.push_back(m);
    return out;
}

std::vector<int> happiness(const MatchingElection& e, const Committee& w) {
    std::vector<int> h(static_cast<std::size_t>(e.n()), 0);
    for (const auto& [m, count] : w.counts())
        for (AgentId a : approvers(e, m)) h[static_cast<std::size_t>(a)] += count;
    return h;
}

}  // namespace matchvote
