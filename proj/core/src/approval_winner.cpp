#include "matchvote/approval_winner.hpp"

#include <stdexcept>

#include "detail/tiered_matching.hpp"

namespace matchvote {

namespace {

// Every view pair has an approver, so any matching of the view is minimal.
// The approver count ranks ties in ω-weight: a matching maximizing ω and
// then |N_M| cannot be dominated, since a dominating one would tie on ω and
// have more approvers. Remaining ties fall to the canonical order.
Matching best_on_view(const MatchingElection& e, const AgentWeighting& omega) {
    std::vector<detail::TieredEdge> edges;
    for (const auto& [a, b] : e.view_edges()) {
        detail::TieredEdge edge{{a, b}, Rational(0), 0};
        if (e.approves(a, b)) {
            edge.primary += omega[static_cast<std::size_t>(a)];
            ++edge.tier;
        }
        if (e.approves(b, a)) {
            edge.primary += omega[static_cast<std::size_t>(b)];
            ++edge.tier;
        }
        edges.push_back(std::move(edge));
    }
    return detail::max_weight_matching_tiered(e.n(), std::move(edges));
}

// n+1 on the approvers of m, 1 elsewhere: any matching keeping all of them
// outweighs every matching that drops one.
AgentWeighting repair_weights(const MatchingElection& e, const Matching& m) {
    AgentWeighting omega(static_cast<std::size_t>(e.n()), Rational(1));
    for (AgentId a : approvers(e, m)) omega[static_cast<std::size_t>(a)] = Rational(e.n() + 1);
    return omega;
}

void check_weighting(const MatchingElection& e, const AgentWeighting& omega) {
    if (omega.size() != static_cast<std::size_t>(e.n())) throw std::invalid_argument("weighting size differs from agent count");
    for (const auto& w : omega)
        if (w.sign() < 0) throw std::invalid_argument("weighting must be non-negative");
}

}  // namespace

Rational approval_weight(const MatchingElection& e, const AgentWeighting& omega, const Matching& m) {
    Rational total;
    for (AgentId a : approvers(e, m)) total += omega[static_cast<std::size_t>(a)];
    return total;
}

Matching pareto_repair(const MatchingElection& e, const Matching& m) {
    if (!is_minimal(e, m)) throw std::invalid_argument("pareto_repair requires a minimal matching");
    return best_on_view(e, repair_weights(e, m));
}

Matching weighted_approval_winner(const MatchingElection& e, const AgentWeighting& omega) {
    check_weighting(e, omega);
    const Matching first = best_on_view(e, omega);
    return pareto_repair(e, first);
}

bool is_candidate(const MatchingElection& e, const Matching& m) {
    if (!is_minimal(e, m)) return false;
    const auto omega = repair_weights(e, m);
    const auto best = best_on_view(e, omega);
    return approval_weight(e, omega, best) == Rational(static_cast<std::int64_t>(approvers(e, m).size()) * (e.n() + 1));
}

}  // namespace matchvote
