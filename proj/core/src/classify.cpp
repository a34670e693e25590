#include "matchvote/classify.hpp"

#include <deque>

namespace matchvote {

std::string ElectionClass::tag() const {
    if (symmetric && bipartite) return "symmetric+bipartite";
    if (symmetric) return "symmetric";
    if (bipartite) return "bipartite";
    return "general";
}

ElectionClass classify(const MatchingElection& e) {
    ElectionClass out;
    const int n = e.n();
    out.symmetric = true;
    for (AgentId a = 0; a < n && out.symmetric; ++a)
        for (AgentId b : e.approvals(a))
            if (!e.approves(b, a)) {
                out.symmetric = false;
                break;
            }

    std::vector<std::vector<AgentId>> adj(static_cast<std::size_t>(n));
    for (const auto& [a, b] : e.view_edges()) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    bool ok = true;
    for (AgentId s = 0; s < n && ok; ++s) {
        if (side[static_cast<std::size_t>(s)] != -1) continue;
        side[static_cast<std::size_t>(s)] = 0;
        std::deque<AgentId> queue{s};
        while (!queue.empty() && ok) {
            const AgentId v = queue.front();
            queue.pop_front();
            for (AgentId u : adj[static_cast<std::size_t>(v)]) {
                auto& su = side[static_cast<std::size_t>(u)];
                if (su == -1) {
                    su = 1 - side[static_cast<std::size_t>(v)];
                    queue.push_back(u);
                } else if (su == side[static_cast<std::size_t>(v)]) {
                    ok = false;
                    break;
                }
            }
        }
    }
    out.bipartite = ok;
    if (ok) out.side = std::move(side);
    return out;
}

}  // namespace matchvote
