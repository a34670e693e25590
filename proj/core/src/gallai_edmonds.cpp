#include "matchvote/gallai_edmonds.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace matchvote {

std::vector<Pair> induced_edges(const std::vector<Pair>& edges, const std::vector<char>& keep) {
    std::vector<Pair> out;
    for (const auto& [a, b] : edges)
        if (keep[static_cast<std::size_t>(a)] && keep[static_cast<std::size_t>(b)]) out.emplace_back(a, b);
    return out;
}

namespace {

int matching_size(int nodes, const std::vector<Pair>& edges) {
    return static_cast<int>(max_cardinality_matching(nodes, edges).size());
}

void require(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("gallai_edmonds: ") + what);
}

}  // namespace

GallaiEdmondsDecomposition gallai_edmonds(int nodes, const std::vector<Pair>& raw_edges) {
    std::set<Pair> unique;
    for (auto [a, b] : raw_edges) {
        if (a == b || a < 0 || b < 0 || a >= nodes || b >= nodes) throw std::invalid_argument("gallai_edmonds: invalid edge");
        unique.emplace(std::min(a, b), std::max(a, b));
    }
    const std::vector<Pair> edges(unique.begin(), unique.end());
    const auto sz = static_cast<std::size_t>(nodes);

    GallaiEdmondsDecomposition out;
    const Matching maximum = max_cardinality_matching(nodes, edges);
    out.nu = static_cast<int>(maximum.size());

    std::vector<char> in_y(sz, 0);
    for (int v = 0; v < nodes; ++v) {
        std::vector<char> keep(sz, 1);
        keep[static_cast<std::size_t>(v)] = 0;
        if (matching_size(nodes, induced_edges(edges, keep)) == out.nu) {
            in_y[static_cast<std::size_t>(v)] = 1;
            out.y.push_back(v);
        }
    }
    std::vector<char> in_x(sz, 0);
    std::vector<std::vector<int>> adj(sz);
    for (const auto& [a, b] : edges) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
        if (in_y[static_cast<std::size_t>(a)] && !in_y[static_cast<std::size_t>(b)]) in_x[static_cast<std::size_t>(b)] = 1;
        if (in_y[static_cast<std::size_t>(b)] && !in_y[static_cast<std::size_t>(a)]) in_x[static_cast<std::size_t>(a)] = 1;
    }
    std::vector<char> in_w(sz, 0);
    for (int v = 0; v < nodes; ++v) {
        if (in_x[static_cast<std::size_t>(v)]) {
            out.x.push_back(v);
        } else if (!in_y[static_cast<std::size_t>(v)]) {
            out.w.push_back(v);
            in_w[static_cast<std::size_t>(v)] = 1;
        }
    }

    std::vector<int> component_of(sz, -1);
    for (int s : out.y) {
        if (component_of[static_cast<std::size_t>(s)] != -1) continue;
        const int id = static_cast<int>(out.components.size());
        std::vector<int> members{s};
        component_of[static_cast<std::size_t>(s)] = id;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            const int v = queue.front();
            queue.pop_front();
            for (int u : adj[static_cast<std::size_t>(v)]) {
                if (!in_y[static_cast<std::size_t>(u)] || component_of[static_cast<std::size_t>(u)] != -1) continue;
                component_of[static_cast<std::size_t>(u)] = id;
                members.push_back(u);
                queue.push_back(u);
            }
        }
        std::sort(members.begin(), members.end());
        out.components.push_back(std::move(members));
    }

    require(out.w.size() % 2 == 0 && matching_size(nodes, induced_edges(edges, in_w)) * 2 == static_cast<int>(out.w.size()),
            "induced subgraph on w has no perfect matching");
    for (const auto& comp : out.components) {
        for (int v : comp) {
            std::vector<char> keep(sz, 0);
            for (int u : comp) keep[static_cast<std::size_t>(u)] = u != v;
            require(matching_size(nodes, induced_edges(edges, keep)) * 2 == static_cast<int>(comp.size()) - 1,
                    "component is not factor-critical");
        }
    }
    std::vector<char> used(out.components.size(), 0);
    for (int v : out.x) {
        const int partner = maximum.partner(v);
        require(partner >= 0 && in_y[static_cast<std::size_t>(partner)], "x vertex not matched into y");
        auto& flag = used[static_cast<std::size_t>(component_of[static_cast<std::size_t>(partner)])];
        require(!flag, "two x vertices matched into one component");
        flag = 1;
    }
    require(2 * out.nu == nodes - static_cast<int>(out.components.size()) + static_cast<int>(out.x.size()),
            "matching size disagrees with the deficiency formula");
    return out;
}

GallaiEdmondsDecomposition gallai_edmonds(const WeightedGraph& g) {
    std::vector<Pair> edges;
    for (const auto& e : g.edges()) edges.emplace_back(e.u, e.v);
    return gallai_edmonds(g.nodes(), edges);
}

}  // namespace matchvote
