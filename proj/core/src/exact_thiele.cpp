#include "matchvote/exact_thiele.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "matchvote/approval_winner.hpp"
#include "matchvote/classify.hpp"
#include "matchvote/enumerate.hpp"
#include "matchvote/errors.hpp"
#include "matchvote/weighted_graph.hpp"

namespace matchvote {

namespace {

using Multigraph = std::vector<std::vector<int>>;

// Perfect matching of a regular bipartite multigraph by augmenting paths,
// scanning right vertices in index order.
std::vector<int> perfect_matching(const Multigraph& mult) {
    const auto s = mult.size();
    std::vector<int> match_right(s, -1);
    std::vector<char> visited;
    std::function<bool(std::size_t)> augment = [&](std::size_t l) {
        for (std::size_t r = 0; r < s; ++r) {
            if (mult[l][r] == 0 || visited[r]) continue;
            visited[r] = 1;
            if (match_right[r] == -1 || augment(static_cast<std::size_t>(match_right[r]))) {
                match_right[r] = static_cast<int>(l);
                return true;
            }
        }
        return false;
    };
    for (std::size_t l = 0; l < s; ++l) {
        visited.assign(s, 0);
        if (!augment(l)) throw std::logic_error("bipartite_thiele: regular multigraph without a perfect matching");
    }
    std::vector<int> match_left(s, -1);
    for (std::size_t r = 0; r < s; ++r) match_left[static_cast<std::size_t>(match_right[r])] = static_cast<int>(r);
    return match_left;
}

}  // namespace

Committee bipartite_thiele(const MatchingElection& e, const WeightSequence& w, int k) {
    if (k <= 0) throw ValidationError("k: committee size must be positive");
    const ElectionClass cls = classify(e);
    if (!cls.bipartite) throw ValidationError("bipartite_thiele requires a bipartite election");

    // Padded sides; entries >= n are dummies.
    std::vector<int> left;
    std::vector<int> right;
    for (AgentId a = 0; a < e.n(); ++a) (cls.side[static_cast<std::size_t>(a)] == 0 ? left : right).push_back(a);
    int next_dummy = e.n();
    while (left.size() < right.size()) left.push_back(next_dummy++);
    while (right.size() < left.size()) right.push_back(next_dummy++);
    const int agents = next_dummy;
    const auto s = left.size();

    // Meta-election: copy i of agent t is t*k + i.
    std::vector<std::string> names;
    std::vector<std::vector<AgentId>> approvals(static_cast<std::size_t>(agents * k));
    AgentWeighting omega(static_cast<std::size_t>(agents * k));
    for (int t = 0; t < agents; ++t)
        for (int i = 0; i < k; ++i) {
            names.push_back((t < e.n() ? e.name(t) : "dummy" + std::to_string(t - e.n() + 1)) + "#" + std::to_string(i + 1));
            if (t >= e.n()) continue;
            omega[static_cast<std::size_t>(t * k + i)] = w(i + 1);
            auto& set = approvals[static_cast<std::size_t>(t * k + i)];
            for (AgentId b : e.approvals(t))
                for (int j = 0; j < k; ++j) set.push_back(b * k + j);
        }
    const MatchingElection meta(std::move(names), std::move(approvals), 1);
    const Matching solved = weighted_approval_winner(meta, omega);
    const Rational optimum = approval_weight(meta, omega, solved);

    std::vector<int> partner(static_cast<std::size_t>(agents * k), -1);
    for (const auto& [a, b] : solved.pairs()) {
        partner[static_cast<std::size_t>(a)] = b;
        partner[static_cast<std::size_t>(b)] = a;
    }
    auto approving = [&](int copy) {
        const int p = partner[static_cast<std::size_t>(copy)];
        return p >= 0 && meta.approves(copy, p);
    };
    // Approving copies form a prefix; swapping partners between copies of one
    // agent never changes what the partners see.
    for (int t = 0; t < e.n(); ++t)
        for (int i = 0; i < k; ++i) {
            if (approving(t * k + i)) continue;
            for (int j = i + 1; j < k; ++j) {
                if (!approving(t * k + j)) continue;
                const int ci = t * k + i;
                const int cj = t * k + j;
                const int pi = partner[static_cast<std::size_t>(ci)];
                const int pj = partner[static_cast<std::size_t>(cj)];
                partner[static_cast<std::size_t>(ci)] = pj;
                partner[static_cast<std::size_t>(cj)] = pi;
                if (pj >= 0) partner[static_cast<std::size_t>(pj)] = ci;
                if (pi >= 0) partner[static_cast<std::size_t>(pi)] = cj;
                break;
            }
        }
    Rational normalized;
    for (int c = 0; c < agents * k; ++c)
        if (approving(c)) normalized += omega[static_cast<std::size_t>(c)];
    if (normalized != optimum) throw std::logic_error("bipartite_thiele: prefix normalization changed the meta weight");

    std::vector<int> side_of(static_cast<std::size_t>(agents));
    std::vector<int> position(static_cast<std::size_t>(agents));
    for (std::size_t i = 0; i < s; ++i) {
        side_of[static_cast<std::size_t>(left[i])] = 0;
        position[static_cast<std::size_t>(left[i])] = static_cast<int>(i);
        side_of[static_cast<std::size_t>(right[i])] = 1;
        position[static_cast<std::size_t>(right[i])] = static_cast<int>(i);
    }
    std::vector<int> free_left;
    std::vector<int> free_right;
    for (int c = 0; c < agents * k; ++c)
        if (partner[static_cast<std::size_t>(c)] < 0) (side_of[static_cast<std::size_t>(c / k)] == 0 ? free_left : free_right).push_back(c);
    if (free_left.size() != free_right.size()) throw std::logic_error("bipartite_thiele: unbalanced unmatched copies");
    for (std::size_t i = 0; i < free_left.size(); ++i) {
        partner[static_cast<std::size_t>(free_left[i])] = free_right[i];
        partner[static_cast<std::size_t>(free_right[i])] = free_left[i];
    }

    Multigraph mult(s, std::vector<int>(s, 0));
    for (int c = 0; c < agents * k; ++c) {
        const int t = c / k;
        if (side_of[static_cast<std::size_t>(t)] != 0) continue;
        const int u = partner[static_cast<std::size_t>(c)] / k;
        if (side_of[static_cast<std::size_t>(u)] != 1) throw std::logic_error("bipartite_thiele: copy matched within a side");
        ++mult[static_cast<std::size_t>(position[static_cast<std::size_t>(t)])][static_cast<std::size_t>(position[static_cast<std::size_t>(u)])];
    }
    for (std::size_t l = 0; l < s; ++l) {
        int degree = 0;
        for (std::size_t r = 0; r < s; ++r) degree += mult[l][r];
        if (degree != k) throw std::logic_error("bipartite_thiele: collapsed multigraph is not k-regular");
    }

    Committee out;
    for (int round = 0; round < k; ++round) {
        const auto match = perfect_matching(mult);
        std::vector<Pair> pairs;
        for (std::size_t l = 0; l < s; ++l) {
            const auto r = static_cast<std::size_t>(match[l]);
            --mult[l][r];
            const int a = left[l];
            const int b = right[r];
            if (a < e.n() && b < e.n() && (e.approves(a, b) || e.approves(b, a))) pairs.emplace_back(a, b);
        }
        Matching m(std::move(pairs));
        if (!is_candidate(e, m)) m = pareto_repair(e, m);
        out.add(m);
    }
    return out;
}

SymmetricReduction symmetric_to_bipartite(const MatchingElection& e) {
    if (!classify(e).symmetric) throw ValidationError("symmetric_to_bipartite requires a symmetric election");
    const auto n = static_cast<std::size_t>(e.n());
    SymmetricReduction r{e, gallai_edmonds(e.n(), e.view_edges()), std::nullopt, {}, {}, {}, {}};
    const auto& ge = r.decomposition;

    r.component_of.assign(n, -1);
    for (std::size_t c = 0; c < ge.components.size(); ++c)
        for (int v : ge.components[c]) r.component_of[static_cast<std::size_t>(v)] = static_cast<int>(c);

    std::vector<char> in_w(n, 0);
    for (int v : ge.w) in_w[static_cast<std::size_t>(v)] = 1;
    r.w_matching = max_cardinality_matching(e.n(), induced_edges(e.view_edges(), in_w));

    r.to_psi.assign(n, -1);
    std::vector<std::string> names;
    for (int v : ge.y) {
        r.to_psi[static_cast<std::size_t>(v)] = static_cast<AgentId>(r.to_original.size());
        r.to_original.push_back(v);
        names.push_back(e.name(v));
    }
    for (int v : ge.x) {
        r.to_psi[static_cast<std::size_t>(v)] = static_cast<AgentId>(r.to_original.size());
        r.to_original.push_back(v);
        names.push_back(e.name(v));
    }
    std::vector<int> dummy_component;
    for (std::size_t c = 0; c < ge.components.size(); ++c)
        for (std::size_t j = 0; j + 1 < ge.components[c].size(); ++j) {
            std::string name = "dummy" + std::to_string(c + 1) + "." + std::to_string(j + 1);
            while (std::find(names.begin(), names.end(), name) != names.end()) name += "'";
            names.push_back(std::move(name));
            r.to_original.push_back(-1);
            dummy_component.push_back(static_cast<int>(c));
        }

    std::vector<std::vector<AgentId>> approvals(names.size());
    bool any = false;
    auto link = [&](AgentId a, AgentId b) {
        approvals[static_cast<std::size_t>(a)].push_back(b);
        approvals[static_cast<std::size_t>(b)].push_back(a);
        any = true;
    };
    for (const auto& [a, b] : e.view_edges()) {
        const bool ya = r.component_of[static_cast<std::size_t>(a)] >= 0;
        const bool yb = r.component_of[static_cast<std::size_t>(b)] >= 0;
        const bool xa = std::binary_search(ge.x.begin(), ge.x.end(), a);
        const bool xb = std::binary_search(ge.x.begin(), ge.x.end(), b);
        if ((ya && xb) || (xa && yb)) link(r.to_psi[static_cast<std::size_t>(a)], r.to_psi[static_cast<std::size_t>(b)]);
    }
    const auto first_dummy = ge.y.size() + ge.x.size();
    for (std::size_t d = 0; d < dummy_component.size(); ++d)
        for (int v : ge.components[static_cast<std::size_t>(dummy_component[d])])
            link(static_cast<AgentId>(first_dummy + d), r.to_psi[static_cast<std::size_t>(v)]);

    if (any && names.size() >= 2) r.psi.emplace(std::move(names), std::move(approvals), e.k());
    return r;
}

namespace {

using NearPerfectCache = std::map<std::pair<int, int>, Matching>;

Matching lift_with_cache(const SymmetricReduction& r, const Matching& psi_matching, NearPerfectCache& cache) {
    const auto& e = r.original;
    const auto& ge = r.decomposition;
    if (r.psi) {
        if (!is_candidate(*r.psi, psi_matching)) throw std::invalid_argument("lift_committee: member is not a candidate of the reduced election");
    } else if (!psi_matching.empty()) {
        throw std::invalid_argument("lift_committee: degenerate reduction admits only the empty matching");
    }

    std::vector<Pair> pairs(r.w_matching.pairs());
    std::vector<int> designated(ge.components.size(), -1);
    std::vector<char> psi_matched(static_cast<std::size_t>(e.n()), 0);
    for (const auto& [p, q] : psi_matching.pairs()) {
        const AgentId a = r.to_original[static_cast<std::size_t>(p)];
        const AgentId b = r.to_original[static_cast<std::size_t>(q)];
        if (a >= 0) psi_matched[static_cast<std::size_t>(a)] = 1;
        if (b >= 0) psi_matched[static_cast<std::size_t>(b)] = 1;
        if (a < 0 || b < 0) continue;
        pairs.emplace_back(a, b);
        const AgentId y = r.component_of[static_cast<std::size_t>(a)] >= 0 ? a : b;
        auto& slot = designated[static_cast<std::size_t>(r.component_of[static_cast<std::size_t>(y)])];
        if (slot != -1) throw std::invalid_argument("lift_committee: two agents of one component matched outside it");
        slot = y;
    }
    for (std::size_t c = 0; c < ge.components.size(); ++c) {
        if (designated[c] == -1) {
            for (int v : ge.components[c]) {
                if (psi_matched[static_cast<std::size_t>(v)]) continue;
                if (designated[c] != -1) throw std::invalid_argument("lift_committee: component leaves two agents unmatched");
                designated[c] = v;
            }
            if (designated[c] == -1) throw std::invalid_argument("lift_committee: component has no designated agent");
        }
        const auto key = std::make_pair(static_cast<int>(c), designated[c]);
        auto it = cache.find(key);
        if (it == cache.end()) {
            std::vector<char> keep(static_cast<std::size_t>(e.n()), 0);
            for (int v : ge.components[c]) keep[static_cast<std::size_t>(v)] = v != designated[c];
            it = cache.emplace(key, max_cardinality_matching(e.n(), induced_edges(e.view_edges(), keep))).first;
        }
        for (const auto& p : it->second.pairs()) pairs.push_back(p);
    }
    return Matching(std::move(pairs));
}

}  // namespace

Matching lift_matching(const SymmetricReduction& r, const Matching& psi_matching) {
    NearPerfectCache cache;
    return lift_with_cache(r, psi_matching, cache);
}

Committee lift_committee(const SymmetricReduction& r, const Committee& psi_committee) {
    NearPerfectCache cache;
    Committee out;
    for (const auto& [m, count] : psi_committee.counts()) out.add(lift_with_cache(r, m, cache), count);
    return out;
}

Committee exact_thiele(const MatchingElection& e, const WeightSequence& w, int k) {
    if (k <= 0) throw ValidationError("k: committee size must be positive");
    const ElectionClass cls = classify(e);
    if (cls.bipartite) return bipartite_thiele(e, w, k);
    if (cls.symmetric) {
        const auto r = symmetric_to_bipartite(e);
        if (!r.psi) {
            Committee out;
            out.add(lift_matching(r, Matching{}), k);
            return out;
        }
        return lift_committee(r, bipartite_thiele(*r.psi, w, k));
    }
    return oracle_optimal_committee(e, w, k).committee;
}

}  // namespace matchvote
