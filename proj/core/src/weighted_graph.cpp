#include "matchvote/weighted_graph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "detail/blossom.hpp"
#include "detail/lex_weight.hpp"
#include "detail/tiered_matching.hpp"

namespace matchvote {

void WeightedGraph::add_edge(int u, int v, Rational weight) {
    if (u == v) throw std::invalid_argument("weighted graph: self-loop");
    if (u < 0 || v < 0 || u >= nodes_ || v >= nodes_) throw std::invalid_argument("weighted graph: endpoint out of range");
    if (weight.sign() < 0) throw std::invalid_argument("weighted graph: negative weight");
    edges_.push_back({u, v, std::move(weight)});
}

namespace {

std::map<Pair, Rational> heaviest(const WeightedGraph& g) {
    std::map<Pair, Rational> best;
    for (const auto& e : g.edges()) {
        const Pair key{std::min(e.u, e.v), std::max(e.u, e.v)};
        auto [it, inserted] = best.emplace(key, e.weight);
        if (!inserted && it->second < e.weight) it->second = e.weight;
    }
    return best;
}

// Tie part per edge: tier * 2^m plus a distinct bonus 2^(m-1-i) for the i-th
// canonical edge. Bonuses sum below 2^m, so tiers dominate them.
template <class Int>
Matching solve(int nodes, const std::vector<detail::TieredEdge>& edges) {
    using W = detail::LexWeight<Int>;
    const int m = static_cast<int>(edges.size());
    const Int unit = Int(1) << m;
    std::vector<detail::BlossomEdge<W>> list;
    list.reserve(edges.size());
    Int bonus = Int(1) << (m - 1);
    for (const auto& e : edges) {
        list.push_back({e.pair.first, e.pair.second, W{e.primary, Int(unit * e.tier + bonus)}});
        bonus >>= 1;
    }
    const auto mate = detail::Blossom<W>(nodes, std::move(list)).solve();
    std::vector<Pair> pairs;
    for (int v = 0; v < nodes; ++v)
        if (mate[static_cast<std::size_t>(v)] > v) pairs.emplace_back(v, mate[static_cast<std::size_t>(v)]);
    return Matching(std::move(pairs));
}

int bit_width(long long v) {
    int bits = 0;
    while (v > 0) {
        ++bits;
        v >>= 1;
    }
    return bits;
}

}  // namespace

namespace detail {

Matching max_weight_matching_tiered(int nodes, std::vector<TieredEdge> edges) {
    std::erase_if(edges, [](const TieredEdge& e) { return e.primary.sign() == 0 && e.tier == 0; });
    if (edges.empty()) return Matching{};
    std::sort(edges.begin(), edges.end(), [](const TieredEdge& a, const TieredEdge& b) { return a.pair < b.pair; });
    long long tiers = 0;
    for (const auto& e : edges) {
        if (e.tier < 0) throw std::invalid_argument("tiered matching: negative tier");
        tiers += e.tier;
    }
    // Tie parts of any matching stay below (tiers + 1) * 2^m; leave headroom for dual arithmetic.
    const int bits = static_cast<int>(edges.size()) + bit_width(tiers + 1);
    namespace mp = boost::multiprecision;
    if (bits <= 56) return solve<std::int64_t>(nodes, edges);
    if (bits <= 240) return solve<mp::int256_t>(nodes, edges);
    if (bits <= 1000) return solve<mp::int1024_t>(nodes, edges);
    return solve<mp::cpp_int>(nodes, edges);
}

}  // namespace detail

Matching max_weight_matching(const WeightedGraph& g) {
    std::vector<detail::TieredEdge> edges;
    for (auto& [pair, weight] : heaviest(g)) edges.push_back({pair, weight, 0});
    return detail::max_weight_matching_tiered(g.nodes(), std::move(edges));
}

Rational matching_weight(const WeightedGraph& g, const Matching& m) {
    const auto best = heaviest(g);
    Rational total;
    for (const auto& p : m.pairs()) {
        const auto it = best.find(p);
        if (it == best.end()) throw std::invalid_argument("matching uses a pair that is not an edge");
        total += it->second;
    }
    return total;
}

Matching max_cardinality_matching(int nodes, const std::vector<Pair>& edges) {
    WeightedGraph g(nodes);
    for (const auto& [u, v] : edges) g.add_edge(u, v, Rational(1));
    return max_weight_matching(g);
}

}  // namespace matchvote
