#include "matchvote/enumerate.hpp"

#include <algorithm>

#include "matchvote/errors.hpp"
#include "matchvote/scoring.hpp"

namespace matchvote {

namespace {

void all_matchings(std::size_t next, const std::vector<Pair>& edges, std::vector<char>& used, std::vector<Pair>& current,
                   std::vector<std::vector<Pair>>& out) {
    if (next == edges.size()) {
        out.push_back(current);
        return;
    }
    all_matchings(next + 1, edges, used, current, out);
    const auto [u, v] = edges[next];
    if (used[static_cast<std::size_t>(u)] || used[static_cast<std::size_t>(v)]) return;
    used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 1;
    current.push_back(edges[next]);
    all_matchings(next + 1, edges, used, current, out);
    current.pop_back();
    used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = 0;
}

bool strict_subset(const std::vector<AgentId>& a, const std::vector<AgentId>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

std::vector<Matching> enumerate_candidates(const MatchingElection& e, int edge_guard) {
    const auto& edges = e.view_edges();
    if (static_cast<int>(edges.size()) > edge_guard)
        throw GuardError("candidate enumeration refused: " + std::to_string(edges.size()) + " approval edges exceed the guard of " +
                         std::to_string(edge_guard) + " (exhaustive search is exponential in the edge count)");
    std::vector<std::vector<Pair>> matchings;
    std::vector<char> used(static_cast<std::size_t>(e.n()), 0);
    std::vector<Pair> current;
    all_matchings(0, edges, used, current, matchings);

    std::vector<std::vector<AgentId>> sets;
    sets.reserve(matchings.size());
    for (const auto& m : matchings) sets.push_back(approvers(e, Matching(m)));

    // An approver set is Pareto optimal iff no maximal set strictly contains it.
    std::vector<std::vector<AgentId>> distinct = sets;
    std::sort(distinct.begin(), distinct.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
    });
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    std::vector<std::vector<AgentId>> maximal;
    for (const auto& s : distinct) {
        const bool dominated = std::any_of(maximal.begin(), maximal.end(), [&](const auto& m) { return strict_subset(s, m); });
        if (!dominated) maximal.push_back(s);
    }
    std::sort(maximal.begin(), maximal.end());

    std::vector<Matching> out;
    for (std::size_t i = 0; i < matchings.size(); ++i)
        if (std::binary_search(maximal.begin(), maximal.end(), sets[i])) out.emplace_back(matchings[i]);
    std::sort(out.begin(), out.end());
    return out;
}

long long multiset_count(long long count, int k, long long limit) {
    if (k == 0) return 1;
    if (count == 0) return 0;
    // C(count + k - 1, k) built incrementally; each partial product is an exact binomial.
    long double approx = 1;
    long long exact = 1;
    for (int i = 1; i <= k; ++i) {
        approx = approx * static_cast<long double>(count - 1 + i) / i;
        if (approx > static_cast<long double>(limit)) return limit + 1;
        exact = exact * (count - 1 + i) / i;
    }
    return exact;
}

ScoredCommittee oracle_optimal_committee(const MatchingElection& e, const WeightSequence& w, int k) {
    if (k <= 0) throw ValidationError("k: committee size must be positive");
    const auto cands = enumerate_candidates(e);
    const long long total = multiset_count(static_cast<long long>(cands.size()), k);
    if (total > kMultisetGuard)
        throw GuardError("exhaustive committee search refused: more than " + std::to_string(kMultisetGuard) +
                         " size-" + std::to_string(k) +
                         " multisets (w-Thiele winner determination is NP-hard on general matching elections, already for k = 2)");

    std::vector<std::vector<AgentId>> supporters;
    for (const auto& c : cands) supporters.push_back(approvers(e, c));
    std::vector<Rational> prefix(static_cast<std::size_t>(k) + 1);
    for (int i = 1; i <= k; ++i) prefix[static_cast<std::size_t>(i)] = prefix[static_cast<std::size_t>(i - 1)] + w(i);

    std::vector<int> pick(static_cast<std::size_t>(k), 0);
    std::vector<int> best_pick;
    Rational best;
    std::vector<int> h(static_cast<std::size_t>(e.n()));
    const int count = static_cast<int>(cands.size());
    while (true) {
        std::fill(h.begin(), h.end(), 0);
        for (int i : pick)
            for (AgentId a : supporters[static_cast<std::size_t>(i)]) ++h[static_cast<std::size_t>(a)];
        Rational score;
        for (int x : h) score += prefix[static_cast<std::size_t>(x)];
        if (best_pick.empty() || best < score) {
            best = score;
            best_pick = pick;
        }
        // Next non-decreasing index tuple.
        int pos = k - 1;
        while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == count - 1) --pos;
        if (pos < 0) break;
        const int value = pick[static_cast<std::size_t>(pos)] + 1;
        for (int j = pos; j < k; ++j) pick[static_cast<std::size_t>(j)] = value;
    }
    ScoredCommittee out;
    for (int i : best_pick) out.committee.add(cands[static_cast<std::size_t>(i)]);
    out.score = best;
    return out;
}

}  // namespace matchvote
