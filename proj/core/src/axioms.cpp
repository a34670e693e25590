#include "matchvote/axioms.hpp"

#include <algorithm>
#include <set>

#include "matchvote/approval_winner.hpp"
#include "matchvote/enumerate.hpp"
#include "matchvote/errors.hpp"

namespace matchvote {

std::string to_string(Axiom axiom) {
    switch (axiom) {
        case Axiom::Ejr: return "ejr";
        case Axiom::Pjr: return "pjr";
        case Axiom::Core: return "core";
    }
    return "unknown";
}

Axiom parse_axiom(std::string_view text) {
    for (Axiom a : {Axiom::Ejr, Axiom::Pjr, Axiom::Core})
        if (to_string(a) == text) return a;
    throw ValidationError("unknown axiom '" + std::string(text) + "'");
}

namespace {

// |S| * k >= ell * n, i.e. |S| >= ell * n / k without rounding.
bool large_enough(std::int64_t size, int ell, const MatchingElection& e) {
    return size * e.k() >= static_cast<std::int64_t>(ell) * e.n();
}

std::vector<AgentId> marked_approvers(const MatchingElection& e, const Matching& c, const std::vector<char>& marked) {
    std::vector<AgentId> out;
    for (AgentId a : approvers(e, c))
        if (marked[static_cast<std::size_t>(a)]) out.push_back(a);
    return out;
}

// Smallest prefix of the approvers that still meets the size bound.
std::vector<AgentId> witness_group(const MatchingElection& e, std::vector<AgentId> pool, int ell) {
    const std::int64_t need = (static_cast<std::int64_t>(ell) * e.n() + e.k() - 1) / e.k();
    pool.resize(std::min(pool.size(), static_cast<std::size_t>(need)));
    return pool;
}

// Best candidate for the marked agents, by one unit-weight oracle call.
Matching best_for(const MatchingElection& e, const std::vector<char>& marked) {
    AgentWeighting omega(marked.size());
    for (std::size_t a = 0; a < marked.size(); ++a) omega[a] = Rational(marked[a] ? 1 : 0);
    return weighted_approval_winner(e, omega);
}

}  // namespace

AxiomVerdict check_ejr(const MatchingElection& e, const Committee& w) {
    AxiomVerdict out;
    out.axiom = Axiom::Ejr;
    const auto h = happiness(e, w);
    for (int ell = 1; ell <= e.k(); ++ell) {
        std::vector<char> marked(h.size(), 0);
        bool any = false;
        for (std::size_t a = 0; a < h.size(); ++a) {
            marked[a] = h[a] < ell;
            any = any || marked[a];
        }
        if (!any) continue;
        const Matching c = best_for(e, marked);
        const auto pool = marked_approvers(e, c, marked);
        if (!large_enough(static_cast<std::int64_t>(pool.size()), ell, e)) continue;
        out.satisfied = false;
        out.ell = ell;
        out.group = witness_group(e, pool, ell);
        out.candidate = c;
        out.threshold = Rational(ell) * Rational(e.n()) / Rational(e.k());
        return out;
    }
    return out;
}

AxiomVerdict check_pjr(const MatchingElection& e, const Committee& w) {
    AxiomVerdict out;
    out.axiom = Axiom::Pjr;
    const auto support = w.support();
    const auto d = support.size();
    if (d >= 40 || (static_cast<long long>(1) << d) * e.k() > kMultisetGuard)
        throw GuardError("PJR check refused: 2^" + std::to_string(d) + " member subsets times k exceed " +
                         std::to_string(kMultisetGuard) + " (deciding PJR for matching elections is coNP-complete)");

    std::vector<std::vector<char>> approves_member(d, std::vector<char>(static_cast<std::size_t>(e.n()), 0));
    for (std::size_t i = 0; i < d; ++i)
        for (AgentId a : approvers(e, support[i])) approves_member[i][static_cast<std::size_t>(a)] = 1;

    int best_ell = e.k() + 1;
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << d); ++subset) {
        int copies = 0;
        for (std::size_t i = 0; i < d; ++i)
            if (subset >> i & 1u) copies += w.count(support[i]);
        const int ell = copies + 1;
        if (ell > e.k() || ell >= best_ell) continue;
        // Agents whose approved members all lie inside the subset.
        std::vector<char> marked(static_cast<std::size_t>(e.n()), 1);
        bool any = false;
        for (std::size_t a = 0; a < marked.size(); ++a) {
            for (std::size_t i = 0; i < d; ++i)
                if (!(subset >> i & 1u) && approves_member[i][a]) marked[a] = 0;
            any = any || marked[a];
        }
        if (!any) continue;
        const Matching c = best_for(e, marked);
        const auto pool = marked_approvers(e, c, marked);
        if (!large_enough(static_cast<std::int64_t>(pool.size()), ell, e)) continue;
        best_ell = ell;
        out.satisfied = false;
        out.ell = ell;
        out.group = witness_group(e, pool, ell);
        out.candidate = c;
        out.threshold = Rational(ell) * Rational(e.n()) / Rational(e.k());
    }
    return out;
}

AxiomVerdict check_core(const MatchingElection& e, const Committee& w) {
    AxiomVerdict out;
    out.axiom = Axiom::Core;
    const auto cands = enumerate_candidates(e);
    const auto h = happiness(e, w);
    std::vector<std::vector<AgentId>> supporters;
    for (const auto& c : cands) supporters.push_back(approvers(e, c));
    const int count = static_cast<int>(cands.size());
    std::vector<int> h2(h.size());
    // The guard is charged per level, so a violation at small ell is still reported.
    long long total = 0;
    for (int ell = 1; ell <= e.k(); ++ell) {
        total += multiset_count(static_cast<long long>(count), ell);
        if (total > kMultisetGuard)
            throw GuardError("core check refused: more than " + std::to_string(kMultisetGuard) +
                             " deviating committees (deciding core stability for matching elections is coNP-hard)");
        std::vector<int> pick(static_cast<std::size_t>(ell), 0);
        while (true) {
            std::fill(h2.begin(), h2.end(), 0);
            for (int i : pick)
                for (AgentId a : supporters[static_cast<std::size_t>(i)]) ++h2[static_cast<std::size_t>(a)];
            std::vector<AgentId> group;
            for (std::size_t a = 0; a < h.size(); ++a)
                if (h2[a] > h[a]) group.push_back(static_cast<AgentId>(a));
            if (!group.empty() && large_enough(static_cast<std::int64_t>(group.size()), ell, e)) {
                out.satisfied = false;
                out.ell = ell;
                out.group = std::move(group);
                Committee deviation;
                for (int i : pick) deviation.add(cands[static_cast<std::size_t>(i)]);
                out.deviation = deviation;
                out.threshold = Rational(ell) * Rational(e.n()) / Rational(e.k());
                return out;
            }
            int pos = ell - 1;
            while (pos >= 0 && pick[static_cast<std::size_t>(pos)] == count - 1) --pos;
            if (pos < 0) break;
            const int value = pick[static_cast<std::size_t>(pos)] + 1;
            for (int j = pos; j < ell; ++j) pick[static_cast<std::size_t>(j)] = value;
        }
    }
    return out;
}

bool verify_blocking(const MatchingElection& e, const Committee& w, const std::vector<AgentId>& group,
                     const Committee& deviation) {
    const int ell = deviation.size();
    if (group.empty() || ell < 1 || ell > e.k()) return false;
    const std::set<AgentId> distinct(group.begin(), group.end());
    if (distinct.size() != group.size() || *distinct.begin() < 0 || *distinct.rbegin() >= e.n()) return false;
    if (!large_enough(static_cast<std::int64_t>(group.size()), ell, e)) return false;
    for (const auto& m : deviation.support())
        if (!is_candidate(e, m)) return false;
    const auto before = happiness(e, w);
    const auto after = happiness(e, deviation);
    return std::all_of(group.begin(), group.end(), [&](AgentId a) {
        return after[static_cast<std::size_t>(a)] > before[static_cast<std::size_t>(a)];
    });
}

}  // namespace matchvote
