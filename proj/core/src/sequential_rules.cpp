#include "matchvote/sequential_rules.hpp"

#include <algorithm>
#include <stdexcept>

#include "detail/rounds.hpp"
#include "matchvote/approval_winner.hpp"
#include "matchvote/errors.hpp"
#include "matchvote/parametric_search.hpp"

namespace matchvote {

std::string to_string(RuleTag rule) {
    switch (rule) {
        case RuleTag::SeqThiele: return "seq-thiele";
        case RuleTag::SeqPhragmen: return "seq-phragmen";
        case RuleTag::RuleX: return "rule-x";
        case RuleTag::LsPav: return "ls-pav";
        case RuleTag::ExactThiele: return "exact-thiele";
    }
    return "unknown";
}

RuleTag parse_rule(std::string_view text) {
    for (RuleTag r : {RuleTag::SeqThiele, RuleTag::SeqPhragmen, RuleTag::RuleX, RuleTag::LsPav, RuleTag::ExactThiele})
        if (to_string(r) == text) return r;
    throw ValidationError("unknown rule '" + std::string(text) + "'");
}

namespace detail {

Rational supporters_time(const std::vector<Rational>& beta, const std::vector<AgentId>& supporters) {
    if (supporters.empty()) throw std::invalid_argument("candidate without supporters");
    Rational held;
    for (AgentId a : supporters) held += beta[static_cast<std::size_t>(a)];
    return (Rational(1) - held) / Rational(static_cast<std::int64_t>(supporters.size()));
}

std::optional<Rational> supporters_price(const std::vector<Rational>& budgets, const std::vector<AgentId>& supporters) {
    std::vector<Rational> b;
    b.reserve(supporters.size());
    for (AgentId a : supporters) b.push_back(budgets[static_cast<std::size_t>(a)]);
    std::sort(b.begin(), b.end());
    Rational paid;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const Rational q = (Rational(1) - paid) / Rational(static_cast<std::int64_t>(b.size() - i));
        if (q <= b[i]) return q;
        paid += b[i];
    }
    return std::nullopt;
}

Rational phragmen_time(const MatchingElection& e, const std::vector<Rational>& beta) {
    const CurveOracle f = [&](const Rational& t) {
        AgentWeighting omega(beta.size());
        for (std::size_t a = 0; a < beta.size(); ++a) omega[a] = beta[a] + t;
        const Matching c = weighted_approval_winner(e, omega);
        CurvePoint point;
        const auto supporters = approvers(e, c);
        for (AgentId a : supporters) point.line.intercept += beta[static_cast<std::size_t>(a)];
        point.line.slope = Rational(static_cast<std::int64_t>(supporters.size()));
        point.value = point.line.at(t);
        return point;
    };
    return first_crossing(f, Rational(1), Rational(0), f(Rational(0)), Rational(1), f(Rational(1)));
}

std::optional<Rational> rule_x_price(const MatchingElection& e, const std::vector<Rational>& budgets) {
    std::vector<Rational> points{Rational(0)};
    for (const auto& b : budgets)
        if (b.sign() > 0) points.push_back(b);
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    auto winner_at = [&](const Rational& q) {
        AgentWeighting omega(budgets.size());
        for (std::size_t a = 0; a < budgets.size(); ++a) omega[a] = std::min(budgets[a], q);
        const Matching c = weighted_approval_winner(e, omega);
        return std::make_pair(c, approval_weight(e, omega, c));
    };

    for (std::size_t j = 1; j < points.size(); ++j) {
        if (winner_at(points[j]).second < Rational(1)) continue;
        const Rational lo = points[j - 1];
        const Rational hi = points[j];
        // No budget lies strictly inside (lo, hi), so each candidate is affine here.
        const CurveOracle f = [&](const Rational& q) {
            const auto [c, value] = winner_at(q);
            CurvePoint point;
            point.value = value;
            std::int64_t slope = 0;
            for (AgentId a : approvers(e, c)) {
                const Rational& b = budgets[static_cast<std::size_t>(a)];
                if (b <= lo)
                    point.line.intercept += b;
                else
                    ++slope;
            }
            point.line.slope = Rational(slope);
            return point;
        };
        return first_crossing(f, Rational(1), lo, f(lo), hi, f(hi));
    }
    return std::nullopt;
}

}  // namespace detail

namespace {

Committee traced() { return Committee::from_trace({}); }

void require_dollar(const Rational& collected) {
    if (collected != Rational(1)) throw std::logic_error("round purchase did not collect exactly one dollar");
}

}  // namespace

RuleOutcome seq_thiele(const MatchingElection& e, const WeightSequence& w, int k) {
    if (k <= 0) throw ValidationError("k: committee size must be positive");
    RuleOutcome out;
    out.rule = RuleTag::SeqThiele;
    out.committee = traced();
    std::vector<int> h(static_cast<std::size_t>(e.n()), 0);
    for (int round = 0; round < k; ++round) {
        AgentWeighting omega(h.size());
        for (std::size_t a = 0; a < h.size(); ++a) omega[a] = w(h[a] + 1);
        const Matching c = weighted_approval_winner(e, omega);
        RoundRecord record;
        record.chosen = c;
        record.optimum = approval_weight(e, omega, c);
        for (AgentId a : approvers(e, c)) ++h[static_cast<std::size_t>(a)];
        out.committee.add(c);
        out.rounds.push_back(std::move(record));
    }
    return out;
}

RuleOutcome seq_phragmen(const MatchingElection& e, int k) {
    if (k <= 0) throw ValidationError("k: committee size must be positive");
    RuleOutcome out;
    out.rule = RuleTag::SeqPhragmen;
    out.committee = traced();
    std::vector<Rational> beta(static_cast<std::size_t>(e.n()));
    for (int round = 0; round < k; ++round) {
        const Rational t = detail::phragmen_time(e, beta);
        for (auto& b : beta) b += t;
        const Matching c = weighted_approval_winner(e, beta);
        require_dollar(approval_weight(e, beta, c));
        for (AgentId a : approvers(e, c)) beta[static_cast<std::size_t>(a)] = Rational(0);
        out.elapsed += t;
        out.committee.add(c);
        out.rounds.push_back({c, t, beta, {}, false});
    }
    return out;
}

RuleOutcome rule_x(const MatchingElection& e, int k, Completion completion) {
    if (k <= 0) throw ValidationError("k: committee size must be positive");
    RuleOutcome out;
    out.rule = RuleTag::RuleX;
    out.committee = traced();
    std::vector<Rational> budgets(static_cast<std::size_t>(e.n()), Rational(k, e.n()));
    while (out.committee.size() < k) {
        const auto q = detail::rule_x_price(e, budgets);
        if (!q) break;
        AgentWeighting omega(budgets.size());
        for (std::size_t a = 0; a < budgets.size(); ++a) omega[a] = std::min(budgets[a], *q);
        const Matching c = weighted_approval_winner(e, omega);
        require_dollar(approval_weight(e, omega, c));
        std::vector<Rational> payments(budgets.size());
        for (AgentId a : approvers(e, c)) {
            const auto i = static_cast<std::size_t>(a);
            payments[i] = omega[i];
            budgets[i] -= omega[i];
        }
        out.committee.add(c);
        out.rounds.push_back({c, *q, budgets, std::move(payments), false});
    }
    if (completion == Completion::Fill) {
        const AgentWeighting unit(static_cast<std::size_t>(e.n()), Rational(1));
        const Matching c = weighted_approval_winner(e, unit);
        while (out.committee.size() < k) {
            out.committee.add(c);
            out.rounds.push_back({c, approval_weight(e, unit, c), budgets, {}, true});
        }
    }
    return out;
}

Rational ls_pav_epsilon(int k) {
    if (k < 2) throw std::invalid_argument("ls_pav_epsilon requires k >= 2");
    return Rational(1, static_cast<std::int64_t>(2 * k - 1) * (k - 1) * k);
}

RuleOutcome ls_pav(const MatchingElection& e, int k, const std::optional<Committee>& initial) {
    if (k <= 0) throw ValidationError("k: committee size must be positive");
    const auto pav = WeightSequence::pav();
    RuleOutcome out;
    out.rule = RuleTag::LsPav;
    if (k == 1 && !initial) {
        const AgentWeighting unit(static_cast<std::size_t>(e.n()), Rational(1));
        const Matching c = weighted_approval_winner(e, unit);
        out.committee = traced();
        out.committee.add(c);
        out.rounds.push_back({c, approval_weight(e, unit, c), {}, {}, false});
        return out;
    }
    Committee current;
    if (initial) {
        if (initial->size() != k) throw ValidationError("initial committee size differs from k");
        current = Committee::from_counts({initial->counts().begin(), initial->counts().end()});
    } else {
        auto seed = seq_thiele(e, pav, k);
        out.rounds = std::move(seed.rounds);
        current = Committee::from_counts({seed.committee.counts().begin(), seed.committee.counts().end()});
    }
    if (k == 1) {
        out.committee = current;
        return out;
    }
    const Rational epsilon = ls_pav_epsilon(k);
    bool improved = true;
    while (improved) {
        improved = false;
        for (const Matching& c : current.support()) {
            auto counts = current.counts();
            if (--counts[c] == 0) counts.erase(c);
            const Committee reduced = Committee::from_counts({counts.begin(), counts.end()});
            const auto h = happiness(e, reduced);
            AgentWeighting omega(h.size());
            for (std::size_t a = 0; a < h.size(); ++a) omega[a] = pav(h[a] + 1);
            const Matching replacement = weighted_approval_winner(e, omega);
            if (approval_weight(e, omega, replacement) >= approval_weight(e, omega, c) + epsilon) {
                current = reduced;
                current.add(replacement);
                ++out.swaps;
                improved = true;
                break;
            }
        }
    }
    out.committee = current;
    return out;
}

}  // namespace matchvote
