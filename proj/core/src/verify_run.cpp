#include "matchvote/verify_run.hpp"

#include <algorithm>

#include "detail/rounds.hpp"
#include "matchvote/approval_winner.hpp"
#include "matchvote/errors.hpp"

namespace matchvote {

namespace {

void fail(RunCertificate& cert, int round, std::string reason) {
    cert.valid = false;
    cert.first_invalid = round;
    cert.reason = std::move(reason);
}

}  // namespace

RunCertificate verify_run(const MatchingElection& e, RuleTag rule, const std::vector<Matching>& sequence,
                          const std::optional<WeightSequence>& w) {
    if (rule != RuleTag::SeqThiele && rule != RuleTag::SeqPhragmen && rule != RuleTag::RuleX)
        throw ValidationError("verify-run supports seq-thiele, seq-phragmen and rule-x, not " + to_string(rule));
    RunCertificate cert;
    cert.rule = rule;
    const auto weights = w.value_or(WeightSequence::pav());
    const auto n = static_cast<std::size_t>(e.n());
    std::vector<int> h(n, 0);
    std::vector<Rational> beta(n);
    std::vector<Rational> budgets(n, Rational(e.k(), e.n()));

    for (std::size_t i = 0; i < sequence.size(); ++i) {
        const int round = static_cast<int>(i);
        const Matching& given = sequence[i];
        if (!is_candidate(e, given)) {
            fail(cert, round, "round " + std::to_string(round + 1) + ": " + to_string(e, given) + " is not a candidate");
            return cert;
        }
        const auto supporters = approvers(e, given);
        Rational optimum;
        Rational attained;
        switch (rule) {
            case RuleTag::SeqThiele: {
                AgentWeighting omega(n);
                for (std::size_t a = 0; a < n; ++a) omega[a] = weights(h[a] + 1);
                optimum = approval_weight(e, omega, weighted_approval_winner(e, omega));
                attained = approval_weight(e, omega, given);
                for (AgentId a : supporters) ++h[static_cast<std::size_t>(a)];
                break;
            }
            case RuleTag::SeqPhragmen: {
                optimum = detail::phragmen_time(e, beta);
                attained = detail::supporters_time(beta, supporters);
                for (auto& b : beta) b += attained;
                for (AgentId a : supporters) beta[static_cast<std::size_t>(a)] = Rational(0);
                break;
            }
            default: {
                const auto q = detail::rule_x_price(e, budgets);
                const auto price = detail::supporters_price(budgets, supporters);
                if (!q || !price) {
                    cert.optima.push_back(q.value_or(Rational(-1)));
                    cert.attained.push_back(price.value_or(Rational(-1)));
                    fail(cert, round,
                         "round " + std::to_string(round + 1) + ": " +
                             (q ? "chosen candidate is unaffordable" : "no candidate is affordable"));
                    return cert;
                }
                optimum = *q;
                attained = *price;
                for (AgentId a : supporters) {
                    auto& b = budgets[static_cast<std::size_t>(a)];
                    b -= std::min(b, attained);
                }
                break;
            }
        }
        cert.optima.push_back(optimum);
        cert.attained.push_back(attained);
        if (attained != optimum) {
            fail(cert, round,
                 "round " + std::to_string(round + 1) + ": " + to_string(e, given) + " attains " + attained.to_string() +
                     " but the optimum is " + optimum.to_string());
            return cert;
        }
    }
    return cert;
}

}  // namespace matchvote
