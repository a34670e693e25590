#include "matchvote/scoring.hpp"

#include <algorithm>

namespace matchvote {

Rational thiele_total(const WeightSequence& w, const std::vector<int>& happiness) {
    const int top = happiness.empty() ? 0 : *std::max_element(happiness.begin(), happiness.end());
    std::vector<Rational> prefix(static_cast<std::size_t>(top) + 1);
    for (int i = 1; i <= top; ++i) prefix[static_cast<std::size_t>(i)] = prefix[static_cast<std::size_t>(i - 1)] + w(i);
    Rational total;
    for (int h : happiness) total += prefix[static_cast<std::size_t>(h)];
    return total;
}

ThieleScore thiele_score(const MatchingElection& e, const WeightSequence& w, const Committee& committee) {
    ThieleScore out;
    out.happiness = happiness(e, committee);
    out.total = thiele_total(w, out.happiness);
    return out;
}

}  // namespace matchvote
