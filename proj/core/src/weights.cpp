#include "matchvote/weights.hpp"

#include <stdexcept>

#include "matchvote/errors.hpp"

namespace matchvote {

WeightSequence WeightSequence::pav() { return WeightSequence(Kind::Pav); }
WeightSequence WeightSequence::av() { return WeightSequence(Kind::Av); }
WeightSequence WeightSequence::cc() { return WeightSequence(Kind::Cc); }

WeightSequence WeightSequence::custom(std::vector<Rational> prefix) {
    if (prefix.empty() || prefix.front() != Rational(1)) throw ValidationError("weights: w_1 must equal 1");
    for (std::size_t i = 1; i < prefix.size(); ++i) {
        if (prefix[i] > prefix[i - 1]) throw ValidationError("weights: sequence must be non-increasing");
        if (prefix[i].sign() < 0) throw ValidationError("weights: entries must be non-negative");
    }
    return WeightSequence(Kind::Custom, std::move(prefix));
}

Rational WeightSequence::operator()(int i) const {
    if (i < 1) throw std::out_of_range("weight index must be at least 1");
    switch (kind_) {
        case Kind::Pav: return Rational(1, i);
        case Kind::Av: return Rational(1);
        case Kind::Cc: return i == 1 ? Rational(1) : Rational(0);
        case Kind::Custom:
            return static_cast<std::size_t>(i) <= prefix_.size() ? prefix_[static_cast<std::size_t>(i - 1)] : Rational(0);
    }
    return Rational(0);
}

std::string WeightSequence::name() const {
    switch (kind_) {
        case Kind::Pav: return "pav";
        case Kind::Av: return "av";
        case Kind::Cc: return "cc";
        case Kind::Custom: break;
    }
    std::string out = "custom(";
    for (std::size_t i = 0; i < prefix_.size(); ++i) out += (i ? "," : "") + prefix_[i].to_string();
    return out + ")";
}

}  // namespace matchvote
