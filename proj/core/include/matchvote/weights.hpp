#pragma once

#include <string>
#include <vector>

#include "matchvote/rational.hpp"

namespace matchvote {

/// Non-increasing Thiele weights with w_1 = 1.
class WeightSequence {
public:
    static WeightSequence pav();
    static WeightSequence av();
    static WeightSequence cc();
    /// Explicit prefix, padded with zeros. Throws ValidationError unless
    /// w_1 = 1 and the prefix is non-increasing and non-negative.
    static WeightSequence custom(std::vector<Rational> prefix);

    /// w_i for i >= 1.
    [[nodiscard]] Rational operator()(int i) const;
    /// Whether w_i > w_{i+1} for every i.
    [[nodiscard]] bool strict() const { return kind_ == Kind::Pav; }
    [[nodiscard]] std::string name() const;

private:
    enum class Kind { Pav, Av, Cc, Custom };
    explicit WeightSequence(Kind kind, std::vector<Rational> prefix = {}) : kind_(kind), prefix_(std::move(prefix)) {}

    Kind kind_;
    std::vector<Rational> prefix_;
};

}  // namespace matchvote
