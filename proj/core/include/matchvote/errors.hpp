#pragma once

#include <stdexcept>
#include <string>

namespace matchvote {

/// Malformed serialized input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a model invariant.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Refusal to run an exponential search past its size limit.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace matchvote
