#pragma once

#include <stdexcept>

namespace lra {

// Malformed input: inconsistent dimensions, unparsable rationals, bad JSON
// shape. The CLI maps this to exit code 2.
struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Well-formed input that violates a documented mathematical precondition,
// e.g. a twist that is not a 2-cocycle where one is required. The CLI maps
// this to exit code 1.
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace lra
