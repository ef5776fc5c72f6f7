#pragma once

#include <stdexcept>
#include <string>

namespace cablefloer {

/// Bad user input: malformed text, or data that no thin knot can realize.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal invariant failed (d^2 != 0, non-integral grading, ...).
/// Seeing one of these means a bug upstream, not bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cablefloer
