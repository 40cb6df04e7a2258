#pragma once

#include <stdexcept>

namespace mlur {

/// Bad caller-supplied data: wrong dimensions, out-of-range parameters,
/// malformed state specs. The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computed result broke an invariant that valid inputs guarantee.
/// Signals a numeric bug; the CLI maps this to exit code 3.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mlur
