#pragma once

#include <stdexcept>
#include <string>

namespace forge {

/// A hard size guard refused the input. Guards can be raised through
/// FORGE_GUARD_OVERRIDE, never silently truncated.
class GuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// The caller broke a documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exact search ran out of its node budget before reaching a verdict.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace forge
