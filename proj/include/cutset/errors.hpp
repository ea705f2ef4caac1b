#pragma once

#include <stdexcept>
#include <string>

namespace cutset {

/// An argument violates the documented precondition of an operation.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A request would exceed a configured size budget (materialization, 2^n DP).
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (profile arrays, family lines, table/cache CSV).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cutset
