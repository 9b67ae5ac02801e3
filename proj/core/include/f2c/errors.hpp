#pragma once

#include <stdexcept>
#include <string>

namespace f2c {

/// Thrown when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an exhaustive computation would exceed its configured budget.
/// Operations refuse up front rather than returning truncated results.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string &what) {
  if (!cond)
    throw PreconditionError(what);
}

} // namespace f2c
