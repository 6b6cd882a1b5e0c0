#pragma once

#include <stdexcept>
#include <string>

namespace tcnet {

// Raised when an exhaustive search would exceed its configured work limit.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an exact computation produces a value that must be integral
// but is not (non-zero remainder, non-unit denominator).
class IntegralityError : public std::logic_error {
 public:
  explicit IntegralityError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace tcnet
