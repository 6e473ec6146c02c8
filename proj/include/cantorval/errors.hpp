#pragma once

#include <stdexcept>
#include <string>

namespace cantorval {

// Raised when an operation is called outside its documented domain. The
// message names the violated precondition.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when an enumeration would exceed its configured size budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cantorval
