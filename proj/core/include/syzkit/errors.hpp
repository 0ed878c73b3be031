#pragma once

#include <stdexcept>
#include <string>

namespace syz {

// Bad input: malformed files, mismatched rings, out-of-range arguments.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant; a bug, not a user mistake.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

// Computation exceeded the configured resource budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace syz
