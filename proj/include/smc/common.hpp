#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace smc {

using Int = std::int64_t;

/// Raised when caller-supplied parameters violate a documented precondition.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when a computation would exceed the configured group-order or
/// automorphism-count budget.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Sorted, duplicate-free set of integers.
using Spectrum = std::vector<Int>;

struct Budget {
  Int group_order = 1'000'000;
  Int automorphisms = 100'000;
};

}  // namespace smc
