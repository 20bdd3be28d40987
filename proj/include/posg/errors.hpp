#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace posg {

/// A group parameter is outside its supported domain (e.g. quaternion n < 3).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or partition request exceeds the configured budget.
/// The message always names the budget so callers can act on it.
class BudgetError : public std::runtime_error {
 public:
  BudgetError(std::string what, std::uint64_t budget)
      : std::runtime_error(std::move(what)), budget_(budget) {}

  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t budget_;
};

/// Two elements from different groups (or different parameters of the same
/// family) were combined.
class IncompatibleElementsError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace posg
