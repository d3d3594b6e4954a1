#pragma once

#include <cstdint>
#include <string>

#include "nilbij/error.hpp"

namespace nilbij {

/// Default cap on the number of objects a single enumeration may visit.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// base^exp, or BudgetExceeded as soon as a partial product passes `budget`.
inline std::uint64_t budgeted_power(std::uint64_t base, std::uint64_t exp, std::uint64_t budget) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > budget / base) {
      throw Error(Errc::budget_exceeded, std::to_string(base) + "^" + std::to_string(exp) +
                                             " exceeds the budget of " + std::to_string(budget));
    }
    out *= base;
  }
  if (out > budget) {
    throw Error(Errc::budget_exceeded, std::to_string(out) + " exceeds the budget of " + std::to_string(budget));
  }
  return out;
}

}  // namespace nilbij
