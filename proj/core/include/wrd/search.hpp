#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace wrd {

enum class SolveStatus { Solved, Unsat, BudgetExceeded };

inline std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Solved: return "SOLVED";
    case SolveStatus::Unsat: return "UNSAT";
    case SolveStatus::BudgetExceeded: return "BUDGET_EXCEEDED";
  }
  return "?";
}

/// Outcome of an exact search. `nodes` counts path-extension steps and is
/// what the budget is measured in.
template <class Solution>
struct SolveResult {
  SolveStatus status = SolveStatus::Unsat;
  std::optional<Solution> solution;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

}  // namespace wrd
