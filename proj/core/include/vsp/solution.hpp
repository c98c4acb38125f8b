#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include "vsp/types.hpp"

namespace vsp {

enum class ConstraintFamily { Delay, Capacity, Placement, Uniqueness, Cost };

std::string to_string(ConstraintFamily family);

/// A complete, feasible placement together with its objective value.
struct Solution {
  Placement placement;
  Money objective = 0;
  /// True when the objective is certified optimal (exact solvers only).
  bool optimal = false;
  /// Search states expanded by the exact solvers; number of per-node
  /// acceptance tests performed by the greedy heuristic.
  std::uint64_t nodes_explored = 0;
};

/// Distinguished no-solution result: which constraint family binds and a
/// human-readable detail line.
struct Infeasible {
  ConstraintFamily family = ConstraintFamily::Placement;
  std::string detail;
};

using SolveOutcome = std::variant<Solution, Infeasible>;

inline bool is_feasible(const SolveOutcome& outcome) {
  return std::holds_alternative<Solution>(outcome);
}
inline const Solution& get_solution(const SolveOutcome& outcome) {
  return std::get<Solution>(outcome);
}
inline const Infeasible& get_infeasible(const SolveOutcome& outcome) {
  return std::get<Infeasible>(outcome);
}

}  // namespace vsp
