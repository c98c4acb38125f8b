#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "vsp/model.hpp"
#include "vsp/solution.hpp"
#include "vsp/types.hpp"

namespace vsp {

/// The exhaustive oracle refuses instances beyond its enumeration budget.
class BudgetExceededError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Running state of a depth-first search over instance->node assignments.
/// Instance and node positions refer to the problem's original vectors.
struct SearchState {
  /// Assigned node index per instance index, -1 while unplaced.
  std::vector<int> assigned_node;
  /// Remaining capacity per node: capacity minus the placed demands.
  std::vector<ResourceVector> residual;
  /// Occupancy bit per (type index * node_count + node index), for the
  /// one-instance-of-a-type-per-node constraint.
  std::vector<std::uint8_t> type_on_node;
  Money accumulated_cost = 0;
};

/// Empty state: nothing placed, full capacities everywhere.
SearchState initial_state(const ProblemInstance& problem);

/// Admissible completion bound: the accumulated cost plus, for every unplaced
/// instance, the cheapest hosting cost among nodes whose vehicle-averaged
/// delay meets that instance's threshold (capacity and uniqueness ignored).
/// Returns nullopt when some unplaced instance has no delay-feasible node at
/// all, which proves the subtree has no feasible completion.
std::optional<Money> lower_bound(const SearchState& state,
                                 const ProblemInstance& problem);
std::optional<Money> lower_bound(const SearchState& state,
                                 const ProblemInstance& problem,
                                 const MeanDelayTable& means);

struct ExactOptions {
  /// Bound-based subtree cuts. Disabling only grows the search; the returned
  /// placement and objective are identical either way.
  bool prune = true;
  /// Test instrumentation: invoked for every expanded search state.
  std::function<void(const SearchState&)> on_expand;
};

/// Certified-optimal solver: depth-first branch-and-bound over the pruned
/// assignment tree. Deterministic; among equal-cost optima it returns the
/// first one in canonical search order (instances by ascending delay
/// threshold then index, candidate nodes by ascending cost then index).
SolveOutcome solve_exact(const ProblemInstance& problem,
                         const ExactOptions& options = {});

struct BruteForceOptions {
  /// Maximum number of complete assignments (|C|^|S|) it will enumerate.
  std::uint64_t enumeration_budget = 10'000'000;
};

/// Test oracle for small instances: enumerates every complete assignment of
/// instances to nodes, filters by the full constraint set evaluated from
/// scratch at each leaf, and keeps the minimum-cost survivor under the same
/// canonical tie-break order as solve_exact. Throws BudgetExceededError when
/// |C|^|S| exceeds the enumeration budget.
SolveOutcome solve_bruteforce(const ProblemInstance& problem,
                              const BruteForceOptions& options = {});

}  // namespace vsp
