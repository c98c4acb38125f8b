#pragma once

#include <vector>

#include "vsp/solution.hpp"
#include "vsp/types.hpp"

namespace vsp {

/// Ascending sort by delay threshold; stable, so types with equal thresholds
/// keep their input order.
std::vector<ServiceType> sort_types_by_tolerance(std::vector<ServiceType> types);

/// Delay-aware greedy placement. Walks service types in ascending
/// delay-tolerance order; for each instance it repeatedly offers the cheapest
/// remaining candidate node (cost, then lowest index) and accepts it iff the
/// residual capacity covers the demand and the precomputed vehicle-averaged
/// delay is within the threshold. An accepted node is withdrawn from the
/// remaining instances of the same type; a rejected node is marked unusable
/// for the current instance only. Returns Infeasible when an instance runs
/// out of candidates, or when the finished assignment exceeds the cost cap
/// (the cap is checked once, after assembly).
///
/// Solution.nodes_explored counts the acceptance tests performed; it is
/// bounded by |C| * |S|.
SolveOutcome solve_davsp(const ProblemInstance& problem);

}  // namespace vsp
