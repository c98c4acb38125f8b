#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "vsp/types.hpp"

namespace vsp {

/// Mean over all vehicles of the sampled delay for instance `s` hosted at
/// node `c`. The average runs over the whole vehicle set, not a served
/// subset, and does not depend on the rest of the placement.
double average_delay(const ProblemInstance& problem, std::size_t instance_idx,
                     std::size_t node_idx);
double average_delay(const ServiceInstance& inst, const ComputeNode& node,
                     const ProblemInstance& problem);

/// Dense |S| x |C| table of vehicle-averaged delays, precomputed once since
/// the average is placement-independent.
struct MeanDelayTable {
  std::size_t node_count = 0;
  std::vector<double> values_ms;  // instance-major

  double at(std::size_t instance_idx, std::size_t node_idx) const {
    return values_ms[instance_idx * node_count + node_idx];
  }
};

MeanDelayTable mean_delay_table(const ProblemInstance& problem);

/// Sum of hosting costs over the assigned pairs. Throws ValidationError if
/// the placement references an unknown instance or node id.
Money aggregate_cost(const Placement& placement, const ProblemInstance& problem);

/// Builds a Placement from a bare assignment map, computing its audited cost
/// and per-instance vehicle-averaged delays. Throws ValidationError on
/// unknown ids.
Placement make_placement(const ProblemInstance& problem,
                         const std::map<std::string, std::string>& assignment);

/// Evaluates the five constraint families independently and reports every
/// violation found; violations are data, not errors. Everything is recomputed
/// from placement.assignment, the cached cost/delay fields are not trusted.
/// Unknown instance or node ids are reported as placement violations.
ConstraintReport check_feasibility(const Placement& placement,
                                   const ProblemInstance& problem);

}  // namespace vsp
