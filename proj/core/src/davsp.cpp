#include "vsp/davsp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <unordered_map>

#include "vsp/model.hpp"

namespace vsp {

std::vector<ServiceType> sort_types_by_tolerance(
    std::vector<ServiceType> types) {
  std::stable_sort(types.begin(), types.end(),
                   [](const ServiceType& a, const ServiceType& b) {
                     return a.delay_threshold_ms < b.delay_threshold_ms;
                   });
  return types;
}

SolveOutcome solve_davsp(const ProblemInstance& problem) {
  const std::size_t n_nodes = problem.nodes.size();
  const std::size_t n_types = problem.service_types.size();
  MeanDelayTable means = mean_delay_table(problem);

  std::unordered_map<std::string, std::size_t> type_pos;
  for (std::size_t u = 0; u < n_types; ++u)
    type_pos[problem.service_types[u].id] = u;

  // S_u: the instances of each type, in their expanded order.
  std::vector<std::vector<std::size_t>> instances_of(n_types);
  for (std::size_t s = 0; s < problem.instances.size(); ++s)
    instances_of[type_pos.at(problem.instances[s].type_id)].push_back(s);

  std::vector<std::size_t> type_order(n_types);
  std::iota(type_order.begin(), type_order.end(), 0);
  std::stable_sort(type_order.begin(), type_order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return problem.service_types[a].delay_threshold_ms <
                            problem.service_types[b].delay_threshold_ms;
                   });

  // Cheapest-first offer order; ties go to the lowest node index.
  std::vector<int> node_order(n_nodes);
  std::iota(node_order.begin(), node_order.end(), 0);
  std::sort(node_order.begin(), node_order.end(), [&](int a, int b) {
    if (problem.nodes[a].hosting_cost != problem.nodes[b].hosting_cost)
      return problem.nodes[a].hosting_cost < problem.nodes[b].hosting_cost;
    return a < b;
  });

  std::vector<ResourceVector> residual;
  residual.reserve(n_nodes);
  for (const auto& node : problem.nodes) residual.push_back(node.capacity);

  std::map<std::string, std::string> assignment;
  Money total_cost = 0;
  std::uint64_t acceptance_tests = 0;

  std::vector<char> taken_for_type(n_nodes);
  std::vector<char> unusable(n_nodes);

  for (std::size_t u : type_order) {
    const ServiceType& type = problem.service_types[u];
    std::fill(taken_for_type.begin(), taken_for_type.end(), 0);

    for (std::size_t s : instances_of[u]) {
      std::fill(unusable.begin(), unusable.end(), 0);
      int delay_rejects = 0;
      int capacity_rejects = 0;
      bool placed = false;

      while (!placed) {
        int pick = -1;
        for (int c : node_order) {
          if (!taken_for_type[c] && !unusable[c]) {
            pick = c;
            break;
          }
        }
        if (pick < 0) {
          ConstraintFamily family = capacity_rejects > 0
                                        ? ConstraintFamily::Capacity
                                        : ConstraintFamily::Delay;
          return Infeasible{
              family, "instance '" + problem.instances[s].id +
                          "': every candidate node was rejected (delay: " +
                          std::to_string(delay_rejects) + ", capacity: " +
                          std::to_string(capacity_rejects) + ")"};
        }

        ++acceptance_tests;
        bool fits = residual[pick].covers(type.demand);
        bool in_time = means.at(s, pick) <= type.delay_threshold_ms;
        if (fits && in_time) {
          residual[pick] -= type.demand;
          taken_for_type[pick] = 1;
          assignment[problem.instances[s].id] = problem.nodes[pick].id;
          total_cost += problem.nodes[pick].hosting_cost;
          placed = true;
        } else {
          // cost marked unusable for this instance only
          unusable[pick] = 1;
          if (!in_time)
            ++delay_rejects;
          else
            ++capacity_rejects;
        }
      }
    }
  }

  // The greedy itself never consults the cap; audit it once on the finished
  // assignment.
  if (total_cost > problem.cost_cap)
    return Infeasible{ConstraintFamily::Cost,
                      "greedy placement costs $" + std::to_string(total_cost) +
                          "/month, above the cap $" +
                          std::to_string(problem.cost_cap) + "/month"};

  Solution solution;
  solution.placement = make_placement(problem, assignment);
  solution.objective = total_cost;
  solution.optimal = false;
  solution.nodes_explored = acceptance_tests;
  return solution;
}

}  // namespace vsp
