#pragma once

// Canonical ordering shared by the exact solver and the exhaustive oracle so
// both resolve cost ties identically: instances by ascending delay threshold
// (stable on the original index), candidate nodes by ascending hosting cost
// then index. Only ordering lives here; the two search implementations stay
// independent.

#include <algorithm>
#include <cstddef>
#include <unordered_map>
#include <vector>

#include "vsp/model.hpp"
#include "vsp/types.hpp"

namespace vsp::detail {

struct SolverPrep {
  std::size_t n_instances = 0;
  std::size_t n_nodes = 0;
  std::size_t n_types = 0;
  std::vector<std::size_t> type_of_instance;
  std::vector<double> threshold_of_instance;
  MeanDelayTable means;
  /// All node indices by ascending (hosting cost, index).
  std::vector<int> node_order;
  /// Per instance: delay-feasible nodes, in node_order.
  std::vector<std::vector<int>> candidates;
  /// Instance indices by ascending (delay threshold, index).
  std::vector<int> instance_order;
};

inline SolverPrep prepare(const ProblemInstance& problem) {
  SolverPrep prep;
  prep.n_instances = problem.instances.size();
  prep.n_nodes = problem.nodes.size();
  prep.n_types = problem.service_types.size();

  std::unordered_map<std::string, std::size_t> type_pos;
  for (std::size_t u = 0; u < prep.n_types; ++u)
    type_pos[problem.service_types[u].id] = u;

  prep.type_of_instance.resize(prep.n_instances);
  prep.threshold_of_instance.resize(prep.n_instances);
  for (std::size_t s = 0; s < prep.n_instances; ++s) {
    std::size_t u = type_pos.at(problem.instances[s].type_id);
    prep.type_of_instance[s] = u;
    prep.threshold_of_instance[s] =
        problem.service_types[u].delay_threshold_ms;
  }

  prep.means = mean_delay_table(problem);

  prep.node_order.resize(prep.n_nodes);
  for (std::size_t c = 0; c < prep.n_nodes; ++c)
    prep.node_order[c] = static_cast<int>(c);
  std::sort(prep.node_order.begin(), prep.node_order.end(),
            [&](int a, int b) {
              if (problem.nodes[a].hosting_cost != problem.nodes[b].hosting_cost)
                return problem.nodes[a].hosting_cost <
                       problem.nodes[b].hosting_cost;
              return a < b;
            });

  prep.candidates.resize(prep.n_instances);
  for (std::size_t s = 0; s < prep.n_instances; ++s)
    for (int c : prep.node_order)
      if (prep.means.at(s, c) <= prep.threshold_of_instance[s])
        prep.candidates[s].push_back(c);

  prep.instance_order.resize(prep.n_instances);
  for (std::size_t s = 0; s < prep.n_instances; ++s)
    prep.instance_order[s] = static_cast<int>(s);
  std::stable_sort(prep.instance_order.begin(), prep.instance_order.end(),
                   [&](int a, int b) {
                     return prep.threshold_of_instance[a] <
                            prep.threshold_of_instance[b];
                   });

  return prep;
}

}  // namespace vsp::detail
