#pragma once

// Builders for hand-sized problems and a seeded random-instance generator
// shared by the solver tests and the acceptance suite.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vsp/types.hpp"

namespace vsp::test {

inline ComputeNode node(std::string id, NodeClass cls, ResourceVector cap,
                        Money cost) {
  return ComputeNode{std::move(id), cls, cap, cost};
}

inline ServiceType service(std::string id, double threshold_ms,
                           ResourceVector demand, int count) {
  return ServiceType{std::move(id), threshold_ms, demand, count};
}

/// Expands instances ("<type>-<k>") and fills the delay matrix with a
/// constant. Does not validate, so degenerate fixtures are allowed.
inline ProblemInstance make_problem(std::vector<ComputeNode> nodes,
                                    std::vector<ServiceType> types,
                                    std::size_t vehicle_count,
                                    double delay_ms, Money cost_cap) {
  ProblemInstance p;
  p.nodes = std::move(nodes);
  p.service_types = std::move(types);
  for (const auto& type : p.service_types)
    for (int k = 0; k < type.instance_count; ++k)
      p.instances.push_back({type.id + "-" + std::to_string(k), type.id});
  p.delays.instance_count = p.instances.size();
  p.delays.vehicle_count = vehicle_count;
  p.delays.node_count = p.nodes.size();
  p.delays.entries_ms.assign(p.delays.size(), delay_ms);
  p.cost_cap = cost_cap;
  return p;
}

/// Per-node constant delays: every vehicle sees node_delays[c] for node c.
inline void set_node_delays(ProblemInstance& p,
                            const std::vector<double>& node_delays) {
  for (std::size_t s = 0; s < p.delays.instance_count; ++s)
    for (std::size_t v = 0; v < p.delays.vehicle_count; ++v)
      for (std::size_t c = 0; c < p.delays.node_count; ++c)
        p.delays.at(s, v, c) = node_delays[c];
}

/// Random oracle-sized instance: up to 4 nodes and 4 instances, a mix of
/// generous and tight capacities, thresholds and caps, so the set spans
/// feasible and infeasible cases across every constraint family.
inline ProblemInstance random_problem(std::mt19937_64& rng) {
  auto pick = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % (hi - lo + 1));
  };

  ProblemInstance p;
  int n_nodes = pick(1, 4);
  for (int c = 0; c < n_nodes; ++c) {
    NodeClass cls = static_cast<NodeClass>(pick(0, 2));
    ResourceVector cap{static_cast<double>(pick(2, 10)),
                       static_cast<double>(pick(4, 20)),
                       static_cast<double>(pick(20, 100))};
    Money cost = 2500 * pick(1, 8);
    p.nodes.push_back({"n" + std::to_string(c), cls, cap, cost});
  }

  int n_types = pick(1, 3);
  int budget_instances = 4;
  for (int u = 0; u < n_types && budget_instances > 0; ++u) {
    int count = pick(1, std::min(budget_instances, n_nodes));
    budget_instances -= count;
    ResourceVector demand{static_cast<double>(pick(1, 6)),
                          static_cast<double>(pick(1, 8)),
                          static_cast<double>(pick(5, 40))};
    p.service_types.push_back({"t" + std::to_string(u),
                               static_cast<double>(pick(5, 60)), demand,
                               count});
    for (int k = 0; k < count; ++k)
      p.instances.push_back(
          {"t" + std::to_string(u) + "-" + std::to_string(k),
           "t" + std::to_string(u)});
  }

  p.delays.instance_count = p.instances.size();
  p.delays.vehicle_count = static_cast<std::size_t>(pick(1, 4));
  p.delays.node_count = p.nodes.size();
  p.delays.entries_ms.resize(p.delays.size());
  for (double& e : p.delays.entries_ms)
    e = 1.0 + static_cast<double>(rng() % 800) / 10.0;  // 1 .. 80.9 ms

  p.cost_cap = 2500 * pick(4, 32);
  return p;
}

}  // namespace vsp::test
