#include "vsp/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vsp/model.hpp"
#include "vsp/rng.hpp"

namespace vsp {

std::uint64_t splitmix64_next(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  std::uint64_t state = base;
  std::uint64_t h = splitmix64_next(state);
  state ^= a;
  h ^= splitmix64_next(state);
  state ^= b;
  h ^= splitmix64_next(state);
  return h;
}

double uniform_in_range(std::uint64_t bits, double lo, double hi) {
  double unit = static_cast<double>(bits >> 11) * 0x1.0p-53;
  return lo + unit * (hi - lo);
}

ScenarioSpec default_spec() {
  ScenarioSpec spec;
  spec.core_count = 2;
  spec.enb_count = 3;
  spec.rsu_count = 5;
  spec.core_capacity = {32, 64, 240};
  spec.edge_capacity = {8, 16, 240};
  spec.core_cost = 7'500;
  spec.edge_cost = 15'000;
  spec.core_delay = {60.0, 130.0};
  spec.enb_delay = {20.0, 40.0};
  spec.rsu_delay = {1.0, 10.0};
  spec.vehicle_count = 10;
  spec.vehicles_per_instance = 10;
  spec.service_catalog = {
      {"cam", 20.0, {2, 4, 40}},      // medium VM
      {"denm", 50.0, {4, 8, 80}},     // large VM
      {"media", 150.0, {8, 16, 160}}  // extra-large VM
  };
  spec.cost_cap = 500'000;
  spec.seed = 1;
  return spec;
}

namespace {

void check_range(const DelayRange& r, const char* name) {
  if (!(r.lo_ms > 0) || !(r.hi_ms >= r.lo_ms) || !std::isfinite(r.hi_ms))
    throw ValidationError(std::string(name) +
                          " delay range must satisfy 0 < lo <= hi");
}

}  // namespace

void validate(const ScenarioSpec& spec) {
  if (spec.core_count < 0 || spec.enb_count < 0 || spec.rsu_count < 0)
    throw ValidationError("node counts must be non-negative");
  if (spec.core_count + spec.enb_count + spec.rsu_count < 1)
    throw ValidationError("scenario needs at least one node");
  if (spec.core_count > 0 && !spec.core_capacity.all_positive())
    throw ValidationError("core capacity must be positive in every component");
  if (spec.enb_count + spec.rsu_count > 0 && !spec.edge_capacity.all_positive())
    throw ValidationError("edge capacity must be positive in every component");
  if (spec.core_count > 0 && spec.core_cost <= 0)
    throw ValidationError("core hosting cost must be positive");
  if (spec.enb_count + spec.rsu_count > 0 && spec.edge_cost <= 0)
    throw ValidationError("edge hosting cost must be positive");
  check_range(spec.rsu_delay, "rsu");
  check_range(spec.enb_delay, "enb");
  check_range(spec.core_delay, "core");
  if (spec.vehicle_count < 1)
    throw ValidationError("vehicle count must be at least 1");
  if (spec.vehicles_per_instance < 1)
    throw ValidationError("vehicles_per_instance must be at least 1");
  if (spec.service_catalog.empty())
    throw ValidationError("service catalog must not be empty");
  for (std::size_t i = 0; i < spec.service_catalog.size(); ++i) {
    const auto& svc = spec.service_catalog[i];
    if (svc.id.empty()) throw ValidationError("service with empty id");
    if (svc.delay_threshold_ms <= 0)
      throw ValidationError("service '" + svc.id +
                            "' must have a positive delay threshold");
    if (!svc.demand.all_positive())
      throw ValidationError("service '" + svc.id +
                            "' must have positive demand in every component");
    for (std::size_t k = 0; k < i; ++k)
      if (spec.service_catalog[k].id == svc.id)
        throw ValidationError("duplicate service id '" + svc.id + "'");
  }
  if (spec.cost_cap <= 0) throw ValidationError("cost cap must be positive");
}

std::vector<int> instance_counts(int vehicle_count, const ScenarioSpec& spec) {
  if (vehicle_count < 1)
    throw ValidationError("vehicle count must be at least 1");
  int node_total = spec.core_count + spec.enb_count + spec.rsu_count;
  int per_type = (vehicle_count + spec.vehicles_per_instance - 1) /
                 spec.vehicles_per_instance;
  per_type = std::max(1, per_type);
  per_type = std::min(per_type, node_total);  // counting bound for uniqueness
  return std::vector<int>(spec.service_catalog.size(), per_type);
}

DelayMatrix sample_delays(const ScenarioSpec& spec,
                          const std::vector<ServiceInstance>& instances,
                          const std::vector<ComputeNode>& nodes,
                          std::mt19937_64& rng) {
  DelayMatrix m;
  m.instance_count = instances.size();
  m.vehicle_count = static_cast<std::size_t>(spec.vehicle_count);
  m.node_count = nodes.size();
  m.entries_ms.resize(m.size());

  std::vector<DelayRange> range_of_node(nodes.size());
  for (std::size_t c = 0; c < nodes.size(); ++c) {
    switch (nodes[c].node_class) {
      case NodeClass::Rsu:
        range_of_node[c] = spec.rsu_delay;
        break;
      case NodeClass::ENodeB:
        range_of_node[c] = spec.enb_delay;
        break;
      case NodeClass::CoreCloud:
        range_of_node[c] = spec.core_delay;
        break;
    }
  }

  std::size_t i = 0;
  for (std::size_t s = 0; s < m.instance_count; ++s)
    for (std::size_t v = 0; v < m.vehicle_count; ++v)
      for (std::size_t c = 0; c < m.node_count; ++c)
        m.entries_ms[i++] =
            uniform_in_range(rng(), range_of_node[c].lo_ms, range_of_node[c].hi_ms);
  return m;
}

ProblemInstance generate(const ScenarioSpec& spec) {
  validate(spec);

  ProblemInstance problem;
  problem.cost_cap = spec.cost_cap;

  // Ascending access-delay order: index tie-breaks then prefer the
  // lower-latency host among equal-cost candidates.
  for (int i = 0; i < spec.rsu_count; ++i)
    problem.nodes.push_back({"rsu-" + std::to_string(i), NodeClass::Rsu,
                             spec.edge_capacity, spec.edge_cost});
  for (int i = 0; i < spec.enb_count; ++i)
    problem.nodes.push_back({"enb-" + std::to_string(i), NodeClass::ENodeB,
                             spec.edge_capacity, spec.edge_cost});
  for (int i = 0; i < spec.core_count; ++i)
    problem.nodes.push_back({"core-" + std::to_string(i), NodeClass::CoreCloud,
                             spec.core_capacity, spec.core_cost});

  std::vector<int> counts = instance_counts(spec.vehicle_count, spec);
  for (std::size_t u = 0; u < spec.service_catalog.size(); ++u) {
    const auto& svc = spec.service_catalog[u];
    problem.service_types.push_back(
        {svc.id, svc.delay_threshold_ms, svc.demand, counts[u]});
    for (int k = 0; k < counts[u]; ++k)
      problem.instances.push_back({svc.id + "-" + std::to_string(k), svc.id});
  }

  std::mt19937_64 rng(spec.seed);
  problem.delays = sample_delays(spec, problem.instances, problem.nodes, rng);

  validate(problem);
  return problem;
}

}  // namespace vsp
