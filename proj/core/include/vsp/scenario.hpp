#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vsp/types.hpp"

namespace vsp {

/// Uniform sampling range in milliseconds. lo == hi is allowed as a
/// degenerate range that always yields lo (handy for exact-delay fixtures).
struct DelayRange {
  double lo_ms = 0.0;
  double hi_ms = 0.0;
  friend bool operator==(const DelayRange&, const DelayRange&) = default;
};

/// One entry of the service catalog.
struct ServiceSpec {
  std::string id;
  double delay_threshold_ms = 0.0;
  ResourceVector demand;
  friend bool operator==(const ServiceSpec&, const ServiceSpec&) = default;
};

/// Everything needed to manufacture a ProblemInstance deterministically:
/// topology counts, per-tier capacities and prices, per-tier delay ranges,
/// fleet size, the fleet-to-instance proportionality constant, the service
/// catalog, the monthly cost cap and the RNG seed.
struct ScenarioSpec {
  int core_count = 0;
  int enb_count = 0;
  int rsu_count = 0;
  ResourceVector core_capacity;
  ResourceVector edge_capacity;
  Money core_cost = 0;
  Money edge_cost = 0;
  DelayRange core_delay;
  DelayRange enb_delay;
  DelayRange rsu_delay;
  int vehicle_count = 0;
  /// One instance of every service type per this many vehicles.
  int vehicles_per_instance = 10;
  std::vector<ServiceSpec> service_catalog;
  Money cost_cap = 0;
  std::uint64_t seed = 1;
};

/// The stock evaluation setup: 2 core-cloud nodes (32 cores / 64 GB / 240 GB,
/// $7,500/mo) plus 3 eNodeBs and 5 RSUs (8 cores / 16 GB / 240 GB,
/// $15,000/mo); vehicle-to-RSU delay uniform in [1, 10] ms, vehicle-to-eNB in
/// [20, 40] ms, vehicle-to-core in [60, 130] ms; services cam / denm / media
/// with thresholds 20 / 50 / 150 ms sized as a medium (2 cpu / 4 GB / 40 GB),
/// large (4 / 8 / 80) and extra-large (8 / 16 / 160) VM; cost cap
/// $500,000/mo; 10 vehicles per instance.
ScenarioSpec default_spec();

/// Throws ValidationError unless the spec is usable: non-negative counts with
/// at least one node, positive capacities/costs/cap, ranges with
/// 0 < lo <= hi, vehicle counts >= 1 and a non-empty catalog of distinct ids
/// with positive thresholds and demands.
void validate(const ScenarioSpec& spec);

/// Instances per service type for a fleet of the given size:
/// max(1, ceil(vehicle_count / vehicles_per_instance)), clamped to the node
/// count so spreading a type's instances over distinct nodes stays satisfiable
/// by counting. The same constant applies to every type. Throws
/// ValidationError when vehicle_count < 1.
std::vector<int> instance_counts(int vehicle_count, const ScenarioSpec& spec);

/// Draws one delay per (instance, vehicle, node) triple, continuous-uniform
/// over the range of the node's class, consuming the generator in
/// (s, v, c) row-major order. Identical seed and spec give a bit-identical
/// matrix.
DelayMatrix sample_delays(const ScenarioSpec& spec,
                          const std::vector<ServiceInstance>& instances,
                          const std::vector<ComputeNode>& nodes,
                          std::mt19937_64& rng);

/// Manufactures a validated ProblemInstance from the spec; a pure function of
/// (spec, seed). Nodes are listed in ascending access-delay order (RSUs,
/// eNodeBs, core clouds) so that equal-cost index tie-breaks prefer the
/// lower-latency host.
ProblemInstance generate(const ScenarioSpec& spec);

}  // namespace vsp
