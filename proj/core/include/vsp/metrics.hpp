#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "vsp/scenario.hpp"
#include "vsp/solution.hpp"
#include "vsp/types.hpp"

namespace vsp {

/// Per-service-type slice of one run.
struct TypeMetrics {
  std::string type_id;
  int instance_count = 0;
  Money total_cost = 0;
  double mean_cost = 0.0;      // hosting cost per instance of this type
  double mean_delay_ms = 0.0;  // vehicle-averaged delay, averaged over instances
};

/// Aggregated view of one solved instance: per-type cost and delay, CPU
/// utilization per tier (edge pools eNodeB and RSU), and diagnostics.
struct RunMetrics {
  std::string solver;
  Money objective = 0;
  double runtime_ms = 0.0;  // filled by the caller that timed the solve
  std::vector<TypeMetrics> per_type;  // catalog order
  double core_cpu_utilization = 0.0;
  double edge_cpu_utilization = 0.0;
  double enb_cpu_utilization = 0.0;
  double rsu_cpu_utilization = 0.0;
};

/// Deterministic aggregation of a feasible solution. Throws ValidationError
/// when the solution fails the constraint audit.
RunMetrics compute_metrics(const Solution& solution,
                           const ProblemInstance& problem,
                           std::string solver = {});

/// One (vehicle_count, solver, trial) outcome. The assignment is stored so
/// every metric stays recomputable from the row itself.
struct SweepRow {
  int vehicle_count = 0;
  std::string solver;
  int trial = 0;
  std::uint64_t seed = 0;
  bool feasible = false;
  std::string infeasible_reason;  // empty when feasible
  RunMetrics metrics;             // meaningful only when feasible
  std::map<std::string, std::string> assignment;
  /// Solution::nodes_explored of the run: search states for the exact
  /// solver, acceptance tests for the greedy.
  std::uint64_t work = 0;
};

struct TypeMeans {
  std::string type_id;
  double mean_cost = 0.0;
  double mean_delay_ms = 0.0;
};

/// Mean over the feasible trials of one (vehicle_count, solver) cell.
struct SweepAggregate {
  int vehicle_count = 0;
  std::string solver;
  int feasible_trials = 0;
  int infeasible_trials = 0;
  double mean_objective = 0.0;
  std::vector<TypeMeans> per_type;  // catalog order
  double mean_core_cpu_utilization = 0.0;
  double mean_edge_cpu_utilization = 0.0;
};

struct SweepReport {
  ScenarioSpec spec;
  std::vector<int> vehicle_counts;
  int trials = 0;
  std::uint64_t base_seed = 0;
  /// Rows in deterministic (vehicle_count, trial, solver) order with the
  /// exact solver before the heuristic.
  std::vector<SweepRow> rows;
  std::vector<SweepAggregate> aggregates;  // (vehicle_count, solver) order
};

/// Child seed for one (vehicle_count, trial) cell of a sweep.
std::uint64_t trial_seed(std::uint64_t base_seed, int vehicle_count, int trial);

/// For each vehicle count and trial: derive the child seed, generate the
/// scenario, solve with both the exact solver and the greedy heuristic, and
/// record metrics. Instances the exact solver proves infeasible are recorded
/// as infeasible rows, not errors. The whole report is a deterministic
/// function of (spec, vehicle_counts, trials, base_seed); `jobs` > 1 solves
/// cells concurrently without changing row order. Wall-clock runtime_ms is
/// the only field that varies between reruns.
SweepReport sweep(const ScenarioSpec& spec,
                  const std::vector<int>& vehicle_counts, int trials,
                  std::uint64_t base_seed, int jobs = 1);

/// CSV fixture format: one row per (vehicle_count, trial, solver), columns
/// documented in docs/formats.md. Deterministic to the byte; wall-clock
/// fields are deliberately excluded.
void write_csv(const SweepReport& report, std::ostream& out);
std::string to_csv(const SweepReport& report);

}  // namespace vsp
