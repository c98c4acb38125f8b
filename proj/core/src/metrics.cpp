#include "vsp/metrics.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "vsp/davsp.hpp"
#include "vsp/exact_solver.hpp"
#include "vsp/model.hpp"
#include "vsp/rng.hpp"
#include "vsp/scenario.hpp"

namespace vsp {

RunMetrics compute_metrics(const Solution& solution,
                           const ProblemInstance& problem, std::string solver) {
  ConstraintReport report = check_feasibility(solution.placement, problem);
  if (!report.ok())
    throw ValidationError("refusing to aggregate an infeasible solution (" +
                          std::to_string(report.total()) + " violations)");

  RunMetrics metrics;
  metrics.solver = std::move(solver);
  metrics.objective = solution.objective;

  std::unordered_map<std::string, std::size_t> type_pos;
  for (std::size_t u = 0; u < problem.service_types.size(); ++u) {
    type_pos[problem.service_types[u].id] = u;
    metrics.per_type.push_back({problem.service_types[u].id, 0, 0, 0.0, 0.0});
  }

  ResourceVector used_core, used_enb, used_rsu;
  for (std::size_t s = 0; s < problem.instances.size(); ++s) {
    const auto& inst = problem.instances[s];
    std::size_t u = type_pos.at(inst.type_id);
    std::size_t c = problem.node_index(solution.placement.assignment.at(inst.id));

    TypeMetrics& tm = metrics.per_type[u];
    ++tm.instance_count;
    tm.total_cost += problem.nodes[c].hosting_cost;
    tm.mean_delay_ms += average_delay(problem, s, c);

    const ResourceVector& demand = problem.service_types[u].demand;
    switch (problem.nodes[c].node_class) {
      case NodeClass::CoreCloud:
        used_core += demand;
        break;
      case NodeClass::ENodeB:
        used_enb += demand;
        break;
      case NodeClass::Rsu:
        used_rsu += demand;
        break;
    }
  }
  for (TypeMetrics& tm : metrics.per_type) {
    if (tm.instance_count == 0) continue;
    tm.mean_cost = static_cast<double>(tm.total_cost) / tm.instance_count;
    tm.mean_delay_ms /= tm.instance_count;
  }

  double cap_core = 0, cap_enb = 0, cap_rsu = 0;
  for (const auto& node : problem.nodes) {
    switch (node.node_class) {
      case NodeClass::CoreCloud:
        cap_core += node.capacity.cpu;
        break;
      case NodeClass::ENodeB:
        cap_enb += node.capacity.cpu;
        break;
      case NodeClass::Rsu:
        cap_rsu += node.capacity.cpu;
        break;
    }
  }
  auto ratio = [](double used, double cap) { return cap > 0 ? used / cap : 0.0; };
  metrics.core_cpu_utilization = ratio(used_core.cpu, cap_core);
  metrics.enb_cpu_utilization = ratio(used_enb.cpu, cap_enb);
  metrics.rsu_cpu_utilization = ratio(used_rsu.cpu, cap_rsu);
  metrics.edge_cpu_utilization =
      ratio(used_enb.cpu + used_rsu.cpu, cap_enb + cap_rsu);
  return metrics;
}

std::uint64_t trial_seed(std::uint64_t base_seed, int vehicle_count,
                         int trial) {
  return derive_seed(base_seed, static_cast<std::uint64_t>(vehicle_count),
                     static_cast<std::uint64_t>(trial));
}

namespace {

SweepRow solve_row(const ProblemInstance& problem, int vehicle_count,
                   int trial, std::uint64_t seed, const std::string& solver) {
  SweepRow row;
  row.vehicle_count = vehicle_count;
  row.solver = solver;
  row.trial = trial;
  row.seed = seed;

  auto start = std::chrono::steady_clock::now();
  SolveOutcome outcome =
      solver == "exact" ? solve_exact(problem) : solve_davsp(problem);
  auto stop = std::chrono::steady_clock::now();
  double runtime_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();

  if (is_feasible(outcome)) {
    const Solution& solution = get_solution(outcome);
    row.feasible = true;
    row.metrics = compute_metrics(solution, problem, solver);
    row.metrics.runtime_ms = runtime_ms;
    row.assignment = solution.placement.assignment;
    row.work = solution.nodes_explored;
  } else {
    const Infeasible& inf = get_infeasible(outcome);
    row.feasible = false;
    row.infeasible_reason = to_string(inf.family) + ": " + inf.detail;
    row.metrics.solver = solver;
    row.metrics.runtime_ms = runtime_ms;
  }
  return row;
}

}  // namespace

SweepReport sweep(const ScenarioSpec& spec,
                  const std::vector<int>& vehicle_counts, int trials,
                  std::uint64_t base_seed, int jobs) {
  validate(spec);
  if (vehicle_counts.empty())
    throw ValidationError("sweep needs at least one vehicle count");
  if (trials < 1) throw ValidationError("sweep needs at least one trial");
  if (jobs < 1) throw ValidationError("jobs must be at least 1");

  SweepReport report;
  report.spec = spec;
  report.vehicle_counts = vehicle_counts;
  report.trials = trials;
  report.base_seed = base_seed;
  report.rows.resize(vehicle_counts.size() * trials * 2);

  const std::size_t cells = vehicle_counts.size() * trials;
  auto run_cell = [&](std::size_t cell) {
    std::size_t count_idx = cell / trials;
    int trial = static_cast<int>(cell % trials);
    int vehicle_count = vehicle_counts[count_idx];
    std::uint64_t seed = trial_seed(base_seed, vehicle_count, trial);

    ScenarioSpec cell_spec = spec;
    cell_spec.vehicle_count = vehicle_count;
    cell_spec.seed = seed;
    ProblemInstance problem = generate(cell_spec);

    report.rows[cell * 2] =
        solve_row(problem, vehicle_count, trial, seed, "exact");
    report.rows[cell * 2 + 1] =
        solve_row(problem, vehicle_count, trial, seed, "davsp");
  };

  if (jobs == 1) {
    for (std::size_t cell = 0; cell < cells; ++cell) run_cell(cell);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    int n_workers = static_cast<int>(
        std::min(static_cast<std::size_t>(jobs), cells));
    for (int w = 0; w < n_workers; ++w)
      workers.emplace_back([&] {
        for (std::size_t cell = next.fetch_add(1); cell < cells;
             cell = next.fetch_add(1))
          run_cell(cell);
      });
    for (auto& worker : workers) worker.join();
  }

  // Aggregate feasible trials per (vehicle_count, solver) cell.
  for (int vehicle_count : vehicle_counts) {
    for (const std::string solver : {"exact", "davsp"}) {
      SweepAggregate agg;
      agg.vehicle_count = vehicle_count;
      agg.solver = solver;
      for (const auto& svc : spec.service_catalog)
        agg.per_type.push_back({svc.id, 0.0, 0.0});

      for (const SweepRow& row : report.rows) {
        if (row.vehicle_count != vehicle_count || row.solver != solver)
          continue;
        if (!row.feasible) {
          ++agg.infeasible_trials;
          continue;
        }
        ++agg.feasible_trials;
        agg.mean_objective += static_cast<double>(row.metrics.objective);
        agg.mean_core_cpu_utilization += row.metrics.core_cpu_utilization;
        agg.mean_edge_cpu_utilization += row.metrics.edge_cpu_utilization;
        for (std::size_t u = 0; u < agg.per_type.size(); ++u) {
          agg.per_type[u].mean_cost += row.metrics.per_type[u].mean_cost;
          agg.per_type[u].mean_delay_ms +=
              row.metrics.per_type[u].mean_delay_ms;
        }
      }
      if (agg.feasible_trials > 0) {
        agg.mean_objective /= agg.feasible_trials;
        agg.mean_core_cpu_utilization /= agg.feasible_trials;
        agg.mean_edge_cpu_utilization /= agg.feasible_trials;
        for (auto& tm : agg.per_type) {
          tm.mean_cost /= agg.feasible_trials;
          tm.mean_delay_ms /= agg.feasible_trials;
        }
      }
      report.aggregates.push_back(std::move(agg));
    }
  }
  return report;
}

namespace {

std::string fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

}  // namespace

void write_csv(const SweepReport& report, std::ostream& out) {
  out << "vehicle_count,solver,trial,seed,feasible,objective";
  for (const auto& svc : report.spec.service_catalog)
    out << ",cost_mean_" << svc.id << ",delay_mean_" << svc.id;
  out << ",core_cpu_util,edge_cpu_util,enb_cpu_util,rsu_cpu_util\n";

  for (const SweepRow& row : report.rows) {
    out << row.vehicle_count << ',' << row.solver << ',' << row.trial << ','
        << row.seed << ',' << (row.feasible ? 1 : 0) << ',';
    if (row.feasible) {
      out << row.metrics.objective;
      for (const TypeMetrics& tm : row.metrics.per_type)
        out << ',' << fixed6(tm.mean_cost) << ',' << fixed6(tm.mean_delay_ms);
      out << ',' << fixed6(row.metrics.core_cpu_utilization) << ','
          << fixed6(row.metrics.edge_cpu_utilization) << ','
          << fixed6(row.metrics.enb_cpu_utilization) << ','
          << fixed6(row.metrics.rsu_cpu_utilization);
    } else {
      // empty metric fields keep the column count stable
      for (std::size_t i = 0;
           i < report.spec.service_catalog.size() * 2 + 4; ++i)
        out << ',';
    }
    out << '\n';
  }
}

std::string to_csv(const SweepReport& report) {
  std::ostringstream out;
  write_csv(report, out);
  return out.str();
}

}  // namespace vsp
