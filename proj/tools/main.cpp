// vsp: generate placement scenarios, solve them exactly or greedily, run
// vehicle-count sweeps, and audit placements against the constraint set.
//
// Exit codes: 0 success, 1 usage or I/O error, 2 infeasible instance,
// 3 constraint-check failure.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vsp/davsp.hpp"
#include "vsp/exact_solver.hpp"
#include "vsp/json_io.hpp"
#include "vsp/metrics.hpp"
#include "vsp/model.hpp"
#include "vsp/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitCheckFailed = 3;

struct SpecArgs {
  std::string spec_path;
  bool paper_setup = false;
  std::vector<std::string> overrides;
  std::optional<int> vehicles;
  std::optional<std::uint64_t> seed;
};

void add_spec_flags(CLI::App* cmd, SpecArgs& args, bool single_instance) {
  auto* spec_opt =
      cmd->add_option("--spec", args.spec_path, "Scenario spec JSON file");
  cmd->add_flag("--paper-setup", args.paper_setup,
                "Use the built-in stock scenario (same as data/paper-setup.json)")
      ->excludes(spec_opt);
  cmd->add_option("--set", args.overrides,
                  "Override any spec field, e.g. --set cost_cap=250000 or "
                  "--set delay_ranges.rsu.hi_ms=12")
      ->type_name("KEY=VALUE");
  if (single_instance) {
    cmd->add_option("--vehicles", args.vehicles, "Override the vehicle count")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", args.seed, "Override the RNG seed");
  }
}

void apply_override(nlohmann::json& j, const std::string& expr) {
  auto eq = expr.find('=');
  if (eq == std::string::npos || eq == 0)
    throw vsp::ValidationError("bad --set expression '" + expr +
                               "', expected KEY=VALUE");
  std::string key = expr.substr(0, eq);
  std::string value = expr.substr(eq + 1);
  for (char& ch : key)
    if (ch == '.') ch = '/';
  nlohmann::json::json_pointer ptr("/" + key);
  try {
    j[ptr] = nlohmann::json::parse(value);
  } catch (const nlohmann::json::parse_error&) {
    j[ptr] = value;  // unquoted strings are taken literally
  }
}

vsp::ScenarioSpec resolve_spec(const SpecArgs& args) {
  nlohmann::json j;
  if (!args.spec_path.empty()) {
    j = vsp::load_json(args.spec_path);
  } else {
    // default when neither --spec nor --paper-setup is given as well;
    // --paper-setup just makes the choice explicit
    j = vsp::default_spec();
  }
  for (const std::string& expr : args.overrides) apply_override(j, expr);
  if (args.vehicles) j["vehicle_count"] = *args.vehicles;
  if (args.seed) j["seed"] = *args.seed;
  return vsp::parse_spec(j);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw vsp::ValidationError("cannot open '" + path + "' for writing");
  out << text;
}

std::string dollars(vsp::Money m) { return "$" + std::to_string(m); }

void print_summary(const vsp::Solution& solution,
                   const vsp::ProblemInstance& problem,
                   const std::string& solver, double runtime_ms) {
  std::printf("solver: %s (%s)\n", solver.c_str(),
              solution.optimal ? "optimal" : "heuristic");
  std::printf("objective: %s/month\n", dollars(solution.objective).c_str());
  std::printf("%-12s %10s %6s %6s %14s\n", "type", "instances", "core", "edge",
              "mean delay");
  vsp::RunMetrics metrics = vsp::compute_metrics(solution, problem, solver);
  for (const vsp::TypeMetrics& tm : metrics.per_type) {
    int core = 0, edge = 0;
    for (const auto& inst : problem.instances) {
      if (inst.type_id != tm.type_id) continue;
      const auto& node_id = solution.placement.assignment.at(inst.id);
      const auto& node = problem.nodes[problem.node_index(node_id)];
      (is_edge(node.node_class) ? edge : core) += 1;
    }
    std::printf("%-12s %10d %6d %6d %11.2f ms\n", tm.type_id.c_str(),
                tm.instance_count, core, edge, tm.mean_delay_ms);
  }
  std::printf("runtime: %.3f ms, work: %llu\n", runtime_ms,
              static_cast<unsigned long long>(solution.nodes_explored));
}

int cmd_generate(const SpecArgs& spec_args, const std::string& out_path,
                 bool emit_spec) {
  vsp::ScenarioSpec spec = resolve_spec(spec_args);
  if (emit_spec) {
    nlohmann::json j = spec;
    write_text(out_path, j.dump(2) + "\n");
    return kExitOk;
  }
  vsp::ProblemInstance problem = vsp::generate(spec);
  nlohmann::json j = problem;
  write_text(out_path, j.dump(2) + "\n");
  if (!out_path.empty() && out_path != "-")
    std::fprintf(stderr, "wrote %s (%zu nodes, %zu instances, %d vehicles)\n",
                 out_path.c_str(), problem.nodes.size(),
                 problem.instances.size(), spec.vehicle_count);
  return kExitOk;
}

int cmd_solve(const std::string& instance_path, const std::string& solver,
              const std::string& out_path) {
  vsp::ProblemInstance problem = vsp::load_instance(instance_path);

  std::vector<std::string> solvers;
  if (solver == "both")
    solvers = {"exact", "davsp"};
  else
    solvers = {solver};

  nlohmann::json out = nlohmann::json::object();
  bool any_infeasible = false;
  std::optional<vsp::Money> exact_objective;

  for (const std::string& name : solvers) {
    auto start = std::chrono::steady_clock::now();
    vsp::SolveOutcome outcome = name == "exact" ? vsp::solve_exact(problem)
                                                : vsp::solve_davsp(problem);
    auto stop = std::chrono::steady_clock::now();
    double runtime_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();

    out[name] = vsp::solution_to_json(outcome, name);
    if (vsp::is_feasible(outcome)) {
      const vsp::Solution& solution = vsp::get_solution(outcome);
      print_summary(solution, problem, name, runtime_ms);
      if (name == "exact") exact_objective = solution.objective;
      if (name == "davsp" && exact_objective) {
        double gap = static_cast<double>(solution.objective -
                                         *exact_objective) /
                     static_cast<double>(*exact_objective);
        std::printf("davsp/exact objective gap: %.2f%%\n", gap * 100.0);
      }
    } else {
      const vsp::Infeasible& inf = vsp::get_infeasible(outcome);
      any_infeasible = true;
      std::fprintf(stderr, "%s: infeasible — %s constraint binds: %s\n",
                   name.c_str(), vsp::to_string(inf.family).c_str(),
                   inf.detail.c_str());
    }
    std::printf("\n");
  }

  if (!out_path.empty()) {
    nlohmann::json doc = solvers.size() == 1 ? out[solvers[0]] : out;
    vsp::save_json(doc, out_path);
  }
  return any_infeasible ? kExitInfeasible : kExitOk;
}

int cmd_sweep(const SpecArgs& spec_args, const std::string& counts_expr,
              int trials, std::uint64_t seed, int jobs,
              const std::string& csv_path, const std::string& json_path) {
  vsp::ScenarioSpec spec = resolve_spec(spec_args);

  std::vector<int> counts;
  std::stringstream ss(counts_expr);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (tok.empty()) continue;
    counts.push_back(std::stoi(tok));
  }
  if (counts.empty())
    throw vsp::ValidationError("--counts needs a comma-separated list");

  vsp::SweepReport report = vsp::sweep(spec, counts, trials, seed, jobs);

  std::printf("%8s %7s %6s %16s %10s %10s\n", "vehicles", "solver", "rows",
              "mean objective", "core util", "edge util");
  for (const vsp::SweepAggregate& agg : report.aggregates)
    std::printf("%8d %7s %6d %15.1f %10.3f %10.3f\n", agg.vehicle_count,
                agg.solver.c_str(), agg.feasible_trials, agg.mean_objective,
                agg.mean_core_cpu_utilization, agg.mean_edge_cpu_utilization);

  if (!csv_path.empty()) write_text(csv_path, vsp::to_csv(report));
  if (!json_path.empty()) vsp::save_json(report, json_path);
  return kExitOk;
}

void print_family(const char* name, const std::vector<vsp::Violation>& v) {
  std::printf("%-12s %s\n", name, v.empty() ? "PASS" : "FAIL");
  for (const vsp::Violation& violation : v)
    std::printf("  %s (measured %.6g, bound %.6g)\n",
                violation.entity.c_str(), violation.measured, violation.bound);
}

int cmd_check(const std::string& instance_path,
              const std::string& placement_path) {
  vsp::ProblemInstance problem = vsp::load_instance(instance_path);
  vsp::Placement placement = vsp::load_placement(placement_path);
  vsp::ConstraintReport report = vsp::check_feasibility(placement, problem);

  print_family("delay", report.delay_violations);
  print_family("capacity", report.capacity_violations);
  print_family("placement", report.placement_violations);
  print_family("uniqueness", report.uniqueness_violations);
  print_family("cost", report.cost_violation);
  return report.ok() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cost-optimal placement of latency-constrained V2X services "
               "across cloud and edge hosts"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand(
      "generate", "Generate a problem instance from a scenario spec");
  SpecArgs gen_spec;
  add_spec_flags(generate, gen_spec, /*single_instance=*/true);
  std::string gen_out = "-";
  generate->add_option("-o,--output", gen_out,
                       "Instance JSON path ('-' for stdout)");
  bool gen_emit_spec = false;
  generate->add_flag("--emit-spec", gen_emit_spec,
                     "Write the resolved scenario spec instead of an instance");

  // solve
  auto* solve =
      app.add_subcommand("solve", "Solve one instance and print a summary");
  std::string solve_instance;
  solve->add_option("instance", solve_instance, "Instance JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  std::string solve_solver;
  solve->add_option("--solver", solve_solver, "exact, davsp, or both")
      ->required()
      ->check(CLI::IsMember({"exact", "davsp", "both"}));
  std::string solve_out;
  solve->add_option("-o,--output", solve_out, "Solution JSON path");

  // sweep
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "Run seeded trials over a list of vehicle counts");
  SpecArgs sweep_spec;
  add_spec_flags(sweep_cmd, sweep_spec, /*single_instance=*/false);
  std::string sweep_counts;
  sweep_cmd
      ->add_option("--counts", sweep_counts,
                   "Comma-separated vehicle counts, e.g. 10,20,30,40,50")
      ->required();
  int sweep_trials = 20;
  sweep_cmd->add_option("--trials", sweep_trials, "Trials per vehicle count")
      ->check(CLI::PositiveNumber);
  std::uint64_t sweep_seed = 1;
  sweep_cmd->add_option("--seed", sweep_seed,
                        "Base seed for deriving per-trial seeds");
  int sweep_jobs = 1;
  sweep_cmd->add_option("--jobs", sweep_jobs, "Solve cells concurrently")
      ->check(CLI::PositiveNumber);
  std::string sweep_csv, sweep_json;
  sweep_cmd->add_option("--out-csv", sweep_csv, "CSV report path");
  sweep_cmd->add_option("--out-json", sweep_json, "JSON report path");

  // check
  auto* check = app.add_subcommand(
      "check", "Audit a placement against an instance's constraints");
  std::string check_instance, check_placement;
  check->add_option("instance", check_instance, "Instance JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  check->add_option("placement", check_placement,
                    "Placement or solution JSON file")
      ->required()
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (generate->parsed())
      return cmd_generate(gen_spec, gen_out, gen_emit_spec);
    if (solve->parsed())
      return cmd_solve(solve_instance, solve_solver, solve_out);
    if (sweep_cmd->parsed())
      return cmd_sweep(sweep_spec, sweep_counts, sweep_trials, sweep_seed,
                       sweep_jobs, sweep_csv, sweep_json);
    if (check->parsed()) return cmd_check(check_instance, check_placement);
  } catch (const vsp::ValidationError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
