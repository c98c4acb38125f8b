#include "vsp/json_io.hpp"

#include <fstream>

#include "vsp/model.hpp"

namespace vsp {

using nlohmann::json;

void to_json(json& j, const ResourceVector& v) {
  j = json{{"cpu", v.cpu}, {"memory_gb", v.memory_gb},
           {"storage_gb", v.storage_gb}};
}
void from_json(const json& j, ResourceVector& v) {
  j.at("cpu").get_to(v.cpu);
  j.at("memory_gb").get_to(v.memory_gb);
  j.at("storage_gb").get_to(v.storage_gb);
}

void to_json(json& j, const ComputeNode& n) {
  j = json{{"id", n.id},
           {"class", to_string(n.node_class)},
           {"capacity", n.capacity},
           {"hosting_cost", n.hosting_cost}};
}
void from_json(const json& j, ComputeNode& n) {
  j.at("id").get_to(n.id);
  n.node_class = node_class_from_string(j.at("class").get<std::string>());
  j.at("capacity").get_to(n.capacity);
  j.at("hosting_cost").get_to(n.hosting_cost);
}

void to_json(json& j, const ServiceType& t) {
  j = json{{"id", t.id},
           {"delay_threshold_ms", t.delay_threshold_ms},
           {"demand", t.demand},
           {"instance_count", t.instance_count}};
}
void from_json(const json& j, ServiceType& t) {
  j.at("id").get_to(t.id);
  j.at("delay_threshold_ms").get_to(t.delay_threshold_ms);
  j.at("demand").get_to(t.demand);
  j.at("instance_count").get_to(t.instance_count);
}

void to_json(json& j, const ServiceInstance& s) {
  j = json{{"id", s.id}, {"type_id", s.type_id}};
}
void from_json(const json& j, ServiceInstance& s) {
  j.at("id").get_to(s.id);
  j.at("type_id").get_to(s.type_id);
}

// Dimensions other than vehicle_count are implied by the enclosing document.
void to_json(json& j, const DelayMatrix& m) {
  j = json{{"vehicle_count", m.vehicle_count}, {"entries_ms", m.entries_ms}};
}
void from_json(const json& j, DelayMatrix& m) {
  j.at("vehicle_count").get_to(m.vehicle_count);
  j.at("entries_ms").get_to(m.entries_ms);
}

void to_json(json& j, const ProblemInstance& p) {
  j = json{{"nodes", p.nodes},
           {"service_types", p.service_types},
           {"instances", p.instances},
           {"delays", p.delays},
           {"cost_cap", p.cost_cap}};
}
void from_json(const json& j, ProblemInstance& p) {
  j.at("nodes").get_to(p.nodes);
  j.at("service_types").get_to(p.service_types);
  j.at("instances").get_to(p.instances);
  j.at("delays").get_to(p.delays);
  j.at("cost_cap").get_to(p.cost_cap);
  p.delays.instance_count = p.instances.size();
  p.delays.node_count = p.nodes.size();
}

void to_json(json& j, const Placement& p) {
  j = json{{"assignment", p.assignment},
           {"total_cost", p.total_cost},
           {"per_instance_delay_ms", p.per_instance_delay_ms}};
}
void from_json(const json& j, Placement& p) {
  j.at("assignment").get_to(p.assignment);
  p.total_cost = j.value("total_cost", Money{0});
  p.per_instance_delay_ms =
      j.value("per_instance_delay_ms", std::map<std::string, double>{});
}

void to_json(json& j, const DelayRange& r) {
  j = json{{"lo_ms", r.lo_ms}, {"hi_ms", r.hi_ms}};
}
void from_json(const json& j, DelayRange& r) {
  j.at("lo_ms").get_to(r.lo_ms);
  j.at("hi_ms").get_to(r.hi_ms);
}

void to_json(json& j, const ServiceSpec& s) {
  j = json{{"id", s.id},
           {"delay_threshold_ms", s.delay_threshold_ms},
           {"demand", s.demand}};
}
void from_json(const json& j, ServiceSpec& s) {
  j.at("id").get_to(s.id);
  j.at("delay_threshold_ms").get_to(s.delay_threshold_ms);
  j.at("demand").get_to(s.demand);
}

void to_json(json& j, const ScenarioSpec& s) {
  j = json{{"core_count", s.core_count},
           {"enb_count", s.enb_count},
           {"rsu_count", s.rsu_count},
           {"core_capacity", s.core_capacity},
           {"edge_capacity", s.edge_capacity},
           {"core_cost", s.core_cost},
           {"edge_cost", s.edge_cost},
           {"delay_ranges",
            json{{"core_cloud", s.core_delay},
                 {"enodeb", s.enb_delay},
                 {"rsu", s.rsu_delay}}},
           {"vehicle_count", s.vehicle_count},
           {"vehicles_per_instance", s.vehicles_per_instance},
           {"service_catalog", s.service_catalog},
           {"cost_cap", s.cost_cap},
           {"seed", s.seed}};
}
void from_json(const json& j, ScenarioSpec& s) {
  j.at("core_count").get_to(s.core_count);
  j.at("enb_count").get_to(s.enb_count);
  j.at("rsu_count").get_to(s.rsu_count);
  j.at("core_capacity").get_to(s.core_capacity);
  j.at("edge_capacity").get_to(s.edge_capacity);
  j.at("core_cost").get_to(s.core_cost);
  j.at("edge_cost").get_to(s.edge_cost);
  const json& ranges = j.at("delay_ranges");
  ranges.at("core_cloud").get_to(s.core_delay);
  ranges.at("enodeb").get_to(s.enb_delay);
  ranges.at("rsu").get_to(s.rsu_delay);
  j.at("vehicle_count").get_to(s.vehicle_count);
  j.at("vehicles_per_instance").get_to(s.vehicles_per_instance);
  j.at("service_catalog").get_to(s.service_catalog);
  j.at("cost_cap").get_to(s.cost_cap);
  j.at("seed").get_to(s.seed);
}

void to_json(json& j, const Violation& v) {
  j = json{{"entity", v.entity}, {"measured", v.measured}, {"bound", v.bound}};
}
void to_json(json& j, const ConstraintReport& r) {
  j = json{{"delay_violations", r.delay_violations},
           {"capacity_violations", r.capacity_violations},
           {"placement_violations", r.placement_violations},
           {"uniqueness_violations", r.uniqueness_violations},
           {"cost_violation", r.cost_violation},
           {"ok", r.ok()}};
}

void to_json(json& j, const TypeMetrics& m) {
  j = json{{"type_id", m.type_id},
           {"instance_count", m.instance_count},
           {"total_cost", m.total_cost},
           {"mean_cost", m.mean_cost},
           {"mean_delay_ms", m.mean_delay_ms}};
}
void to_json(json& j, const RunMetrics& m) {
  j = json{{"solver", m.solver},
           {"objective", m.objective},
           {"runtime_ms", m.runtime_ms},
           {"per_type", m.per_type},
           {"core_cpu_utilization", m.core_cpu_utilization},
           {"edge_cpu_utilization", m.edge_cpu_utilization},
           {"enb_cpu_utilization", m.enb_cpu_utilization},
           {"rsu_cpu_utilization", m.rsu_cpu_utilization}};
}
void to_json(json& j, const SweepRow& r) {
  j = json{{"vehicle_count", r.vehicle_count},
           {"solver", r.solver},
           {"trial", r.trial},
           {"seed", r.seed},
           {"feasible", r.feasible}};
  j["work"] = r.work;
  if (r.feasible) {
    j["metrics"] = r.metrics;
    j["assignment"] = r.assignment;
  } else {
    j["infeasible_reason"] = r.infeasible_reason;
    j["runtime_ms"] = r.metrics.runtime_ms;
  }
}
void to_json(json& j, const TypeMeans& m) {
  j = json{{"type_id", m.type_id},
           {"mean_cost", m.mean_cost},
           {"mean_delay_ms", m.mean_delay_ms}};
}
void to_json(json& j, const SweepAggregate& a) {
  j = json{{"vehicle_count", a.vehicle_count},
           {"solver", a.solver},
           {"feasible_trials", a.feasible_trials},
           {"infeasible_trials", a.infeasible_trials},
           {"mean_objective", a.mean_objective},
           {"per_type", a.per_type},
           {"mean_core_cpu_utilization", a.mean_core_cpu_utilization},
           {"mean_edge_cpu_utilization", a.mean_edge_cpu_utilization}};
}
void to_json(json& j, const SweepReport& r) {
  j = json{{"spec", r.spec},
           {"vehicle_counts", r.vehicle_counts},
           {"trials", r.trials},
           {"base_seed", r.base_seed},
           {"rows", r.rows},
           {"aggregates", r.aggregates}};
}

nlohmann::json solution_to_json(const SolveOutcome& outcome,
                                const std::string& solver) {
  json j;
  j["solver"] = solver;
  if (is_feasible(outcome)) {
    const Solution& solution = get_solution(outcome);
    j["status"] = solution.optimal ? "optimal" : "feasible";
    j["objective"] = solution.objective;
    j["nodes_explored"] = solution.nodes_explored;
    j["placement"] = solution.placement;
  } else {
    const Infeasible& inf = get_infeasible(outcome);
    j["status"] = "infeasible";
    j["infeasible"] = {{"family", to_string(inf.family)},
                       {"detail", inf.detail}};
  }
  return j;
}

ScenarioSpec parse_spec(const json& j) {
  ScenarioSpec spec = j.get<ScenarioSpec>();
  validate(spec);
  return spec;
}

ScenarioSpec load_spec(const std::string& path) {
  return parse_spec(load_json(path));
}

ProblemInstance parse_instance(const json& j) {
  if (j.contains("scenario")) return generate(parse_spec(j.at("scenario")));
  ProblemInstance problem = j.get<ProblemInstance>();
  validate(problem);
  return problem;
}

ProblemInstance load_instance(const std::string& path) {
  return parse_instance(load_json(path));
}

Placement load_placement(const std::string& path) {
  json j = load_json(path);
  if (j.contains("placement")) j = j.at("placement");
  Placement p;
  if (!j.contains("assignment"))
    throw ValidationError("placement document has no 'assignment' object");
  j.get_to(p);
  return p;
}

json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open '" + path + "' for reading");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError("cannot parse '" + path + "': " + e.what());
  }
  return j;
}

void save_json(const json& j, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot open '" + path + "' for writing");
  out << j.dump(2) << '\n';
}

}  // namespace vsp
