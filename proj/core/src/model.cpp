#include "vsp/model.hpp"

#include "vsp/solution.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace vsp {

bool is_edge(NodeClass c) { return c != NodeClass::CoreCloud; }

std::string to_string(NodeClass c) {
  switch (c) {
    case NodeClass::CoreCloud:
      return "core_cloud";
    case NodeClass::ENodeB:
      return "enodeb";
    case NodeClass::Rsu:
      return "rsu";
  }
  return "unknown";
}

NodeClass node_class_from_string(const std::string& s) {
  if (s == "core_cloud") return NodeClass::CoreCloud;
  if (s == "enodeb") return NodeClass::ENodeB;
  if (s == "rsu") return NodeClass::Rsu;
  throw ValidationError("unknown node class '" + s + "'");
}

double DelayMatrix::at(std::size_t s, std::size_t v, std::size_t c) const {
  if (s >= instance_count || v >= vehicle_count || c >= node_count)
    throw ValidationError("delay matrix index out of range");
  return entries_ms[(s * vehicle_count + v) * node_count + c];
}

double& DelayMatrix::at(std::size_t s, std::size_t v, std::size_t c) {
  if (s >= instance_count || v >= vehicle_count || c >= node_count)
    throw ValidationError("delay matrix index out of range");
  return entries_ms[(s * vehicle_count + v) * node_count + c];
}

namespace {

template <typename T>
std::size_t index_of(const std::vector<T>& items, const std::string& id,
                     const char* what) {
  for (std::size_t i = 0; i < items.size(); ++i)
    if (items[i].id == id) return i;
  throw ValidationError(std::string("unknown ") + what + " id '" + id + "'");
}

}  // namespace

std::size_t ProblemInstance::node_index(const std::string& id) const {
  return index_of(nodes, id, "node");
}
std::size_t ProblemInstance::type_index(const std::string& id) const {
  return index_of(service_types, id, "service type");
}
std::size_t ProblemInstance::instance_index(const std::string& id) const {
  return index_of(instances, id, "instance");
}
const ServiceType& ProblemInstance::type_of(const ServiceInstance& inst) const {
  return service_types[type_index(inst.type_id)];
}

void validate(const ProblemInstance& problem) {
  if (problem.nodes.empty()) throw ValidationError("instance has no nodes");
  if (problem.service_types.empty())
    throw ValidationError("instance has no service types");
  if (problem.cost_cap <= 0) throw ValidationError("cost cap must be positive");

  std::unordered_set<std::string> seen;
  for (const auto& node : problem.nodes) {
    if (node.id.empty()) throw ValidationError("node with empty id");
    if (!seen.insert(node.id).second)
      throw ValidationError("duplicate node id '" + node.id + "'");
    if (!node.capacity.all_positive())
      throw ValidationError("node '" + node.id +
                            "' must have positive capacity in every component");
    if (node.hosting_cost <= 0)
      throw ValidationError("node '" + node.id + "' must have a positive cost");
  }

  seen.clear();
  std::unordered_map<std::string, int> declared;
  for (const auto& type : problem.service_types) {
    if (type.id.empty()) throw ValidationError("service type with empty id");
    if (!seen.insert(type.id).second)
      throw ValidationError("duplicate service type id '" + type.id + "'");
    if (type.delay_threshold_ms <= 0)
      throw ValidationError("service type '" + type.id +
                            "' must have a positive delay threshold");
    if (!type.demand.all_positive())
      throw ValidationError("service type '" + type.id +
                            "' must have positive demand in every component");
    if (type.instance_count < 1)
      throw ValidationError("service type '" + type.id +
                            "' must have at least one instance");
    if (type.instance_count > static_cast<int>(problem.nodes.size()))
      throw ValidationError(
          "service type '" + type.id + "' declares " +
          std::to_string(type.instance_count) + " instances but only " +
          std::to_string(problem.nodes.size()) +
          " nodes exist; spreading them over distinct nodes is impossible");
    declared[type.id] = 0;
  }

  seen.clear();
  for (const auto& inst : problem.instances) {
    if (inst.id.empty()) throw ValidationError("instance with empty id");
    if (!seen.insert(inst.id).second)
      throw ValidationError("duplicate instance id '" + inst.id + "'");
    auto it = declared.find(inst.type_id);
    if (it == declared.end())
      throw ValidationError("instance '" + inst.id +
                            "' references unknown type '" + inst.type_id + "'");
    ++it->second;
  }
  for (const auto& type : problem.service_types) {
    if (declared[type.id] != type.instance_count)
      throw ValidationError(
          "service type '" + type.id + "' declares " +
          std::to_string(type.instance_count) + " instances but " +
          std::to_string(declared[type.id]) + " are listed");
  }

  const auto& d = problem.delays;
  if (d.instance_count != problem.instances.size() ||
      d.node_count != problem.nodes.size() || d.vehicle_count < 1)
    throw ValidationError("delay matrix dimensions do not match the instance");
  if (d.entries_ms.size() != d.size())
    throw ValidationError("delay matrix entry count does not match dimensions");
  for (double e : d.entries_ms)
    if (!(e > 0) || !std::isfinite(e))
      throw ValidationError("delay matrix entries must be positive and finite");
}

double average_delay(const ProblemInstance& problem, std::size_t instance_idx,
                     std::size_t node_idx) {
  const auto& d = problem.delays;
  if (instance_idx >= d.instance_count || node_idx >= d.node_count)
    throw ValidationError("delay matrix index out of range");
  double sum = 0.0;
  for (std::size_t v = 0; v < d.vehicle_count; ++v)
    sum += d.entries_ms[(instance_idx * d.vehicle_count + v) * d.node_count +
                        node_idx];
  return sum / static_cast<double>(d.vehicle_count);
}

double average_delay(const ServiceInstance& inst, const ComputeNode& node,
                     const ProblemInstance& problem) {
  return average_delay(problem, problem.instance_index(inst.id),
                       problem.node_index(node.id));
}

MeanDelayTable mean_delay_table(const ProblemInstance& problem) {
  MeanDelayTable table;
  table.node_count = problem.nodes.size();
  table.values_ms.resize(problem.instances.size() * problem.nodes.size());
  for (std::size_t s = 0; s < problem.instances.size(); ++s)
    for (std::size_t c = 0; c < problem.nodes.size(); ++c)
      table.values_ms[s * table.node_count + c] = average_delay(problem, s, c);
  return table;
}

Money aggregate_cost(const Placement& placement,
                     const ProblemInstance& problem) {
  Money total = 0;
  for (const auto& [instance_id, node_id] : placement.assignment) {
    problem.instance_index(instance_id);  // reject unknown instances
    total += problem.nodes[problem.node_index(node_id)].hosting_cost;
  }
  return total;
}

Placement make_placement(const ProblemInstance& problem,
                         const std::map<std::string, std::string>& assignment) {
  Placement p;
  p.assignment = assignment;
  for (const auto& [instance_id, node_id] : assignment) {
    std::size_t s = problem.instance_index(instance_id);
    std::size_t c = problem.node_index(node_id);
    p.total_cost += problem.nodes[c].hosting_cost;
    p.per_instance_delay_ms[instance_id] = average_delay(problem, s, c);
  }
  return p;
}

ConstraintReport check_feasibility(const Placement& placement,
                                   const ProblemInstance& problem) {
  ConstraintReport report;
  const std::size_t n_nodes = problem.nodes.size();
  const std::size_t n_types = problem.service_types.size();

  // Resolve the assignment once; malformed ids become placement violations.
  std::unordered_map<std::string, std::size_t> node_by_id;
  for (std::size_t c = 0; c < n_nodes; ++c) node_by_id[problem.nodes[c].id] = c;
  std::unordered_map<std::string, std::size_t> inst_by_id;
  for (std::size_t s = 0; s < problem.instances.size(); ++s)
    inst_by_id[problem.instances[s].id] = s;
  std::unordered_map<std::string, std::size_t> type_pos;
  for (std::size_t u = 0; u < n_types; ++u)
    type_pos[problem.service_types[u].id] = u;

  std::vector<int> assigned_node(problem.instances.size(), -1);
  for (const auto& [instance_id, node_id] : placement.assignment) {
    auto si = inst_by_id.find(instance_id);
    if (si == inst_by_id.end()) {
      report.placement_violations.push_back(
          {"unknown instance '" + instance_id + "'", 1, 0});
      continue;
    }
    auto ci = node_by_id.find(node_id);
    if (ci == node_by_id.end()) {
      report.placement_violations.push_back(
          {"instance '" + instance_id + "' assigned to unknown node '" +
               node_id + "'",
           1, 0});
      continue;
    }
    assigned_node[si->second] = static_cast<int>(ci->second);
  }

  // Placement: each instance exactly once.
  for (std::size_t s = 0; s < problem.instances.size(); ++s) {
    if (assigned_node[s] < 0)
      report.placement_violations.push_back(
          {"instance '" + problem.instances[s].id + "' not placed", 0, 1});
  }

  // Delay: vehicle-averaged delay at the assigned node within the threshold.
  for (std::size_t s = 0; s < problem.instances.size(); ++s) {
    if (assigned_node[s] < 0) continue;
    double avg = average_delay(problem, s, assigned_node[s]);
    double threshold = problem.type_of(problem.instances[s]).delay_threshold_ms;
    if (avg > threshold)
      report.delay_violations.push_back(
          {"instance '" + problem.instances[s].id + "' on node '" +
               problem.nodes[assigned_node[s]].id + "'",
           avg, threshold});
  }

  // Capacity: componentwise aggregate demand within each node's capacity.
  std::vector<ResourceVector> load(n_nodes);
  for (std::size_t s = 0; s < problem.instances.size(); ++s)
    if (assigned_node[s] >= 0)
      load[assigned_node[s]] += problem.type_of(problem.instances[s]).demand;
  for (std::size_t c = 0; c < n_nodes; ++c) {
    const auto& cap = problem.nodes[c].capacity;
    const auto& id = problem.nodes[c].id;
    if (load[c].cpu > cap.cpu)
      report.capacity_violations.push_back(
          {"node '" + id + "' cpu", load[c].cpu, cap.cpu});
    if (load[c].memory_gb > cap.memory_gb)
      report.capacity_violations.push_back(
          {"node '" + id + "' memory_gb", load[c].memory_gb, cap.memory_gb});
    if (load[c].storage_gb > cap.storage_gb)
      report.capacity_violations.push_back(
          {"node '" + id + "' storage_gb", load[c].storage_gb, cap.storage_gb});
  }

  // Uniqueness: at most one instance of a type per node.
  std::vector<int> per_type_node(n_types * n_nodes, 0);
  for (std::size_t s = 0; s < problem.instances.size(); ++s)
    if (assigned_node[s] >= 0)
      ++per_type_node[type_pos[problem.instances[s].type_id] * n_nodes +
                      assigned_node[s]];
  for (std::size_t u = 0; u < n_types; ++u)
    for (std::size_t c = 0; c < n_nodes; ++c) {
      int count = per_type_node[u * n_nodes + c];
      if (count > 1)
        report.uniqueness_violations.push_back(
            {"type '" + problem.service_types[u].id + "' on node '" +
                 problem.nodes[c].id + "'",
             static_cast<double>(count), 1});
    }

  // Cost: aggregate hosting cost within the cap (non-strict).
  Money total = 0;
  for (std::size_t s = 0; s < problem.instances.size(); ++s)
    if (assigned_node[s] >= 0)
      total += problem.nodes[assigned_node[s]].hosting_cost;
  if (total > problem.cost_cap)
    report.cost_violation.push_back({"aggregate cost",
                                     static_cast<double>(total),
                                     static_cast<double>(problem.cost_cap)});

  return report;
}

std::string to_string(ConstraintFamily family) {
  switch (family) {
    case ConstraintFamily::Delay:
      return "delay";
    case ConstraintFamily::Capacity:
      return "capacity";
    case ConstraintFamily::Placement:
      return "placement";
    case ConstraintFamily::Uniqueness:
      return "uniqueness";
    case ConstraintFamily::Cost:
      return "cost";
  }
  return "unknown";
}

}  // namespace vsp
