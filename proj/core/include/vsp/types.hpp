#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace vsp {

/// Monthly hosting money, in whole dollars. Costs in this domain are exact
/// dollar amounts, so they are kept as integers end to end.
using Money = std::int64_t;

/// A document or in-memory object violates a structural invariant.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Host tier. ENodeB and Rsu are both "edge" for reporting purposes.
enum class NodeClass { CoreCloud, ENodeB, Rsu };

bool is_edge(NodeClass c);
std::string to_string(NodeClass c);
NodeClass node_class_from_string(const std::string& s);

/// CPU cores plus memory and storage in gigabytes.
struct ResourceVector {
  double cpu = 0.0;
  double memory_gb = 0.0;
  double storage_gb = 0.0;

  /// Componentwise `this >= other` (an exact-fit demand is covered).
  bool covers(const ResourceVector& other) const {
    return cpu >= other.cpu && memory_gb >= other.memory_gb &&
           storage_gb >= other.storage_gb;
  }
  bool all_positive() const {
    return cpu > 0 && memory_gb > 0 && storage_gb > 0;
  }
  bool all_nonnegative() const {
    return cpu >= 0 && memory_gb >= 0 && storage_gb >= 0;
  }

  ResourceVector& operator+=(const ResourceVector& o) {
    cpu += o.cpu;
    memory_gb += o.memory_gb;
    storage_gb += o.storage_gb;
    return *this;
  }
  ResourceVector& operator-=(const ResourceVector& o) {
    cpu -= o.cpu;
    memory_gb -= o.memory_gb;
    storage_gb -= o.storage_gb;
    return *this;
  }
  friend bool operator==(const ResourceVector&, const ResourceVector&) = default;
};

/// A core-cloud, eNodeB or RSU host with finite capacity and a flat monthly
/// price per hosted instance. The price depends only on the node.
struct ComputeNode {
  std::string id;
  NodeClass node_class = NodeClass::Rsu;
  ResourceVector capacity;
  Money hosting_cost = 0;
};

/// A unique service class: how much latency it tolerates, what one instance
/// demands, and how many instances are to be placed.
struct ServiceType {
  std::string id;
  double delay_threshold_ms = 0.0;
  ResourceVector demand;
  int instance_count = 0;
};

/// One placeable replica of a service type. All instances of a type share
/// that type's threshold and demand.
struct ServiceInstance {
  std::string id;
  std::string type_id;
};

/// Sampled vehicle-to-node delays in milliseconds, dense over
/// (instance, vehicle, node).
struct DelayMatrix {
  std::size_t instance_count = 0;
  std::size_t vehicle_count = 0;
  std::size_t node_count = 0;
  /// Flat row-major entries: index (s * vehicle_count + v) * node_count + c.
  std::vector<double> entries_ms;

  double at(std::size_t s, std::size_t v, std::size_t c) const;
  double& at(std::size_t s, std::size_t v, std::size_t c);
  std::size_t size() const { return instance_count * vehicle_count * node_count; }
};

/// The full placement problem input.
struct ProblemInstance {
  std::vector<ComputeNode> nodes;
  std::vector<ServiceType> service_types;
  std::vector<ServiceInstance> instances;
  DelayMatrix delays;
  /// Provider's monthly budget ceiling on aggregate hosting cost (non-strict).
  Money cost_cap = 0;

  std::size_t node_index(const std::string& id) const;
  std::size_t type_index(const std::string& id) const;
  std::size_t instance_index(const std::string& id) const;
  const ServiceType& type_of(const ServiceInstance& inst) const;
};

/// Checks every structural invariant of a ProblemInstance; throws
/// ValidationError on the first failure. In particular each type's instance
/// count must not exceed the node count, otherwise spreading instances of a
/// type across distinct nodes is unsatisfiable by counting.
void validate(const ProblemInstance& problem);

/// An assignment of instances to nodes. May be partial during search;
/// completeness is only demanded by check_feasibility and by the solvers'
/// postconditions.
struct Placement {
  /// instance id -> node id (the nonzero entries of the decision matrix).
  std::map<std::string, std::string> assignment;
  Money total_cost = 0;
  /// Vehicle-averaged delay at the assigned node, per instance id.
  std::map<std::string, double> per_instance_delay_ms;
};

/// One constraint breach: which entity, what was measured, what the bound was.
struct Violation {
  std::string entity;
  double measured = 0.0;
  double bound = 0.0;
};

/// Audit result for one placement, one list per constraint family. Empty
/// lists across the board mean the placement simultaneously satisfies the
/// delay, capacity, placement, uniqueness and cost constraints.
struct ConstraintReport {
  std::vector<Violation> delay_violations;
  std::vector<Violation> capacity_violations;
  std::vector<Violation> placement_violations;
  std::vector<Violation> uniqueness_violations;
  std::vector<Violation> cost_violation;

  bool ok() const {
    return delay_violations.empty() && capacity_violations.empty() &&
           placement_violations.empty() && uniqueness_violations.empty() &&
           cost_violation.empty();
  }
  std::size_t total() const {
    return delay_violations.size() + capacity_violations.size() +
           placement_violations.size() + uniqueness_violations.size() +
           cost_violation.size();
  }
};

}  // namespace vsp
