#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "vsp/metrics.hpp"
#include "vsp/scenario.hpp"
#include "vsp/solution.hpp"
#include "vsp/types.hpp"

namespace vsp {

// JSON bindings for every document the project reads or writes. Schemas are
// documented in docs/formats.md; field names follow the in-memory structs.

void to_json(nlohmann::json& j, const ResourceVector& v);
void from_json(const nlohmann::json& j, ResourceVector& v);

void to_json(nlohmann::json& j, const ComputeNode& n);
void from_json(const nlohmann::json& j, ComputeNode& n);

void to_json(nlohmann::json& j, const ServiceType& t);
void from_json(const nlohmann::json& j, ServiceType& t);

void to_json(nlohmann::json& j, const ServiceInstance& s);
void from_json(const nlohmann::json& j, ServiceInstance& s);

void to_json(nlohmann::json& j, const DelayMatrix& m);
void from_json(const nlohmann::json& j, DelayMatrix& m);

void to_json(nlohmann::json& j, const ProblemInstance& p);
void from_json(const nlohmann::json& j, ProblemInstance& p);

void to_json(nlohmann::json& j, const Placement& p);
void from_json(const nlohmann::json& j, Placement& p);

void to_json(nlohmann::json& j, const DelayRange& r);
void from_json(const nlohmann::json& j, DelayRange& r);

void to_json(nlohmann::json& j, const ServiceSpec& s);
void from_json(const nlohmann::json& j, ServiceSpec& s);

void to_json(nlohmann::json& j, const ScenarioSpec& s);
void from_json(const nlohmann::json& j, ScenarioSpec& s);

void to_json(nlohmann::json& j, const Violation& v);
void to_json(nlohmann::json& j, const ConstraintReport& r);

void to_json(nlohmann::json& j, const TypeMetrics& m);
void to_json(nlohmann::json& j, const RunMetrics& m);
void to_json(nlohmann::json& j, const SweepRow& r);
void to_json(nlohmann::json& j, const TypeMeans& m);
void to_json(nlohmann::json& j, const SweepAggregate& a);
void to_json(nlohmann::json& j, const SweepReport& r);

/// Solution document for one solver run. Deterministic: carries no wall-clock
/// fields.
nlohmann::json solution_to_json(const SolveOutcome& outcome,
                                const std::string& solver);

/// Parses a spec document and validates it.
ScenarioSpec parse_spec(const nlohmann::json& j);
ScenarioSpec load_spec(const std::string& path);

/// Parses an instance document and validates it. Accepts either the full
/// inline form or a {"scenario": <spec>} document that regenerates the
/// instance from the embedded spec and seed.
ProblemInstance parse_instance(const nlohmann::json& j);
ProblemInstance load_instance(const std::string& path);

/// Reads an assignment from a bare placement document ({"assignment": ...})
/// or from a solution document ({"placement": {"assignment": ...}}). Returns
/// the raw assignment without resolving ids, so a constraint audit can report
/// problems instead of refusing to parse.
Placement load_placement(const std::string& path);

nlohmann::json load_json(const std::string& path);
void save_json(const nlohmann::json& j, const std::string& path);

}  // namespace vsp
