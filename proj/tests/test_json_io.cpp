#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <string>

#include "test_support.hpp"
#include "vsp/exact_solver.hpp"
#include "vsp/json_io.hpp"
#include "vsp/model.hpp"

using namespace vsp;
using nlohmann::json;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name)
      : path("/tmp/vsp_io_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
  void write(const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
  }
};

}  // namespace

TEST_CASE("scenario spec round-trips through JSON") {
  ScenarioSpec spec = default_spec();
  spec.vehicle_count = 37;
  spec.seed = 123456789;
  json j = spec;
  ScenarioSpec back = parse_spec(j);
  CHECK(json(back) == j);
}

TEST_CASE("problem instance round-trips bit-exactly") {
  ScenarioSpec spec = default_spec();
  spec.vehicle_count = 23;
  spec.seed = 99;
  ProblemInstance p = generate(spec);
  json j = p;
  ProblemInstance back = parse_instance(j);
  CHECK(json(back) == j);
  CHECK(back.delays.entries_ms == p.delays.entries_ms);
}

TEST_CASE("scenario-form instance documents regenerate the same instance") {
  ScenarioSpec spec = default_spec();
  spec.vehicle_count = 15;
  spec.seed = 31;
  json doc;
  doc["scenario"] = spec;
  ProblemInstance regenerated = parse_instance(doc);
  CHECK(json(regenerated) == json(generate(spec)));
}

TEST_CASE("random instances survive the round trip") {
  std::mt19937_64 rng(7777);
  for (int round = 0; round < 20; ++round) {
    ProblemInstance p = test::random_problem(rng);
    json j = p;
    ProblemInstance back = j.get<ProblemInstance>();
    back.delays.instance_count = back.instances.size();
    back.delays.node_count = back.nodes.size();
    CHECK(json(back) == j);
  }
}

TEST_CASE("placement and solution documents") {
  ScenarioSpec spec = default_spec();
  ProblemInstance p = generate(spec);
  auto outcome = solve_exact(p);
  REQUIRE(is_feasible(outcome));

  json solution = solution_to_json(outcome, "exact");
  CHECK(solution.at("status") == "optimal");
  CHECK(solution.at("objective").get<Money>() ==
        get_solution(outcome).objective);

  TempFile f("solution.json");
  f.write(solution.dump());
  Placement from_solution = load_placement(f.path);
  CHECK(from_solution.assignment == get_solution(outcome).placement.assignment);

  TempFile bare("placement.json");
  bare.write(json{{"assignment", from_solution.assignment}}.dump());
  CHECK(load_placement(bare.path).assignment == from_solution.assignment);
}

TEST_CASE("infeasible outcomes serialize with family and detail") {
  json j = solution_to_json(
      Infeasible{ConstraintFamily::Delay, "nothing is close enough"}, "exact");
  CHECK(j.at("status") == "infeasible");
  CHECK(j.at("infeasible").at("family") == "delay");
}

TEST_CASE("loader errors are ValidationErrors") {
  CHECK_THROWS_AS(load_json("/nonexistent/path.json"), ValidationError);

  TempFile garbage("garbage.json");
  garbage.write("{not json");
  CHECK_THROWS_AS(load_json(garbage.path), ValidationError);

  TempFile no_assignment("empty.json");
  no_assignment.write("{}");
  CHECK_THROWS_AS(load_placement(no_assignment.path), ValidationError);

  TempFile bad_instance("bad_instance.json");
  ScenarioSpec spec = default_spec();
  json j = generate(spec);
  j["cost_cap"] = 0;  // structurally invalid
  bad_instance.write(j.dump());
  CHECK_THROWS_AS(load_instance(bad_instance.path), ValidationError);
}

TEST_CASE("the checked-in paper-setup spec equals the built-in default") {
  ScenarioSpec from_file = load_spec(std::string(VSP_REPO_DIR) +
                                     "/data/paper-setup.json");
  CHECK(json(from_file) == json(default_spec()));
}
