#include <string>

#include "solver_common.hpp"
#include "vsp/exact_solver.hpp"

namespace vsp {

namespace {

// Leaf-by-leaf enumeration state. Every complete assignment is evaluated
// against the full constraint set from scratch; nothing is shared with the
// branch-and-bound's incremental bookkeeping.
struct Enumerator {
  const ProblemInstance& problem;
  const detail::SolverPrep& prep;

  std::vector<int> chosen;  // node index per instance index
  std::vector<ResourceVector> load;
  std::vector<int> type_node_count;

  bool found = false;
  Money best_cost = 0;
  std::vector<int> best_assignment;
  bool found_uncapped = false;
  Money best_uncapped = 0;
  std::uint64_t leaves = 0;

  explicit Enumerator(const ProblemInstance& p, const detail::SolverPrep& pr)
      : problem(p), prep(pr), chosen(pr.n_instances, -1) {}

  // Constraint filter, evaluated from scratch on one complete assignment.
  // Returns true iff delay, capacity and uniqueness hold; cost is reported
  // separately so the binding family can be told apart at the end.
  bool survives_structurally(Money& cost_out) {
    for (std::size_t s = 0; s < prep.n_instances; ++s)
      if (prep.means.at(s, chosen[s]) > prep.threshold_of_instance[s])
        return false;

    load.assign(prep.n_nodes, ResourceVector{});
    for (std::size_t s = 0; s < prep.n_instances; ++s)
      load[chosen[s]] += problem.service_types[prep.type_of_instance[s]].demand;
    for (std::size_t c = 0; c < prep.n_nodes; ++c)
      if (!problem.nodes[c].capacity.covers(load[c])) return false;

    type_node_count.assign(prep.n_types * prep.n_nodes, 0);
    for (std::size_t s = 0; s < prep.n_instances; ++s)
      if (++type_node_count[prep.type_of_instance[s] * prep.n_nodes +
                            chosen[s]] > 1)
        return false;

    Money cost = 0;
    for (std::size_t s = 0; s < prep.n_instances; ++s)
      cost += problem.nodes[chosen[s]].hosting_cost;
    cost_out = cost;
    return true;
  }

  void visit_leaf() {
    ++leaves;
    Money cost = 0;
    if (!survives_structurally(cost)) return;
    if (!found_uncapped || cost < best_uncapped) {
      found_uncapped = true;
      best_uncapped = cost;
    }
    if (cost > problem.cost_cap) return;
    if (!found || cost < best_cost) {
      found = true;
      best_cost = cost;
      best_assignment = chosen;
    }
  }

  void enumerate(std::size_t depth) {
    if (depth == prep.n_instances) {
      visit_leaf();
      return;
    }
    int s = prep.instance_order[depth];
    for (int c : prep.node_order) {
      chosen[s] = c;
      enumerate(depth + 1);
    }
    chosen[s] = -1;
  }
};

}  // namespace

SolveOutcome solve_bruteforce(const ProblemInstance& problem,
                              const BruteForceOptions& options) {
  detail::SolverPrep prep = detail::prepare(problem);

  std::uint64_t total = 1;
  for (std::size_t s = 0; s < prep.n_instances; ++s) {
    if (total > options.enumeration_budget / prep.n_nodes)
      throw BudgetExceededError(
          "brute force refuses " + std::to_string(prep.n_nodes) + "^" +
          std::to_string(prep.n_instances) + " assignments (budget " +
          std::to_string(options.enumeration_budget) + ")");
    total *= prep.n_nodes;
  }

  Enumerator e(problem, prep);
  e.enumerate(0);

  if (e.found) {
    std::map<std::string, std::string> assignment;
    for (std::size_t s = 0; s < prep.n_instances; ++s)
      assignment[problem.instances[s].id] =
          problem.nodes[e.best_assignment[s]].id;
    Solution solution;
    solution.placement = make_placement(problem, assignment);
    solution.objective = e.best_cost;
    solution.optimal = true;
    solution.nodes_explored = e.leaves;
    return solution;
  }

  for (std::size_t s = 0; s < prep.n_instances; ++s)
    if (prep.candidates[s].empty())
      return Infeasible{ConstraintFamily::Delay,
                        "instance '" + problem.instances[s].id +
                            "': no node meets its delay threshold"};
  if (e.found_uncapped)
    return Infeasible{
        ConstraintFamily::Cost,
        "cheapest placement satisfying delay/capacity/uniqueness costs $" +
            std::to_string(e.best_uncapped) + "/month, above the cap $" +
            std::to_string(problem.cost_cap) + "/month"};
  return Infeasible{
      ConstraintFamily::Capacity,
      "no complete assignment satisfies the capacity and uniqueness "
      "constraints within the delay-feasible candidate sets"};
}

}  // namespace vsp
