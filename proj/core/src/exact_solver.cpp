#include "vsp/exact_solver.hpp"

#include <limits>
#include <string>

#include "solver_common.hpp"

namespace vsp {

SearchState initial_state(const ProblemInstance& problem) {
  SearchState state;
  state.assigned_node.assign(problem.instances.size(), -1);
  state.residual.reserve(problem.nodes.size());
  for (const auto& node : problem.nodes) state.residual.push_back(node.capacity);
  state.type_on_node.assign(
      problem.service_types.size() * problem.nodes.size(), 0);
  state.accumulated_cost = 0;
  return state;
}

std::optional<Money> lower_bound(const SearchState& state,
                                 const ProblemInstance& problem) {
  return lower_bound(state, problem, mean_delay_table(problem));
}

std::optional<Money> lower_bound(const SearchState& state,
                                 const ProblemInstance& problem,
                                 const MeanDelayTable& means) {
  Money bound = state.accumulated_cost;
  for (std::size_t s = 0; s < problem.instances.size(); ++s) {
    if (state.assigned_node[s] >= 0) continue;
    double threshold = problem.type_of(problem.instances[s]).delay_threshold_ms;
    bool any = false;
    Money cheapest = 0;
    for (std::size_t c = 0; c < problem.nodes.size(); ++c) {
      if (means.at(s, c) > threshold) continue;
      Money cost = problem.nodes[c].hosting_cost;
      if (!any || cost < cheapest) {
        cheapest = cost;
        any = true;
      }
    }
    if (!any) return std::nullopt;
    bound += cheapest;
  }
  return bound;
}

namespace {

constexpr Money kNoCap = std::numeric_limits<Money>::max() / 4;

struct Search {
  const ProblemInstance& problem;
  const detail::SolverPrep& prep;
  const ExactOptions& options;
  Money cap;

  SearchState state;
  std::vector<Money> suffix_min_cost;  // along prep.instance_order
  bool found = false;
  Money best_cost = 0;
  std::vector<int> best_assignment;
  std::uint64_t explored = 0;

  Search(const ProblemInstance& p, const detail::SolverPrep& pr,
         const ExactOptions& o, Money cap_)
      : problem(p), prep(pr), options(o), cap(cap_), state(initial_state(p)) {
    suffix_min_cost.assign(prep.n_instances + 1, 0);
    for (std::size_t k = prep.n_instances; k-- > 0;) {
      int s = prep.instance_order[k];
      // candidates are cost-sorted, the first is the cheapest
      suffix_min_cost[k] = suffix_min_cost[k + 1] +
                           problem.nodes[prep.candidates[s][0]].hosting_cost;
    }
  }

  void dfs(std::size_t depth) {
    ++explored;
    if (options.on_expand) options.on_expand(state);

    if (options.prune) {
      Money bound = state.accumulated_cost + suffix_min_cost[depth];
      if (bound > cap) return;
      if (found && bound >= best_cost) return;
    }

    if (depth == prep.n_instances) {
      if (!found || state.accumulated_cost < best_cost) {
        found = true;
        best_cost = state.accumulated_cost;
        best_assignment = state.assigned_node;
      }
      return;
    }

    int s = prep.instance_order[depth];
    std::size_t u = prep.type_of_instance[s];
    const ResourceVector& demand = problem.service_types[u].demand;

    for (int c : prep.candidates[s]) {
      if (state.type_on_node[u * prep.n_nodes + c]) continue;
      if (!state.residual[c].covers(demand)) continue;
      Money cost = problem.nodes[c].hosting_cost;
      if (cost > cap - state.accumulated_cost) continue;

      state.assigned_node[s] = c;
      state.residual[c] -= demand;
      state.type_on_node[u * prep.n_nodes + c] = 1;
      state.accumulated_cost += cost;

      dfs(depth + 1);

      state.accumulated_cost -= cost;
      state.type_on_node[u * prep.n_nodes + c] = 0;
      state.residual[c] += demand;
      state.assigned_node[s] = -1;
    }
  }
};

}  // namespace

SolveOutcome solve_exact(const ProblemInstance& problem,
                         const ExactOptions& options) {
  detail::SolverPrep prep = detail::prepare(problem);

  for (std::size_t s = 0; s < prep.n_instances; ++s) {
    if (!prep.candidates[s].empty()) continue;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < prep.n_nodes; ++c)
      best = std::min(best, prep.means.at(s, c));
    return Infeasible{
        ConstraintFamily::Delay,
        "instance '" + problem.instances[s].id +
            "': no node meets its delay threshold (best average " +
            std::to_string(best) + " ms, threshold " +
            std::to_string(prep.threshold_of_instance[s]) + " ms)"};
  }

  Search search(problem, prep, options, problem.cost_cap);
  search.dfs(0);

  if (search.found) {
    std::map<std::string, std::string> assignment;
    for (std::size_t s = 0; s < prep.n_instances; ++s)
      assignment[problem.instances[s].id] =
          problem.nodes[search.best_assignment[s]].id;
    Solution solution;
    solution.placement = make_placement(problem, assignment);
    solution.objective = search.best_cost;
    solution.optimal = true;
    solution.nodes_explored = search.explored;
    return solution;
  }

  // Diagnose which family binds: rerun without the cap; if a placement
  // exists, the cap alone excluded every survivor.
  ExactOptions diag = options;
  diag.on_expand = nullptr;
  Search uncapped(problem, prep, diag, kNoCap);
  uncapped.dfs(0);
  if (uncapped.found)
    return Infeasible{
        ConstraintFamily::Cost,
        "cheapest placement satisfying delay/capacity/uniqueness costs $" +
            std::to_string(uncapped.best_cost) + "/month, above the cap $" +
            std::to_string(problem.cost_cap) + "/month"};
  return Infeasible{
      ConstraintFamily::Capacity,
      "no complete assignment satisfies the capacity and uniqueness "
      "constraints within the delay-feasible candidate sets"};
}

}  // namespace vsp
