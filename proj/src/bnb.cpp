#include "gssel/bnb.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "gssel/greedy.hpp"
#include "gssel/tolerances.hpp"
#include "gssel/transform.hpp"

namespace gssel::bnb {

Subproblem Subproblem::root(const BilpInstance& bilp) {
  Subproblem s;
  s.free.resize(bilp.num_vars);
  std::iota(s.free.begin(), s.free.end(), 0);
  s.beta_prime = bilp.beta;
  return s;
}

std::vector<double> Subproblem::recompute_beta_prime(const BilpInstance& bilp) const {
  std::vector<double> bp = bilp.beta;
  for (const auto& [var, value] : fixed)
    if (value)
      for (std::size_t t = 0; t < bp.size(); ++t) bp[t] -= bilp.alpha[t][var];
  return bp;
}

const char* to_string(NodeEvent event) {
  switch (event) {
    case NodeEvent::infeasible: return "infeasible";
    case NodeEvent::pruned: return "pruned";
    case NodeEvent::fathomed_integral: return "fathomed_integral";
    case NodeEvent::fathomed_bound_match: return "fathomed_bound_match";
    case NodeEvent::branched: return "branched";
  }
  throw std::logic_error("unknown NodeEvent");
}

std::size_t select_branching_variable(std::span<const double> lp_values) {
  if (lp_values.empty())
    throw std::logic_error("select_branching_variable on an empty free set");
  std::size_t best = 0;
  double best_dist = std::fabs(lp_values[0] - 0.5);
  for (std::size_t i = 1; i < lp_values.size(); ++i) {
    const double dist = std::fabs(lp_values[i] - 0.5);
    if (dist < best_dist - tol::eps_tie) {
      best = i;
      best_dist = dist;
    }
  }
  return best;
}

std::pair<Subproblem, Subproblem> branch(const Subproblem& parent, int b,
                                         const BilpInstance& bilp) {
  const auto it = std::find(parent.free.begin(), parent.free.end(), b);
  if (it == parent.free.end())
    throw std::logic_error("branching variable is not free in the parent");

  Subproblem zero;
  zero.free.reserve(parent.free.size() - 1);
  for (int v : parent.free)
    if (v != b) zero.free.push_back(v);
  zero.fixed = parent.fixed;
  zero.fixed.emplace_back(b, std::uint8_t{0});
  zero.beta_prime = parent.beta_prime;
  zero.fixed_sum = parent.fixed_sum;

  Subproblem one;
  one.free = zero.free;
  one.fixed = parent.fixed;
  one.fixed.emplace_back(b, std::uint8_t{1});
  one.beta_prime = parent.beta_prime;
  for (std::size_t t = 0; t < one.beta_prime.size(); ++t)
    one.beta_prime[t] -= bilp.alpha[t][b];
  one.fixed_sum = parent.fixed_sum + 1;

  return {std::move(zero), std::move(one)};
}

SolveResult solve(const BilpInstance& bilp, const NodeObserver& observer) {
  bilp.validate();
  const int num_vars = bilp.num_vars;
  const int num_rows = bilp.num_rows();

  SolveResult result;

  // Initial incumbent: select everything. Feasible exactly when the instance
  // is; an infeasible instance then finishes with no incumbent update and the
  // flag still false.
  Selection incumbent;
  incumbent.chosen.assign(num_vars, 1);
  std::int64_t best_value = num_vars;
  bool incumbent_feasible = transform::is_feasible(bilp, incumbent);

  // Builds the full selection for a node: fixed assignments plus a 0/1 vector
  // over the node's free variables.
  const auto assemble = [num_vars](const Subproblem& node,
                                   const std::vector<std::uint8_t>& z_free) {
    Selection sel;
    sel.chosen.assign(num_vars, 0);
    for (const auto& [var, value] : node.fixed) sel.chosen[var] = value;
    for (std::size_t i = 0; i < node.free.size(); ++i) sel.chosen[node.free[i]] = z_free[i];
    return sel;
  };

  std::deque<Subproblem> active;
  active.push_back(Subproblem::root(bilp));
  std::int64_t iteration = 0;

  while (!active.empty()) {
    const Subproblem node = std::move(active.front());
    active.pop_front();
    ++iteration;
    NodeEvent event = NodeEvent::infeasible;

    // Closed-form infeasibility: even selecting every free variable leaves
    // some row uncovered. Identical arithmetic to the relaxation's own
    // pre-check, so a node that survives here always solves to optimality.
    bool node_feasible = true;
    for (int t = 0; t < num_rows && node_feasible; ++t) {
      double rowsum = 0.0;
      for (int v : node.free) rowsum += bilp.alpha[t][v];
      if (rowsum < node.beta_prime[t] - tol::eps_feas) node_feasible = false;
    }

    if (node_feasible) {
      std::vector<std::vector<double>> alpha_free(
          num_rows, std::vector<double>(node.free.size()));
      for (int t = 0; t < num_rows; ++t)
        for (std::size_t i = 0; i < node.free.size(); ++i)
          alpha_free[t][i] = bilp.alpha[t][node.free[i]];

      const lp::LpSolution relaxation = lp::solve_lp(alpha_free, node.beta_prime);
      if (relaxation.status != lp::LpStatus::optimal)
        throw std::logic_error("relaxation disagreed with the closed-form feasibility test");
      const std::int64_t bound = lp::lower_bound(relaxation, node.fixed_sum);
      if (observer) observer(NodeView{node, relaxation, bound});

      if (best_value <= bound) {
        event = NodeEvent::pruned;
      } else if (lp::is_integral(relaxation)) {
        std::vector<std::uint8_t> z_free(node.free.size());
        for (std::size_t i = 0; i < z_free.size(); ++i)
          z_free[i] = relaxation.values[i] > 0.5 ? 1 : 0;
        Selection candidate = assemble(node, z_free);
        const std::int64_t value = candidate.cardinality();
        if (value < best_value && transform::is_feasible(bilp, candidate)) {
          best_value = value;
          incumbent = std::move(candidate);
          incumbent_feasible = true;
          result.iterations_to_first_optimum = iteration;
        }
        event = NodeEvent::fathomed_integral;
      } else {
        const greedy::GreedyResult heuristic =
            greedy::run_greedy(alpha_free, node.beta_prime);
        const std::int64_t value = node.fixed_sum + heuristic.cardinality;
        if (value < best_value) {
          best_value = value;
          incumbent = assemble(node, heuristic.z_free);
          incumbent_feasible = true;
          result.iterations_to_first_optimum = iteration;
        }
        if (bound == value) {
          event = NodeEvent::fathomed_bound_match;
        } else {
          const std::size_t pos = select_branching_variable(relaxation.values);
          auto [zero, one] = branch(node, node.free[pos], bilp);
          active.push_back(std::move(zero));
          active.push_back(std::move(one));
          event = NodeEvent::branched;
        }
      }
    }

    result.trace.push_back(TraceRecord{iteration, static_cast<int>(best_value),
                                       static_cast<std::int64_t>(active.size()), event});
  }

  result.total_iterations = iteration;
  if (incumbent_feasible) {
    result.optimum = static_cast<int>(best_value);
    result.solution = std::move(incumbent);
  }
  return result;
}

}  // namespace gssel::bnb
