#ifndef GSSEL_BNB_HPP
#define GSSEL_BNB_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gssel/lp.hpp"
#include "gssel/types.hpp"

// Exact solver: first-in-first-out branch-and-bound over subproblems with
// some variables fixed, combining the LP relaxation (lower bounds), the
// greedy method (upper bounds), a closed-form infeasibility test, and
// most-fractional branching. Returns a certified global optimum.
//
// A solve call is single-threaded and self-contained; the FIFO examination
// order is part of the contract (it makes traces reproducible). Concurrent
// solve calls on different instances are safe.

namespace gssel::bnb {

// A node of the search: variables split into a free set and a fixed
// assignment, with right-hand sides reduced by the fixed contributions.
struct Subproblem {
  std::vector<int> free;                            // ascending variable indices
  std::vector<std::pair<int, std::uint8_t>> fixed;  // (variable, value), in fixing order
  std::vector<double> beta_prime;                   // beta - fixed contributions
  std::int64_t fixed_sum = 0;                       // number of variables fixed to 1

  static Subproblem root(const BilpInstance& bilp);

  // Rebuilds beta_prime from scratch off the fixed assignment; used by tests
  // to check consistency of the incremental updates.
  std::vector<double> recompute_beta_prime(const BilpInstance& bilp) const;
};

enum class NodeEvent {
  infeasible,
  pruned,
  fathomed_integral,
  fathomed_bound_match,
  branched,
};

const char* to_string(NodeEvent event);

// One row per examined subproblem: the incumbent value and the number of
// still-active subproblems after the iteration, plus how the node was closed
// or expanded.
struct TraceRecord {
  std::int64_t iteration = 0;
  int incumbent = 0;
  std::int64_t active_list_length = 0;
  NodeEvent event = NodeEvent::branched;
};

struct SolveResult {
  // Minimum cardinality; empty when the instance itself is infeasible.
  std::optional<int> optimum;

  // Feasible selection achieving the optimum (meaningful iff optimum is set).
  Selection solution;

  std::int64_t total_iterations = 0;

  // Iteration at which the final incumbent value first appeared; 0 when the
  // initial all-ones incumbent was never improved.
  std::int64_t iterations_to_first_optimum = 0;

  std::vector<TraceRecord> trace;

  bool feasible() const { return optimum.has_value(); }
};

// Per-node view handed to an observer right after the node's relaxation is
// solved (nodes discarded by the infeasibility test are not reported).
// Used by verification harnesses to audit bounds node by node.
struct NodeView {
  const Subproblem& subproblem;
  const lp::LpSolution& relaxation;
  std::int64_t lower_bound;
};
using NodeObserver = std::function<void(const NodeView&)>;

// Position (0-based, within the free set) of the variable whose LP value is
// closest to 0.5; ties resolve to the lowest position. Throws
// std::logic_error on an empty span.
std::size_t select_branching_variable(std::span<const double> lp_values);

// Children of `parent` obtained by fixing variable b (an element of
// parent.free) to 0 and to 1 respectively. The 0-child keeps beta_prime and
// fixed_sum; the 1-child subtracts column b from beta_prime and increments
// fixed_sum. Throws std::logic_error when b is not free.
std::pair<Subproblem, Subproblem> branch(const Subproblem& parent, int b,
                                         const BilpInstance& bilp);

// Certified global optimum of the covering program. Infeasible inputs
// (some row unsatisfiable even by the all-ones selection) yield a result
// with no optimum rather than an error, so batch runs never abort.
SolveResult solve(const BilpInstance& bilp, const NodeObserver& observer = {});

}  // namespace gssel::bnb

#endif  // GSSEL_BNB_HPP
