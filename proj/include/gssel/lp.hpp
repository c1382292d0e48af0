#ifndef GSSEL_LP_HPP
#define GSSEL_LP_HPP

#include <cstdint>
#include <vector>

// Relaxation engine: minimize sum_v z_v subject to alpha * z >= beta_prime
// and 0 <= z_v <= 1. Solved exactly by a dense bounded-variable primal
// simplex with Bland's anti-cycling rule; at the sizes this library targets
// (tens of columns, a dozen rows) that is simpler and terminates exactly,
// with no dependency. Not a general-purpose LP interface: variables are
// always box-bounded in [0,1], rows are always >=-rows (handled internally
// with surplus variables), and the objective is always the all-ones vector.

namespace gssel::lp {

enum class LpStatus { optimal, infeasible };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;

  // Per-variable optimum, clamped to [0, 1]. Empty unless optimal.
  std::vector<double> values;

  // Sum of values (the caller adds any fixed contribution itself).
  double objective = 0.0;

  // Row duals, one per constraint, all >= 0 at optimality. Together with the
  // values they form a checkable optimality certificate:
  //   objective == sum_t duals[t] * beta_prime[t]
  //              + sum_{v at upper bound} (1 - sum_t duals[t] * alpha[t][v]).
  std::vector<double> duals;
};

// Global optimum of the relaxation. Infeasible exactly when some row cannot
// be satisfied even by the all-ones point, i.e.
// sum_v alpha[t][v] < beta_prime[t] - eps_feas for some t; since alpha >= 0,
// the all-ones point is the componentwise maximum of the left-hand side.
// beta_prime entries may have any sign. Throws std::invalid_argument on a
// row/vector dimension mismatch.
LpSolution solve_lp(const std::vector<std::vector<double>>& alpha_free,
                    const std::vector<double>& beta_prime);

// True iff every value lies within eps_int of 0 or 1 (vacuously true for an
// empty variable set). Requires status == optimal.
bool is_integral(const LpSolution& solution);

// Integer lower bound on the subproblem optimum:
// ceil(objective + fixed_sum - eps_ceil). The eps_ceil guard keeps an
// objective like 2.0000000001 from rounding up to 3.
std::int64_t lower_bound(const LpSolution& solution, std::int64_t fixed_sum);

}  // namespace gssel::lp

#endif  // GSSEL_LP_HPP
