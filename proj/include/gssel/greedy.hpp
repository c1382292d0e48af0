#ifndef GSSEL_GREEDY_HPP
#define GSSEL_GREEDY_HPP

#include <cstdint>
#include <vector>

// Constructive upper bound for a covering subproblem. Starting from the zero
// vector, each pass flips to 1 the remaining variable that minimizes the
// total residual violation, until all rows are covered. Deficits are updated
// incrementally, so pass i costs Theta(T * (V + 1 - i)) and the whole run is
// Theta(T * V^2) in the worst case.

namespace gssel::greedy {

struct GreedyResult {
  std::vector<std::uint8_t> z_free;  // feasible 0/1 vector over the free variables
  int cardinality = 0;               // number of ones in z_free
  int iterations = 0;                // while-loop passes; always <= V
};

// Total violation sum_t max(beta_prime[t] - sum_v alpha[t][v] z_v, 0), with
// deficits within eps_feas of zero clamped to zero. Nonnegative; zero iff z
// is feasible.
double cost_function(const std::vector<std::vector<double>>& alpha_free,
                     const std::vector<std::uint8_t>& z,
                     const std::vector<double>& beta_prime);

// Requires the feasibility condition sum_v alpha[t][v] >= beta_prime[t] -
// eps_feas for every row (throws std::invalid_argument otherwise; callers
// pre-check). Ties in the arg-min resolve to the lowest variable index.
GreedyResult run_greedy(const std::vector<std::vector<double>>& alpha_free,
                        const std::vector<double>& beta_prime);

}  // namespace gssel::greedy

#endif  // GSSEL_GREEDY_HPP
