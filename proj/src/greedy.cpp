#include "gssel/greedy.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "gssel/tolerances.hpp"

namespace gssel::greedy {

namespace {

double clamped(double deficit) {
  return deficit > tol::eps_feas ? deficit : 0.0;
}

}  // namespace

double cost_function(const std::vector<std::vector<double>>& alpha_free,
                     const std::vector<std::uint8_t>& z,
                     const std::vector<double>& beta_prime) {
  if (beta_prime.size() != alpha_free.size())
    throw std::invalid_argument("beta_prime must have one entry per alpha row");
  double total = 0.0;
  for (std::size_t t = 0; t < alpha_free.size(); ++t) {
    const auto& row = alpha_free[t];
    if (row.size() != z.size())
      throw std::invalid_argument("z must have one entry per alpha column");
    double covered = 0.0;
    for (std::size_t v = 0; v < row.size(); ++v)
      if (z[v]) covered += row[v];
    total += clamped(beta_prime[t] - covered);
  }
  return total;
}

GreedyResult run_greedy(const std::vector<std::vector<double>>& alpha_free,
                        const std::vector<double>& beta_prime) {
  const std::size_t rows = alpha_free.size();
  const std::size_t vars = rows == 0 ? 0 : alpha_free.front().size();
  if (beta_prime.size() != rows)
    throw std::invalid_argument("beta_prime must have one entry per alpha row");
  for (const auto& row : alpha_free)
    if (row.size() != vars)
      throw std::invalid_argument("alpha rows must all have the same length");

  // Residual deficit per row; the candidate score below is what the total
  // deficit would become if that variable were flipped on.
  std::vector<double> deficit(rows);
  double total = 0.0;
  for (std::size_t t = 0; t < rows; ++t) {
    double rowsum = 0.0;
    for (double a : alpha_free[t]) rowsum += a;
    if (rowsum < beta_prime[t] - tol::eps_feas)
      throw std::invalid_argument("run_greedy requires a feasible subproblem");
    deficit[t] = clamped(beta_prime[t]);
    total += deficit[t];
  }

  GreedyResult result;
  result.z_free.assign(vars, 0);

  while (total > 0.0) {
    ++result.iterations;
    int best = -1;
    double best_score = 0.0;
    for (std::size_t v = 0; v < vars; ++v) {
      if (result.z_free[v]) continue;
      double score = 0.0;
      for (std::size_t t = 0; t < rows; ++t)
        score += clamped(deficit[t] - alpha_free[t][v]);
      if (best < 0 || score < best_score - tol::eps_tie) {
        best = static_cast<int>(v);
        best_score = score;
      }
    }
    // The pre-check guarantees the all-ones point covers every row, so some
    // unset variable always strictly reduces the deficit.
    if (best < 0) throw std::logic_error("greedy ran out of variables with deficit remaining");
    result.z_free[best] = 1;
    ++result.cardinality;
    for (std::size_t t = 0; t < rows; ++t)
      deficit[t] = clamped(deficit[t] - alpha_free[t][best]);
    total = best_score;
  }

  return result;
}

}  // namespace gssel::greedy
