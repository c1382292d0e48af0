#include "gssel/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "gssel/tolerances.hpp"

namespace gssel::lp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Dense LU with partial pivoting, refactored from scratch every simplex
// iteration. The basis is at most T x T (a dozen rows), so refactoring is
// cheaper than guarding an update scheme against drift.
class Lu {
 public:
  explicit Lu(int n) : n_(n), a_(n * n), piv_(n) {}

  double& at(int i, int j) { return a_[i * n_ + j]; }

  void factor() {
    for (int i = 0; i < n_; ++i) {
      int p = i;
      for (int r = i + 1; r < n_; ++r)
        if (std::fabs(a_[r * n_ + i]) > std::fabs(a_[p * n_ + i])) p = r;
      piv_[i] = p;
      if (p != i)
        for (int j = 0; j < n_; ++j) std::swap(a_[i * n_ + j], a_[p * n_ + j]);
      const double d = a_[i * n_ + i];
      if (std::fabs(d) < tol::eps_pivot)
        throw std::runtime_error("singular basis matrix");
      for (int r = i + 1; r < n_; ++r) {
        const double f = a_[r * n_ + i] / d;
        a_[r * n_ + i] = f;
        for (int j = i + 1; j < n_; ++j) a_[r * n_ + j] -= f * a_[i * n_ + j];
      }
    }
  }

  // Solves B x = rhs in place.
  void solve(std::vector<double>& rhs) const {
    for (int i = 0; i < n_; ++i)
      if (piv_[i] != i) std::swap(rhs[i], rhs[piv_[i]]);
    for (int i = 1; i < n_; ++i) {
      double s = rhs[i];
      for (int j = 0; j < i; ++j) s -= a_[i * n_ + j] * rhs[j];
      rhs[i] = s;
    }
    for (int i = n_ - 1; i >= 0; --i) {
      double s = rhs[i];
      for (int j = i + 1; j < n_; ++j) s -= a_[i * n_ + j] * rhs[j];
      rhs[i] = s / a_[i * n_ + i];
    }
  }

  // Solves B^T y = rhs in place.
  void solve_transposed(std::vector<double>& rhs) const {
    for (int i = 0; i < n_; ++i) {
      double s = rhs[i];
      for (int j = 0; j < i; ++j) s -= a_[j * n_ + i] * rhs[j];
      rhs[i] = s / a_[i * n_ + i];
    }
    for (int i = n_ - 2; i >= 0; --i) {
      double s = rhs[i];
      for (int j = i + 1; j < n_; ++j) s -= a_[j * n_ + i] * rhs[j];
      rhs[i] = s;
    }
    for (int i = n_ - 1; i >= 0; --i)
      if (piv_[i] != i) std::swap(rhs[i], rhs[piv_[i]]);
  }

 private:
  int n_;
  std::vector<double> a_;
  std::vector<int> piv_;
};

enum class VarState : std::uint8_t { basic, at_lower, at_upper };

}  // namespace

// Variables 0..V-1 are the structural columns (bounds [0,1], cost 1);
// variables V..V+T-1 are surplus columns (bounds [0,inf), cost 0, column
// -e_t). The all-ones structural point with basic surpluses is a basic
// feasible starting point exactly when the instance is feasible, so no
// phase-1 is ever needed.
LpSolution solve_lp(const std::vector<std::vector<double>>& alpha_free,
                    const std::vector<double>& beta_prime) {
  const int rows = static_cast<int>(alpha_free.size());
  const int vars = rows == 0 ? 0 : static_cast<int>(alpha_free.front().size());
  if (beta_prime.size() != alpha_free.size())
    throw std::invalid_argument("beta_prime must have one entry per alpha row");
  for (const auto& row : alpha_free)
    if (static_cast<int>(row.size()) != vars)
      throw std::invalid_argument("alpha rows must all have the same length");

  LpSolution out;

  // Closed-form feasibility: the all-ones point maximizes every row.
  for (int t = 0; t < rows; ++t) {
    double rowsum = 0.0;
    for (double a : alpha_free[t]) rowsum += a;
    if (rowsum < beta_prime[t] - tol::eps_feas) {
      out.status = LpStatus::infeasible;
      return out;
    }
  }

  out.status = LpStatus::optimal;
  out.duals.assign(rows, 0.0);
  if (vars == 0) return out;

  // All rows already satisfied at zero: the zero vector is optimal.
  bool all_slack = true;
  for (int t = 0; t < rows; ++t)
    if (beta_prime[t] > tol::eps_feas) all_slack = false;
  if (rows == 0 || all_slack) {
    out.values.assign(vars, 0.0);
    return out;
  }

  const int total = vars + rows;
  std::vector<VarState> state(total, VarState::at_lower);
  std::vector<int> basis(rows);
  for (int j = 0; j < vars; ++j) state[j] = VarState::at_upper;
  for (int t = 0; t < rows; ++t) {
    basis[t] = vars + t;
    state[vars + t] = VarState::basic;
  }

  auto column_into = [&](int j, std::vector<double>& col) {
    if (j < vars)
      for (int t = 0; t < rows; ++t) col[t] = alpha_free[t][j];
    else {
      std::fill(col.begin(), col.end(), 0.0);
      col[j - vars] = -1.0;
    }
  };
  auto upper_of = [&](int j) { return j < vars ? 1.0 : kInf; };
  auto cost_of = [&](int j) { return j < vars ? 1.0 : 0.0; };

  std::vector<double> x_basic(rows), pi(rows), direction(rows), col(rows);

  for (long iteration = 0;; ++iteration) {
    if (iteration > 50000) throw std::runtime_error("simplex iteration limit exceeded");

    Lu lu(rows);
    for (int i = 0; i < rows; ++i) {
      column_into(basis[i], col);
      for (int t = 0; t < rows; ++t) lu.at(t, i) = col[t];
    }
    lu.factor();

    // Basic values from scratch: B x_B = beta' - (nonbasic contributions).
    for (int t = 0; t < rows; ++t) {
      double rhs = beta_prime[t];
      for (int j = 0; j < vars; ++j)
        if (state[j] == VarState::at_upper) rhs -= alpha_free[t][j];
      x_basic[t] = rhs;
    }
    lu.solve(x_basic);

    // Duals and reduced costs.
    for (int i = 0; i < rows; ++i) pi[i] = cost_of(basis[i]);
    lu.solve_transposed(pi);

    int entering = -1;
    double enter_sign = 0.0;
    for (int j = 0; j < total; ++j) {
      if (state[j] == VarState::basic) continue;
      double reduced = cost_of(j);
      if (j < vars)
        for (int t = 0; t < rows; ++t) reduced -= pi[t] * alpha_free[t][j];
      else
        reduced += pi[j - vars];
      if (state[j] == VarState::at_lower && reduced < -tol::eps_feas) {
        entering = j;
        enter_sign = 1.0;
        break;  // Bland: lowest eligible index
      }
      if (state[j] == VarState::at_upper && reduced > tol::eps_feas) {
        entering = j;
        enter_sign = -1.0;
        break;
      }
    }
    if (entering < 0) break;  // optimal

    column_into(entering, col);
    direction = col;
    lu.solve(direction);

    // Ratio test: basic i moves at rate -enter_sign * direction[i].
    double best_ratio = upper_of(entering);  // entering reaches its other bound
    int leaving_pos = -1;
    double leaving_sign = 0.0;
    for (int i = 0; i < rows; ++i) {
      const double delta = -enter_sign * direction[i];
      double ratio;
      double bound_sign;
      if (delta < -tol::eps_pivot) {
        ratio = std::max(x_basic[i], 0.0) / -delta;  // drops to its lower bound 0
        bound_sign = -1.0;
      } else if (delta > tol::eps_pivot && upper_of(basis[i]) < kInf) {
        ratio = std::max(upper_of(basis[i]) - x_basic[i], 0.0) / delta;
        bound_sign = +1.0;
      } else {
        continue;
      }
      // Bland on ties: smallest variable index leaves.
      if (ratio < best_ratio - tol::eps_pivot ||
          (ratio < best_ratio + tol::eps_pivot &&
           (leaving_pos < 0 || basis[i] < basis[leaving_pos]))) {
        best_ratio = std::min(ratio, best_ratio);
        leaving_pos = i;
        leaving_sign = bound_sign;
      }
    }

    if (leaving_pos < 0) {
      // No basic variable blocks: the entering variable flips to its other
      // bound (only structural columns have a finite range, so this is the
      // [0,1] box doing the blocking).
      state[entering] =
          state[entering] == VarState::at_lower ? VarState::at_upper : VarState::at_lower;
      continue;
    }

    const int leaving = basis[leaving_pos];
    state[leaving] = leaving_sign < 0 ? VarState::at_lower : VarState::at_upper;
    basis[leaving_pos] = entering;
    state[entering] = VarState::basic;
  }

  // Assemble the clamped primal point and the dual certificate.
  std::vector<double> values(vars, 0.0);
  for (int j = 0; j < vars; ++j)
    if (state[j] == VarState::at_upper) values[j] = 1.0;
  for (int i = 0; i < rows; ++i)
    if (basis[i] < vars) values[basis[i]] = std::clamp(x_basic[i], 0.0, 1.0);

  out.values = std::move(values);
  out.objective = 0.0;
  for (double v : out.values) out.objective += v;
  for (int t = 0; t < rows; ++t) out.duals[t] = std::max(pi[t], 0.0);
  return out;
}

bool is_integral(const LpSolution& solution) {
  if (solution.status != LpStatus::optimal)
    throw std::invalid_argument("is_integral requires an optimal solution");
  for (double v : solution.values)
    if (std::fabs(v) > tol::eps_int && std::fabs(1.0 - v) > tol::eps_int) return false;
  return true;
}

std::int64_t lower_bound(const LpSolution& solution, std::int64_t fixed_sum) {
  if (solution.status != LpStatus::optimal)
    throw std::invalid_argument("lower_bound requires an optimal solution");
  return static_cast<std::int64_t>(
      std::ceil(solution.objective + static_cast<double>(fixed_sum) - tol::eps_ceil));
}

}  // namespace gssel::lp
