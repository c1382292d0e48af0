#include "gssel/oracle.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "gssel/tolerances.hpp"

namespace gssel::oracle {

namespace {

// Coverage check over an ascending index list. Both implementations sum in
// the same order, so they accept and reject identically.
bool covers(const BilpInstance& bilp, const std::vector<int>& subset) {
  for (std::size_t t = 0; t < bilp.alpha.size(); ++t) {
    double sum = 0.0;
    for (int v : subset) sum += bilp.alpha[t][v];
    if (sum < bilp.beta[t] - tol::eps_feas) return false;
  }
  return true;
}

EsaResult from_subset(int num_vars, const std::vector<int>& subset) {
  EsaResult result;
  result.optimum = static_cast<int>(subset.size());
  result.selection.chosen.assign(num_vars, 0);
  for (int v : subset) result.selection.chosen[v] = 1;
  return result;
}

void check_guard(const BilpInstance& bilp, int max_vars) {
  bilp.validate();
  if (bilp.num_vars > max_vars)
    throw std::invalid_argument("exhaustive search refused: instance exceeds max_vars");
}

// Pascal table, saturating well below overflow; max_vars keeps n small.
std::vector<std::vector<unsigned long long>> binomial_table(int n) {
  std::vector<std::vector<unsigned long long>> c(n + 1);
  for (int i = 0; i <= n; ++i) {
    c[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c;
}

// Combination with lexicographic rank r among the m-subsets of {0..n-1}.
std::vector<int> unrank(const std::vector<std::vector<unsigned long long>>& c, int n,
                        int m, unsigned long long r) {
  std::vector<int> subset(m);
  int next = 0;
  for (int i = 0; i < m; ++i) {
    bool placed = false;
    for (int v = next; v < n && !placed; ++v) {
      const unsigned long long with_v =
          m - 1 - i <= n - 1 - v ? c[n - 1 - v][m - 1 - i] : 0;
      if (r < with_v) {
        subset[i] = v;
        next = v + 1;
        placed = true;
      } else {
        r -= with_v;
      }
    }
    if (!placed) throw std::logic_error("combination rank out of range");
  }
  return subset;
}

// Coverage is monotone in the subset (alpha >= 0), so a full set that fails
// proves every subset fails; both implementations use that to settle
// infeasible instances with a single check.
bool full_set_covers(const BilpInstance& bilp) {
  std::vector<int> all(bilp.num_vars);
  std::iota(all.begin(), all.end(), 0);
  return covers(bilp, all);
}

}  // namespace

EsaResult solve_exhaustive(const BilpInstance& bilp, int max_vars) {
  check_guard(bilp, max_vars);
  const int n = bilp.num_vars;
  if (!full_set_covers(bilp)) return EsaResult{};

  for (int m = 0; m <= n; ++m) {
    std::vector<int> subset(m);
    std::iota(subset.begin(), subset.end(), 0);
    for (;;) {
      if (covers(bilp, subset)) return from_subset(n, subset);
      int i = m - 1;
      while (i >= 0 && subset[i] == n - m + i) --i;
      if (i < 0) break;
      ++subset[i];
      for (int j = i + 1; j < m; ++j) subset[j] = subset[j - 1] + 1;
    }
  }
  return EsaResult{};  // even the full set fails
}

EsaResult solve_exhaustive_parallel(const BilpInstance& bilp, int max_vars) {
  check_guard(bilp, max_vars);
  const int n = bilp.num_vars;
  if (!full_set_covers(bilp)) return EsaResult{};
  const auto c = binomial_table(n);
  constexpr unsigned long long kNone = ~0ULL;

  for (int m = 0; m <= n; ++m) {
    const unsigned long long count = c[n][m];
    unsigned long long best = kNone;
    // Whole-level scan reduced to the smallest feasible rank; rank order is
    // the serial enumeration order, so the winner is the same subset.
#pragma omp parallel for schedule(static) reduction(min : best)
    for (long long r = 0; r < static_cast<long long>(count); ++r) {
      if (static_cast<unsigned long long>(r) >= best) continue;
      const std::vector<int> subset = unrank(c, n, m, static_cast<unsigned long long>(r));
      if (covers(bilp, subset)) best = static_cast<unsigned long long>(r);
    }
    if (best != kNone) return from_subset(n, unrank(c, n, m, best));
  }
  return EsaResult{};
}

}  // namespace gssel::oracle
