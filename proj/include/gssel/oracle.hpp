#ifndef GSSEL_ORACLE_HPP
#define GSSEL_ORACLE_HPP

#include <optional>

#include "gssel/types.hpp"

// Exhaustive-search reference solver, used as ground truth in tests and
// benchmarks. Subsets are enumerated in order of increasing cardinality and
// the first feasible one is returned, so the result is a minimum-cardinality
// selection; within a cardinality the enumeration is lexicographic, making
// the returned selection the lexicographically smallest optimum. Not a
// production solver.

namespace gssel::oracle {

struct EsaResult {
  std::optional<int> optimum;  // empty when even the full set is infeasible
  Selection selection;
};

// Serial reference implementation. Throws std::invalid_argument when the
// instance has more than max_vars variables (runtime guard).
EsaResult solve_exhaustive(const BilpInstance& bilp, int max_vars = 25);

// OpenMP kernel: scans each cardinality level in parallel and reduces to the
// lexicographically smallest feasible subset, so it returns exactly what
// solve_exhaustive returns.
EsaResult solve_exhaustive_parallel(const BilpInstance& bilp, int max_vars = 25);

}  // namespace gssel::oracle

#endif  // GSSEL_ORACLE_HPP
