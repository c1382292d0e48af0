#ifndef GSSEL_TOLERANCES_HPP
#define GSSEL_TOLERANCES_HPP

// Single source of truth for floating-point tolerances. The greedy method,
// the LP engine, the branch-and-bound solver and every test reference these
// names; no other numeric slack is introduced anywhere else.

namespace gssel::tol {

// Absolute slack on log-domain constraint checks: a row t counts as
// satisfied when sum_k alpha[t][k] z_k >= beta[t] - eps_feas.
inline constexpr double eps_feas = 1e-9;

// An LP value counts as integral when within eps_int of 0 or 1.
inline constexpr double eps_int = 1e-6;

// Subtracted before taking the ceiling of an LP objective, so that a value
// like 2.0000000001 still rounds to the integer bound 2.
inline constexpr double eps_ceil = 1e-7;

// Two solves of the same LP must produce objectives within eps_lp.
inline constexpr double eps_lp = 1e-8;

// Greedy arg-min: a candidate replaces the current best only when its cost
// is smaller by more than eps_tie; ties resolve to the lowest index.
inline constexpr double eps_tie = 1e-12;

// Minimum magnitude for a simplex pivot element or direction component.
inline constexpr double eps_pivot = 1e-10;

}  // namespace gssel::tol

#endif  // GSSEL_TOLERANCES_HPP
