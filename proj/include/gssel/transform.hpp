#ifndef GSSEL_TRANSFORM_HPP
#define GSSEL_TRANSFORM_HPP

#include "gssel/types.hpp"

// Exact correspondence between the probability-domain problem and its
// covering program: the product constraint
//     prod_{chosen k} p[k][t] <= required_outage[t]
// becomes, after taking logarithms and negating,
//     sum_k alpha[t][k] z_k >= beta[t]
// with alpha[t][k] = ln(1 / p[k][t]) and beta[t] = ln(1 / required_outage[t]).
// Natural logarithms throughout; the base is immaterial since both sides
// scale together.

namespace gssel::transform {

BilpInstance to_bilp(const ProblemInstance& inst);

// System availability achieved by a selection in one period:
// 1 - prod_{chosen s} outage[s][period]. An empty selection yields 0
// (the empty product is 1).
double availability(const ProblemInstance& inst, const Selection& sel, int period);

// True iff every row satisfies sum_k alpha[t][k] z_k >= beta[t] - eps_feas.
bool is_feasible(const BilpInstance& bilp, const Selection& z);

}  // namespace gssel::transform

#endif  // GSSEL_TRANSFORM_HPP
