#include "gssel/transform.hpp"

#include <cmath>
#include <stdexcept>

#include "gssel/tolerances.hpp"

namespace gssel::transform {

BilpInstance to_bilp(const ProblemInstance& inst) {
  BilpInstance bilp;
  bilp.num_vars = inst.num_stations;
  bilp.alpha.assign(inst.num_periods, std::vector<double>(inst.num_stations));
  bilp.beta.resize(inst.num_periods);
  for (int t = 0; t < inst.num_periods; ++t) {
    for (int k = 0; k < inst.num_stations; ++k)
      bilp.alpha[t][k] = std::log(1.0 / inst.outage[k][t]);
    bilp.beta[t] = std::log(1.0 / inst.required_outage[t]);
  }
  return bilp;
}

double availability(const ProblemInstance& inst, const Selection& sel, int period) {
  if (period < 0 || period >= inst.num_periods)
    throw std::invalid_argument("period out of range");
  double product = 1.0;
  for (int k = 0; k < inst.num_stations; ++k)
    if (sel.chosen[k]) product *= inst.outage[k][period];
  return 1.0 - product;
}

bool is_feasible(const BilpInstance& bilp, const Selection& z) {
  if (static_cast<int>(z.chosen.size()) != bilp.num_vars)
    throw std::invalid_argument("selection length must equal num_vars");
  for (int t = 0; t < bilp.num_rows(); ++t) {
    double lhs = 0.0;
    for (int k = 0; k < bilp.num_vars; ++k)
      if (z.chosen[k]) lhs += bilp.alpha[t][k];
    if (lhs < bilp.beta[t] - tol::eps_feas) return false;
  }
  return true;
}

}  // namespace gssel::transform
