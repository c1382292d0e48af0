#include "gssel/types.hpp"

#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace gssel {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

}  // namespace

void ProblemInstance::validate() const {
  require(num_stations >= 1, "num_stations must be >= 1");
  require(num_periods >= 1, "num_periods must be >= 1");
  require(static_cast<int>(outage.size()) == num_stations,
          "outage must have exactly num_stations rows");
  for (int k = 0; k < num_stations; ++k) {
    require(static_cast<int>(outage[k].size()) == num_periods,
            "outage[" + std::to_string(k) + "] must have exactly num_periods entries");
    for (int t = 0; t < num_periods; ++t) {
      const double p = outage[k][t];
      require(std::isfinite(p) && p > 0.0 && p <= 1.0,
              "outage[" + std::to_string(k) + "][" + std::to_string(t) +
                  "] must be in (0, 1]");
    }
  }
  require(static_cast<int>(required_outage.size()) == num_periods,
          "required_outage must have exactly num_periods entries");
  for (int t = 0; t < num_periods; ++t) {
    const double q = required_outage[t];
    require(std::isfinite(q) && q > 0.0 && q <= 1.0,
            "required_outage[" + std::to_string(t) + "] must be in (0, 1]");
  }
}

void Selection::validate(int num_stations) const {
  require(static_cast<int>(chosen.size()) == num_stations,
          "chosen must have exactly num_stations entries");
  for (std::size_t k = 0; k < chosen.size(); ++k) {
    require(chosen[k] == 0 || chosen[k] == 1,
            "chosen[" + std::to_string(k) + "] must be 0 or 1");
  }
}

void NodeCoverGraph::validate() const {
  require(num_nodes >= 1, "num_nodes must be >= 1");
  std::set<std::pair<int, int>> seen;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [n, m] = edges[e];
    require(n >= 0 && n < num_nodes && m >= 0 && m < num_nodes,
            "edges[" + std::to_string(e) + "] references an invalid node index");
    require(n != m, "edges[" + std::to_string(e) + "] is a self-loop");
    const auto key = std::minmax(n, m);
    require(seen.insert(key).second,
            "edges[" + std::to_string(e) + "] duplicates an earlier edge");
  }
}

void BilpInstance::validate() const {
  require(num_vars >= 1, "num_vars must be >= 1");
  for (std::size_t t = 0; t < alpha.size(); ++t) {
    require(static_cast<int>(alpha[t].size()) == num_vars,
            "alpha[" + std::to_string(t) + "] must have exactly num_vars entries");
    for (int k = 0; k < num_vars; ++k) {
      const double a = alpha[t][k];
      require(std::isfinite(a) && a >= 0.0,
              "alpha[" + std::to_string(t) + "][" + std::to_string(k) +
                  "] must be finite and >= 0");
    }
  }
  require(beta.size() == alpha.size(), "beta must have one entry per alpha row");
  for (std::size_t t = 0; t < beta.size(); ++t) {
    require(std::isfinite(beta[t]) && beta[t] >= 0.0,
            "beta[" + std::to_string(t) + "] must be finite and >= 0");
  }
}

}  // namespace gssel
