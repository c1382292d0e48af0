// Acceptance gate: one check per shipped guarantee, each printed as a single
// PASS/FAIL line. Returns nonzero if any criterion fails. Expected runtime is
// well under a minute on a desktop-class machine.
//
//   1. Exact agreement between branch-and-bound and exhaustive search.
//   2. Mean selected stations for the standard protocol within +-0.35 of the
//      reference values, including the rise-then-fall shape across K.
//   3. Mean iteration counts within a factor of 3 of the reference values and
//      below the structural 2^(K+1)-1 bound.
//   4. Trace structure of every solve (incumbent, active list, first-optimum).
//   5. Greedy contract: feasibility, at most V passes, upper bound, and
//      at-most-quadratic runtime growth in V.
//   6. LP lower bound below every node's true optimum (sub-oracle audit).
//   7. Known minimum node covers recovered exactly.
//   8. Byte-identical benchmark reports for a repeated master seed.

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gssel/bench.hpp"
#include "gssel/bnb.hpp"
#include "gssel/greedy.hpp"
#include "gssel/instance.hpp"
#include "gssel/lp.hpp"
#include "gssel/oracle.hpp"
#include "gssel/rng.hpp"
#include "gssel/tolerances.hpp"
#include "gssel/transform.hpp"

namespace {

constexpr std::uint64_t kAgreementSeed = 160914;
constexpr std::uint64_t kProtocolSeed = 42;

// Reference statistics for the standard protocol (200 scenarios per K,
// T = 12, 99.9% availability, outages uniform on [0.1, 1]). The tolerances
// absorb the unknowable RNG stream behind the reference numbers.
const std::vector<int> kProtocolK = {10, 15, 20, 25, 30};
const std::vector<double> kReferenceMeanSelected = {9.84, 11.36, 10.33, 9.62, 9.23};
const std::vector<double> kReferenceMeanIterations = {1.93, 14.23, 41.37, 87.74, 117.90};

struct TraceAudit {
  std::int64_t solves = 0;
  std::int64_t violations = 0;

  void inspect(const gssel::bnb::SolveResult& result) {
    ++solves;
    if (result.trace.empty() ||
        result.total_iterations != static_cast<std::int64_t>(result.trace.size()) ||
        result.iterations_to_first_optimum < 0 ||
        result.iterations_to_first_optimum > result.total_iterations) {
      ++violations;
      return;
    }
    std::int64_t length = 1;  // active list before the first iteration
    int incumbent = result.trace.front().incumbent;
    for (const gssel::bnb::TraceRecord& record : result.trace) {
      const bool branched = record.event == gssel::bnb::NodeEvent::branched;
      length = length - 1 + (branched ? 2 : 0);
      if (record.active_list_length != length || record.incumbent > incumbent) {
        ++violations;
        return;
      }
      incumbent = record.incumbent;
    }
    if (result.trace.back().active_list_length != 0) ++violations;
  }
};

bool root_feasible(const gssel::BilpInstance& bilp) {
  for (int t = 0; t < bilp.num_rows(); ++t) {
    double rowsum = 0.0;
    for (double a : bilp.alpha[t]) rowsum += a;
    if (rowsum < bilp.beta[t] - gssel::tol::eps_feas) return false;
  }
  return true;
}

// Instance drawn exactly like one benchmark scenario: redraw with
// attempt-indexed seeds until the feasibility condition holds.
gssel::BilpInstance scenario_instance(std::uint64_t master, int k, int index,
                                      int periods, double availability) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::uint64_t seed = gssel::derive_scenario_seed(
        master, static_cast<std::uint64_t>(k), static_cast<std::uint64_t>(index),
        attempt);
    const gssel::ProblemInstance inst =
        gssel::instance::generate_uniform(k, periods, 0.1, 1.0, availability, seed);
    gssel::BilpInstance bilp = gssel::transform::to_bilp(inst);
    if (root_feasible(bilp)) return bilp;
  }
}

struct GreedyAudit {
  std::int64_t runs = 0;
  std::int64_t violations = 0;

  void inspect(const gssel::BilpInstance& bilp, int optimum) {
    ++runs;
    const gssel::greedy::GreedyResult result =
        gssel::greedy::run_greedy(bilp.alpha, bilp.beta);
    gssel::Selection sel;
    sel.chosen = result.z_free;
    if (!gssel::transform::is_feasible(bilp, sel) ||
        result.iterations > bilp.num_vars || result.cardinality < optimum)
      ++violations;
  }
};

double median_greedy_seconds(int k, int repetitions) {
  // Dense many-station regime: outages in [0.9, 0.99] force the cover to use
  // about half the stations, so the pass count scales with V and the whole
  // run exercises the Theta(T V^2) shape.
  const double mean_alpha = 0.0576;  // E[ln(1/p)] for p ~ U[0.9, 0.99]
  const double availability = 1.0 - std::exp(-0.5 * mean_alpha * k);
  const gssel::ProblemInstance inst =
      gssel::instance::generate_uniform(k, 12, 0.9, 0.99, availability, 977);
  const gssel::BilpInstance bilp = gssel::transform::to_bilp(inst);
  if (!root_feasible(bilp)) return -1.0;

  std::vector<double> samples;
  for (int r = 0; r < repetitions; ++r) {
    const double start = omp_get_wtime();
    const gssel::greedy::GreedyResult result =
        gssel::greedy::run_greedy(bilp.alpha, bilp.beta);
    samples.push_back(omp_get_wtime() - start);
    if (result.iterations > k) return -1.0;
  }
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

std::string format_double(double x, int digits) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << x;
  return out.str();
}

}  // namespace

int main() {
  int failures = 0;
  const auto report = [&failures](int number, bool ok, const std::string& detail) {
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": "
              << detail << std::endl;
    if (!ok) ++failures;
  };

  TraceAudit traces;
  GreedyAudit greedy_roots;

  // --- Criterion 1: solver vs exhaustive search, 500 instances per K. ---
  {
    const std::vector<int> k_values = {5, 8, 10, 12, 15};
    std::int64_t agreements = 0, total = 0, feasible = 0;
    for (const int k : k_values) {
      for (int i = 0; i < 500; ++i) {
        const std::uint64_t seed =
            gssel::derive_scenario_seed(kAgreementSeed, k, i, 0);
        const gssel::ProblemInstance inst =
            gssel::instance::generate_uniform(k, 12, 0.1, 1.0, 0.999, seed);
        const gssel::BilpInstance bilp = gssel::transform::to_bilp(inst);

        const gssel::bnb::SolveResult solved = gssel::bnb::solve(bilp);
        const gssel::oracle::EsaResult truth = gssel::oracle::solve_exhaustive(bilp);

        ++total;
        const bool agree =
            solved.optimum == truth.optimum &&
            (!solved.feasible() ||
             (solved.solution.cardinality() == *solved.optimum &&
              gssel::transform::is_feasible(bilp, solved.solution)));
        if (agree) ++agreements;

        traces.inspect(solved);
        if (solved.feasible()) {
          ++feasible;
          greedy_roots.inspect(bilp, *solved.optimum);
        }
      }
    }
    std::ostringstream detail;
    detail << "branch-and-bound matches exhaustive search on " << agreements << "/"
           << total << " instances (" << feasible << " feasible)";
    report(1, agreements == total, detail.str());
  }

  // --- Criteria 2 + 3: the standard 200-scenario protocol. ---
  gssel::bench::BenchmarkConfig protocol;
  protocol.k_values = kProtocolK;
  protocol.num_scenarios = 200;
  protocol.seed = kProtocolSeed;
  const std::vector<gssel::bench::BenchmarkReport> reports =
      gssel::bench::run_benchmark(protocol);

  {
    double worst = 0.0;
    bool within = true;
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const double delta =
          std::fabs(reports[i].mean_selected - kReferenceMeanSelected[i]);
      worst = std::max(worst, delta);
      if (delta > 0.35) within = false;
    }
    const bool hump = reports[0].mean_selected < reports[1].mean_selected &&
                      reports[1].mean_selected > reports[2].mean_selected &&
                      reports[2].mean_selected > reports[3].mean_selected &&
                      reports[3].mean_selected > reports[4].mean_selected;
    std::ostringstream detail;
    detail << "mean selected stations within +-0.35 of reference (worst |delta| "
           << format_double(worst, 3) << "), rise-then-fall shape "
           << (hump ? "holds" : "broken");
    report(2, within && hump, detail.str());
  }

  {
    double worst_ratio = 0.0;
    bool ok = true;
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const double ratio = reports[i].mean_iterations / kReferenceMeanIterations[i];
      worst_ratio = std::max({worst_ratio, ratio, 1.0 / ratio});
      if (ratio > 3.0 || ratio < 1.0 / 3.0) ok = false;
      if (reports[i].mean_iterations >
          static_cast<double>(reports[i].iteration_upper_bound))
        ok = false;
      if (reports[i].mean_iters_to_first_opt > reports[i].mean_iterations) ok = false;
    }
    std::ostringstream detail;
    detail << "mean iterations within x3 of reference (worst ratio "
           << format_double(worst_ratio, 2)
           << "), below 2^(K+1)-1, first-optimum mean below total mean";
    report(3, ok, detail.str());
  }

  // --- Criterion 5 continued: the protocol batches feed the greedy audit. ---
  for (std::size_t i = 0; i < kProtocolK.size(); ++i) {
    for (int s = 0; s < protocol.num_scenarios; ++s) {
      const gssel::BilpInstance bilp = scenario_instance(
          kProtocolSeed, kProtocolK[i], s, protocol.num_periods,
          protocol.required_availability);
      const gssel::bnb::SolveResult solved = gssel::bnb::solve(bilp);
      traces.inspect(solved);
      if (solved.feasible()) greedy_roots.inspect(bilp, *solved.optimum);
    }
  }

  // --- Criterion 4: trace structure across everything solved above. ---
  {
    std::ostringstream detail;
    detail << "trace invariants hold on " << traces.solves - traces.violations
           << "/" << traces.solves
           << " solves (incumbent nonincreasing, list 1 -> 0, first-opt bound)";
    report(4, traces.violations == 0 && traces.solves > 3000, detail.str());
  }

  // --- Criterion 5: greedy contract and runtime growth. ---
  {
    const double t200 = median_greedy_seconds(200, 7);
    const double t400 = median_greedy_seconds(400, 7);
    const double t800 = median_greedy_seconds(800, 7);
    const bool timed = t200 > 0.0 && t400 > 0.0 && t800 > 0.0;
    // Quadratic growth doubles the ratio target of 4; 6 leaves noise headroom.
    const double r1 = timed ? t400 / t200 : 1e9;
    const double r2 = timed ? t800 / t400 : 1e9;
    const bool growth_ok = timed && r1 <= 6.0 && r2 <= 6.0;

    std::ostringstream detail;
    detail << "greedy feasible within V passes and above the optimum on "
           << greedy_roots.runs - greedy_roots.violations << "/"
           << greedy_roots.runs << " roots; doubling V scales runtime x"
           << format_double(r1, 2) << " then x" << format_double(r2, 2)
           << " (quadratic budget x6)";
    report(5, greedy_roots.violations == 0 && greedy_roots.runs > 900 && growth_ok,
           detail.str());
  }

  // --- Criterion 6: LP bound vs per-node sub-oracle on 50 instances. ---
  {
    std::int64_t nodes = 0, violations = 0;
    for (int i = 0; i < 50; ++i) {
      const gssel::BilpInstance bilp =
          scenario_instance(kAgreementSeed + 1, 12, i, 12, 0.999);
      const auto observer = [&](const gssel::bnb::NodeView& view) {
        ++nodes;
        if (view.subproblem.free.empty()) return;  // bound is exact by definition
        gssel::BilpInstance sub;
        sub.num_vars = static_cast<int>(view.subproblem.free.size());
        sub.alpha.assign(bilp.num_rows(), std::vector<double>(sub.num_vars));
        for (int t = 0; t < bilp.num_rows(); ++t)
          for (int v = 0; v < sub.num_vars; ++v)
            sub.alpha[t][v] = bilp.alpha[t][view.subproblem.free[v]];
        // Negative reduced requirements are vacuous; clamping keeps the
        // instance valid without changing its feasible set.
        sub.beta.resize(bilp.num_rows());
        for (int t = 0; t < bilp.num_rows(); ++t)
          sub.beta[t] = std::max(view.subproblem.beta_prime[t], 0.0);

        const gssel::oracle::EsaResult truth = gssel::oracle::solve_exhaustive(sub);
        if (!truth.optimum ||
            view.lower_bound > view.subproblem.fixed_sum + *truth.optimum)
          ++violations;
      };
      gssel::bnb::solve(bilp, observer);
    }
    std::ostringstream detail;
    detail << "ceil(LP + fixed) lower-bounds the sub-oracle optimum on " << nodes
           << " nodes across 50 instances (" << violations << " violations)";
    report(6, violations == 0 && nodes >= 50, detail.str());
  }

  // --- Criterion 7: known minimum node covers. ---
  {
    struct Fixture {
      const char* name;
      gssel::NodeCoverGraph graph;
      int cover;
    };
    std::vector<Fixture> fixtures;
    fixtures.push_back({"triangle", {3, {{0, 1}, {0, 2}, {1, 2}}}, 2});
    fixtures.push_back({"path-3", {3, {{0, 1}, {1, 2}}}, 1});
    fixtures.push_back(
        {"5-cycle", {5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}}, 3});
    gssel::NodeCoverGraph k5;
    k5.num_nodes = 5;
    for (int a = 0; a < 5; ++a)
      for (int b = a + 1; b < 5; ++b) k5.edges.emplace_back(a, b);
    fixtures.push_back({"K5", k5, 4});
    gssel::NodeCoverGraph star;
    star.num_nodes = 10;
    for (int leaf = 1; leaf < 10; ++leaf) star.edges.emplace_back(0, leaf);
    fixtures.push_back({"10-star", star, 1});

    std::string wrong;
    for (const Fixture& f : fixtures) {
      const gssel::bnb::SolveResult result =
          gssel::bnb::solve(gssel::instance::encode_node_cover(f.graph));
      if (!result.feasible() || *result.optimum != f.cover) {
        wrong += ' ';
        wrong += f.name;
      }
    }
    std::ostringstream detail;
    detail << "minimum node covers exact on triangle/path-3/5-cycle/K5/10-star";
    if (!wrong.empty()) detail << " — wrong:" << wrong;
    report(7, wrong.empty(), detail.str());
  }

  // --- Criterion 8: repeated protocol run is byte-identical. ---
  {
    const std::vector<gssel::bench::BenchmarkReport> again =
        gssel::bench::run_benchmark(protocol);
    std::ostringstream first, second;
    gssel::bench::write_report_json(reports, protocol, first);
    gssel::bench::write_report_json(again, protocol, second);
    const bool identical = first.str() == second.str();
    std::ostringstream detail;
    detail << "repeating the protocol with master seed " << protocol.seed
           << " reproduces the JSON report byte for byte";
    report(8, identical, detail.str());
  }

  std::cout << (8 - failures) << "/8 criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
