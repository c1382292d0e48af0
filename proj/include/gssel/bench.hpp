#ifndef GSSEL_BENCH_HPP
#define GSSEL_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "gssel/bnb.hpp"

// Batch experiment harness: generates seeded random scenarios per station
// count, solves each with branch-and-bound (cross-checked against the
// exhaustive oracle up to a size cap), and aggregates per-batch statistics.
//
// Scenarios are solved in parallel (OpenMP) with per-scenario seeds derived
// from (master seed, K, scenario index, attempt), and statistics are
// accumulated in scenario order after the parallel region, so a report is
// byte-identical for a given seed at any thread count.

namespace gssel::bench {

struct BenchmarkConfig {
  std::vector<int> k_values;
  int num_scenarios = 0;
  int num_periods = 12;
  double required_availability = 0.999;
  std::uint64_t seed = 0;
  int oracle_cap = 15;     // oracle cross-check runs only for K <= oracle_cap
  double low = 0.1;        // outage draw interval
  double high = 1.0;
  int num_threads = 0;     // 0 = OpenMP default
};

struct BenchmarkReport {
  int k_value = 0;
  int num_scenarios = 0;
  double mean_selected = 0.0;
  double mean_iterations = 0.0;
  double std_iterations = 0.0;  // population formula (divide by n)
  double mean_iters_to_first_opt = 0.0;
  double std_iters_to_first_opt = 0.0;
  // Share of scenarios where the greedy method alone, run on the root
  // problem, already matched the optimum.
  double pct_greedy_optimal = 0.0;
  std::int64_t iteration_upper_bound = 0;  // 2^(K+1) - 1
};

// Raised when branch-and-bound and the oracle disagree on any scenario; the
// offending seed is carried so the instance can be replayed.
class OracleMismatchError : public std::runtime_error {
 public:
  OracleMismatchError(const std::string& what, int k_value, int scenario,
                      std::uint64_t seed)
      : std::runtime_error(what), k_value(k_value), scenario(scenario), seed(seed) {}
  int k_value;
  int scenario;
  std::uint64_t seed;
};

// One report per entry of config.k_values. Scenarios are drawn uniform on
// [low, high] and redrawn (with attempt-indexed seeds) until the feasibility
// condition holds, so every scenario is solvable; a batch whose parameters
// make feasible draws practically impossible fails after a large attempt
// guard rather than spinning forever.
std::vector<BenchmarkReport> run_benchmark(const BenchmarkConfig& config);

// CSV "iteration,incumbent_U,active_list_L,event", one row per trace record.
void emit_trace_csv(const bnb::SolveResult& result, std::ostream& out);
void emit_trace_csv_file(const bnb::SolveResult& result, const std::string& path);

// Machine-readable report (stable key order, byte-identical per seed).
void write_report_json(const std::vector<BenchmarkReport>& reports,
                       const BenchmarkConfig& config, std::ostream& out);

// Human-readable aligned table.
void write_report_table(const std::vector<BenchmarkReport>& reports,
                        std::ostream& out);

}  // namespace gssel::bench

#endif  // GSSEL_BENCH_HPP
