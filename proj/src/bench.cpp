#include "gssel/bench.hpp"

#include <omp.h>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "gssel/greedy.hpp"
#include "gssel/instance.hpp"
#include "gssel/oracle.hpp"
#include "gssel/rng.hpp"
#include "gssel/tolerances.hpp"
#include "gssel/transform.hpp"

namespace gssel::bench {

namespace {

// Uniform draws on [0.1, 1] with a 99.9% requirement are frequently
// infeasible outright (no subset covers every period), so scenarios are
// redrawn until the feasibility condition holds. The guard only exists to
// turn pathological parameter choices into an error instead of a spin.
constexpr std::uint64_t kMaxAttempts = 1'000'000;

bool feasible_closed_form(const BilpInstance& bilp) {
  for (int t = 0; t < bilp.num_rows(); ++t) {
    double rowsum = 0.0;
    for (double a : bilp.alpha[t]) rowsum += a;
    if (rowsum < bilp.beta[t] - tol::eps_feas) return false;
  }
  return true;
}

struct ScenarioOutcome {
  int selected = 0;
  std::int64_t iterations = 0;
  std::int64_t first_opt = 0;
  std::uint8_t greedy_optimal = 0;
  std::uint8_t mismatch = 0;
  std::uint8_t exhausted = 0;
  std::uint64_t seed = 0;
};

// Runs one scenario end to end. Never throws: failures are reported through
// the outcome flags so the parallel loop stays exception-free, and the caller
// rethrows deterministically (lowest scenario index first).
ScenarioOutcome run_scenario(const BenchmarkConfig& config, int k_value, int index) {
  ScenarioOutcome out;
  for (std::uint64_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::uint64_t seed = derive_scenario_seed(
        config.seed, static_cast<std::uint64_t>(k_value),
        static_cast<std::uint64_t>(index), attempt);
    const ProblemInstance inst = instance::generate_uniform(
        k_value, config.num_periods, config.low, config.high,
        config.required_availability, seed);
    const BilpInstance bilp = transform::to_bilp(inst);
    if (!feasible_closed_form(bilp)) continue;

    out.seed = seed;
    const bnb::SolveResult result = bnb::solve(bilp);
    if (!result.feasible()) {  // cannot happen: same test as the root node's
      out.mismatch = 1;
      return out;
    }
    out.selected = *result.optimum;
    out.iterations = result.total_iterations;
    out.first_opt = result.iterations_to_first_optimum;

    const greedy::GreedyResult heuristic = greedy::run_greedy(bilp.alpha, bilp.beta);
    out.greedy_optimal = heuristic.cardinality == out.selected ? 1 : 0;

    if (k_value <= config.oracle_cap) {
      const oracle::EsaResult truth = oracle::solve_exhaustive(bilp, k_value);
      const bool agrees = truth.optimum.has_value() &&
                          *truth.optimum == *result.optimum &&
                          result.solution.cardinality() == *result.optimum &&
                          transform::is_feasible(bilp, result.solution);
      if (!agrees) out.mismatch = 1;
    }
    return out;
  }
  out.exhausted = 1;
  return out;
}

class Accumulator {
 public:
  void add(double x) {
    values_.push_back(x);
  }

  double mean() const {
    if (values_.empty()) return 0.0;
    double sum = 0.0;
    for (double x : values_) sum += x;
    return sum / static_cast<double>(values_.size());
  }

  // Population standard deviation (divide by n), two-pass for stability.
  double stddev() const {
    if (values_.empty()) return 0.0;
    const double m = mean();
    double sq = 0.0;
    for (double x : values_) sq += (x - m) * (x - m);
    return std::sqrt(sq / static_cast<double>(values_.size()));
  }

 private:
  std::vector<double> values_;
};

void validate_config(const BenchmarkConfig& config) {
  if (config.k_values.empty())
    throw std::invalid_argument("k_values must not be empty");
  for (int k : config.k_values)
    if (k < 1 || k > 62)
      throw std::invalid_argument("k_values entries must be in [1, 62]");
  if (config.num_scenarios < 1)
    throw std::invalid_argument("num_scenarios must be >= 1");
  if (config.num_periods < 1)
    throw std::invalid_argument("num_periods must be >= 1");
  if (!(config.required_availability > 0.0) || !(config.required_availability < 1.0))
    throw std::invalid_argument("required_availability must lie in (0, 1)");
  if (!(config.low > 0.0) || !(config.low <= config.high) || !(config.high <= 1.0))
    throw std::invalid_argument("outage interval must satisfy 0 < low <= high <= 1");
  if (config.oracle_cap < 0)
    throw std::invalid_argument("oracle_cap must be >= 0");
  if (config.num_threads < 0)
    throw std::invalid_argument("num_threads must be >= 0");
}

}  // namespace

std::vector<BenchmarkReport> run_benchmark(const BenchmarkConfig& config) {
  validate_config(config);
  const int n = config.num_scenarios;
  const int threads =
      config.num_threads > 0 ? config.num_threads : omp_get_max_threads();

  std::vector<BenchmarkReport> reports;
  reports.reserve(config.k_values.size());

  for (const int k_value : config.k_values) {
    std::vector<ScenarioOutcome> outcomes(n);

    // Scenario solves are independent; all shared inputs are read-only.
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (int i = 0; i < n; ++i) outcomes[i] = run_scenario(config, k_value, i);

    for (int i = 0; i < n; ++i) {
      if (outcomes[i].exhausted) {
        std::ostringstream msg;
        msg << "no feasible scenario after " << kMaxAttempts
            << " attempts (K=" << k_value << ", scenario=" << i << ")";
        throw std::runtime_error(msg.str());
      }
      if (outcomes[i].mismatch) {
        std::ostringstream msg;
        msg << "solver/oracle mismatch at K=" << k_value << ", scenario=" << i
            << ", seed=" << outcomes[i].seed;
        throw OracleMismatchError(msg.str(), k_value, i, outcomes[i].seed);
      }
    }

    // Fixed index order keeps floating-point sums, and hence the report
    // bytes, independent of the thread count.
    Accumulator selected, iterations, first_opt;
    int greedy_hits = 0;
    for (int i = 0; i < n; ++i) {
      selected.add(static_cast<double>(outcomes[i].selected));
      iterations.add(static_cast<double>(outcomes[i].iterations));
      first_opt.add(static_cast<double>(outcomes[i].first_opt));
      greedy_hits += outcomes[i].greedy_optimal;
    }

    BenchmarkReport report;
    report.k_value = k_value;
    report.num_scenarios = n;
    report.mean_selected = selected.mean();
    report.mean_iterations = iterations.mean();
    report.std_iterations = iterations.stddev();
    report.mean_iters_to_first_opt = first_opt.mean();
    report.std_iters_to_first_opt = first_opt.stddev();
    report.pct_greedy_optimal =
        100.0 * static_cast<double>(greedy_hits) / static_cast<double>(n);
    report.iteration_upper_bound = (std::int64_t{1} << (k_value + 1)) - 1;
    reports.push_back(report);
  }
  return reports;
}

void emit_trace_csv(const bnb::SolveResult& result, std::ostream& out) {
  out << "iteration,incumbent_U,active_list_L,event\n";
  for (const bnb::TraceRecord& record : result.trace)
    out << record.iteration << ',' << record.incumbent << ','
        << record.active_list_length << ',' << bnb::to_string(record.event) << '\n';
}

void emit_trace_csv_file(const bnb::SolveResult& result, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open trace output file: " + path);
  emit_trace_csv(result, out);
  out.flush();
  if (!out) throw std::runtime_error("failed writing trace output file: " + path);
}

void write_report_json(const std::vector<BenchmarkReport>& reports,
                       const BenchmarkConfig& config, std::ostream& out) {
  nlohmann::ordered_json doc;
  doc["format"] = 1;
  doc["config"] = nlohmann::ordered_json{
      {"k_values", config.k_values},
      {"num_scenarios", config.num_scenarios},
      {"num_periods", config.num_periods},
      {"required_availability", config.required_availability},
      {"seed", config.seed},
      {"oracle_cap", config.oracle_cap},
      {"low", config.low},
      {"high", config.high},
  };
  // num_threads is deliberately left out: the report must not depend on it.
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const BenchmarkReport& r : reports) {
    rows.push_back(nlohmann::ordered_json{
        {"k_value", r.k_value},
        {"num_scenarios", r.num_scenarios},
        {"mean_selected", r.mean_selected},
        {"mean_iterations", r.mean_iterations},
        {"std_iterations", r.std_iterations},
        {"mean_iters_to_first_opt", r.mean_iters_to_first_opt},
        {"std_iters_to_first_opt", r.std_iters_to_first_opt},
        {"pct_greedy_optimal", r.pct_greedy_optimal},
        {"iteration_upper_bound", r.iteration_upper_bound},
    });
  }
  doc["reports"] = std::move(rows);
  out << doc.dump(2) << '\n';
}

void write_report_table(const std::vector<BenchmarkReport>& reports,
                        std::ostream& out) {
  const std::ios_base::fmtflags saved_flags = out.flags();
  const std::streamsize saved_precision = out.precision();

  out << std::right << std::fixed << std::setprecision(2);
  out << std::setw(5) << "K" << std::setw(11) << "scenarios" << std::setw(15)
      << "mean_selected" << std::setw(12) << "mean_iters" << std::setw(11)
      << "std_iters" << std::setw(16) << "first_opt_mean" << std::setw(15)
      << "first_opt_std" << std::setw(16) << "greedy_opt_pct" << std::setw(13)
      << "iter_bound" << '\n';
  for (const BenchmarkReport& r : reports)
    out << std::setw(5) << r.k_value << std::setw(11) << r.num_scenarios
        << std::setw(15) << r.mean_selected << std::setw(12) << r.mean_iterations
        << std::setw(11) << r.std_iterations << std::setw(16)
        << r.mean_iters_to_first_opt << std::setw(15) << r.std_iters_to_first_opt
        << std::setw(16) << r.pct_greedy_optimal << std::setw(13)
        << r.iteration_upper_bound << '\n';

  out.flags(saved_flags);
  out.precision(saved_precision);
}

}  // namespace gssel::bench
