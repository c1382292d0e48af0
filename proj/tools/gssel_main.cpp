// Command-line front end: solve one instance, generate a random instance, or
// run a benchmark batch. Thin adapter over the library; no solver logic here.
//
// Exit codes: 0 solved to optimality / 1 input or parameter error /
// 2 infeasible instance / 3 solver-oracle mismatch.

#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gssel/bench.hpp"
#include "gssel/bnb.hpp"
#include "gssel/instance.hpp"
#include "gssel/oracle.hpp"
#include "gssel/transform.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitMismatch = 3;

struct SolveArgs {
  std::string instance_path;
  std::string trace_out;
  bool oracle_check = false;
};

struct GenerateArgs {
  int k = 0;
  int periods = 12;
  double availability = 0.999;
  double low = 0.1;
  double high = 1.0;
  std::uint64_t seed = 0;
  std::string out_path;
};

struct BenchArgs {
  gssel::bench::BenchmarkConfig config;
  std::string out_json;
  std::string out_table;
};

// Stations are presented 1-based: [1,2,5].
std::string format_stations(const gssel::Selection& sel) {
  std::string s = "[";
  bool first = true;
  for (std::size_t i = 0; i < sel.chosen.size(); ++i) {
    if (!sel.chosen[i]) continue;
    if (!first) s += ',';
    s += std::to_string(i + 1);
    first = false;
  }
  s += ']';
  return s;
}

int run_solve(const SolveArgs& args) {
  const gssel::ProblemInstance inst =
      gssel::instance::read_instance_json_file(args.instance_path);
  const gssel::BilpInstance bilp = gssel::transform::to_bilp(inst);
  const gssel::bnb::SolveResult result = gssel::bnb::solve(bilp);

  if (!args.trace_out.empty())
    gssel::bench::emit_trace_csv_file(result, args.trace_out);

  if (args.oracle_check) {
    const gssel::oracle::EsaResult truth = gssel::oracle::solve_exhaustive(bilp);
    const bool agrees =
        truth.optimum.has_value() == result.optimum.has_value() &&
        (!truth.optimum || *truth.optimum == *result.optimum);
    if (!agrees) {
      std::cerr << "error: solver disagrees with the exhaustive oracle on "
                << args.instance_path << '\n';
      return kExitMismatch;
    }
  }

  if (!result.feasible()) {
    std::cout << "infeasible\n";
    return kExitInfeasible;
  }

  std::cout << "optimum=" << *result.optimum
            << " stations=" << format_stations(result.solution) << '\n';
  std::cout << std::setprecision(10);
  for (int t = 0; t < inst.num_periods; ++t)
    std::cout << "period " << t + 1 << ": availability="
              << gssel::transform::availability(inst, result.solution, t)
              << " required=" << 1.0 - inst.required_outage[t] << '\n';
  std::cout << "iterations=" << result.total_iterations
            << " first_optimum=" << result.iterations_to_first_optimum << '\n';
  return kExitOk;
}

int run_generate(const GenerateArgs& args) {
  const gssel::ProblemInstance inst = gssel::instance::generate_uniform(
      args.k, args.periods, args.low, args.high, args.availability, args.seed);
  gssel::instance::write_instance_json_file(inst, args.out_path);
  return kExitOk;
}

int run_bench(const BenchArgs& args) {
  const std::vector<gssel::bench::BenchmarkReport> reports =
      gssel::bench::run_benchmark(args.config);

  if (!args.out_json.empty()) {
    std::ofstream out(args.out_json);
    if (!out) throw std::runtime_error("cannot open report file: " + args.out_json);
    gssel::bench::write_report_json(reports, args.config, out);
  }
  if (!args.out_table.empty()) {
    std::ofstream out(args.out_table);
    if (!out) throw std::runtime_error("cannot open report file: " + args.out_table);
    gssel::bench::write_report_table(reports, out);
  }
  gssel::bench::write_report_table(reports, std::cout);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-cardinality ground-station selection solver"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Solve one instance JSON file");
  solve->add_option("instance", solve_args.instance_path, "Instance JSON path")
      ->required();
  solve->add_option("--trace-out", solve_args.trace_out,
                    "Write the branch-and-bound trace as CSV");
  solve->add_flag("--oracle-check", solve_args.oracle_check,
                  "Cross-check the optimum against exhaustive search");

  GenerateArgs gen_args;
  CLI::App* generate = app.add_subcommand("generate", "Generate a random instance");
  generate->add_option("--k", gen_args.k, "Number of candidate stations")->required();
  generate->add_option("--periods", gen_args.periods, "Number of time periods");
  generate->add_option("--availability", gen_args.availability,
                       "Required availability per period");
  generate->add_option("--low", gen_args.low, "Outage draw lower bound");
  generate->add_option("--high", gen_args.high, "Outage draw upper bound");
  generate->add_option("--seed", gen_args.seed, "RNG seed");
  generate->add_option("--out", gen_args.out_path, "Output JSON path")->required();

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "Run a benchmark batch");
  bench->add_option("--k", bench_args.config.k_values, "Station counts (comma separated)")
      ->required()
      ->delimiter(',');
  bench->add_option("--scenarios", bench_args.config.num_scenarios,
                    "Scenarios per station count")
      ->required();
  bench->add_option("--periods", bench_args.config.num_periods, "Time periods");
  bench->add_option("--availability", bench_args.config.required_availability,
                    "Required availability per period");
  bench->add_option("--seed", bench_args.config.seed, "Master RNG seed");
  bench->add_option("--oracle-cap", bench_args.config.oracle_cap,
                    "Cross-check against the oracle for K up to this cap");
  bench->add_option("--low", bench_args.config.low, "Outage draw lower bound");
  bench->add_option("--high", bench_args.config.high, "Outage draw upper bound");
  bench->add_option("--threads", bench_args.config.num_threads,
                    "Worker threads (0 = OpenMP default)");
  bench->add_option("--out-json", bench_args.out_json, "Write the report as JSON");
  bench->add_option("--out-table", bench_args.out_table, "Write the report as text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // prints help or the parse diagnostic
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (solve->parsed()) return run_solve(solve_args);
    if (generate->parsed()) return run_generate(gen_args);
    return run_bench(bench_args);
  } catch (const gssel::bench::OracleMismatchError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}
