// Compares the serial reference kernels with their OpenMP counterparts:
// exhaustive search (serial early-exit scan vs parallel level scan) and a
// benchmark batch (one worker vs all workers). Results must agree exactly;
// the timings show what the parallel kernels buy.

#include <omp.h>

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "gssel/bench.hpp"
#include "gssel/instance.hpp"
#include "gssel/oracle.hpp"
#include "gssel/rng.hpp"
#include "gssel/tolerances.hpp"
#include "gssel/transform.hpp"

namespace {

// First feasible scenario for the oracle comparison, drawn the same way the
// benchmark harness draws its scenarios.
gssel::BilpInstance feasible_instance(int k, int periods, std::uint64_t seed) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::uint64_t s = gssel::derive_scenario_seed(seed, k, 0, attempt);
    const gssel::ProblemInstance inst =
        gssel::instance::generate_uniform(k, periods, 0.1, 1.0, 0.999, s);
    const gssel::BilpInstance bilp = gssel::transform::to_bilp(inst);
    bool feasible = true;
    for (int t = 0; t < bilp.num_rows() && feasible; ++t) {
      double rowsum = 0.0;
      for (double a : bilp.alpha[t]) rowsum += a;
      if (rowsum < bilp.beta[t] - gssel::tol::eps_feas) feasible = false;
    }
    if (feasible) return bilp;
    if (attempt > 1000000) throw std::runtime_error("no feasible instance found");
  }
}

void print_row(const std::string& name, double serial_s, double parallel_s,
               const std::string& note) {
  std::cout << std::left << std::setw(8) << name << std::right << std::fixed
            << std::setprecision(3) << "serial " << std::setw(8) << serial_s
            << "s  parallel " << std::setw(8) << parallel_s << "s  speedup "
            << std::setprecision(2) << serial_s / parallel_s << "x  (" << note
            << ")\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Timing comparison: serial reference vs OpenMP kernels"};
  int oracle_k = 22;
  int bench_k = 12;
  int scenarios = 40;
  std::uint64_t seed = 20260818;
  app.add_option("--oracle-k", oracle_k, "Station count for the oracle comparison");
  app.add_option("--bench-k", bench_k, "Station count for the batch comparison");
  app.add_option("--scenarios", scenarios, "Scenarios in the batch comparison");
  app.add_option("--seed", seed, "RNG seed");
  CLI11_PARSE(app, argc, argv);

  std::cout << "threads available: " << omp_get_max_threads() << "\n\n";

  {
    const gssel::BilpInstance bilp = feasible_instance(oracle_k, 12, seed);

    double t0 = omp_get_wtime();
    const gssel::oracle::EsaResult serial = gssel::oracle::solve_exhaustive(bilp, oracle_k);
    double t1 = omp_get_wtime();
    const gssel::oracle::EsaResult parallel =
        gssel::oracle::solve_exhaustive_parallel(bilp, oracle_k);
    double t2 = omp_get_wtime();

    const bool same = serial.optimum == parallel.optimum &&
                      serial.selection.chosen == parallel.selection.chosen;
    if (!same) {
      std::cerr << "error: oracle kernels disagree\n";
      return 1;
    }
    std::ostringstream note;
    note << "K=" << oracle_k << ", optimum=" << *serial.optimum << ", results identical";
    print_row("oracle", t1 - t0, t2 - t1, note.str());
  }

  {
    gssel::bench::BenchmarkConfig config;
    config.k_values = {bench_k};
    config.num_scenarios = scenarios;
    config.seed = seed;

    config.num_threads = 1;
    double t0 = omp_get_wtime();
    const auto serial = gssel::bench::run_benchmark(config);
    double t1 = omp_get_wtime();
    config.num_threads = 0;
    const auto parallel = gssel::bench::run_benchmark(config);
    double t2 = omp_get_wtime();

    std::ostringstream a, b;
    config.num_threads = 1;
    gssel::bench::write_report_json(serial, config, a);
    gssel::bench::write_report_json(parallel, config, b);
    if (a.str() != b.str()) {
      std::cerr << "error: batch reports differ across thread counts\n";
      return 1;
    }
    std::ostringstream note;
    note << "K=" << bench_k << ", " << scenarios << " scenarios, reports byte-identical";
    print_row("bench", t1 - t0, t2 - t1, note.str());
  }

  return 0;
}
