#include <vector>

#include <stdexcept>

#include "doctest.h"
#include "gssel/oracle.hpp"
#include "gssel/rng.hpp"
#include "gssel/transform.hpp"

#include "test_helpers.hpp"

namespace {

using gssel::oracle::EsaResult;

}  // namespace

TEST_CASE("solve_exhaustive finds the canonical two-station optimum") {
  const gssel::BilpInstance bilp =
      gssel::transform::to_bilp(testutil::two_station_instance());
  const EsaResult result = gssel::oracle::solve_exhaustive(bilp);
  REQUIRE(result.optimum.has_value());
  CHECK(*result.optimum == 2);
  CHECK(result.selection.chosen == std::vector<std::uint8_t>{1, 1});
}

TEST_CASE("solve_exhaustive handles trivial and impossible requirements") {
  const gssel::BilpInstance zero = testutil::make_bilp({{1.0, 1.0}}, {0.0}, 2);
  const EsaResult empty = gssel::oracle::solve_exhaustive(zero);
  REQUIRE(empty.optimum.has_value());
  CHECK(*empty.optimum == 0);
  CHECK(empty.selection.cardinality() == 0);

  const gssel::BilpInstance bad = testutil::make_bilp({{0.5}}, {1.0}, 1);
  CHECK_FALSE(gssel::oracle::solve_exhaustive(bad).optimum.has_value());
}

TEST_CASE("solve_exhaustive returns the lexicographically smallest optimum") {
  // Variable 0 is useless; 1 and 2 are interchangeable — 1 wins by rank.
  const gssel::BilpInstance bilp =
      testutil::make_bilp({{0.0, 1.0, 1.0}}, {1.0}, 3);
  const EsaResult result = gssel::oracle::solve_exhaustive(bilp);
  REQUIRE(result.optimum.has_value());
  CHECK(*result.optimum == 1);
  CHECK(result.selection.chosen == std::vector<std::uint8_t>{0, 1, 0});

  // Two-element optima: {0,1} precedes {0,2} and {1,2}.
  const gssel::BilpInstance pairs =
      testutil::make_bilp({{1.0, 1.0, 1.0}}, {2.0}, 3);
  const EsaResult pair_result = gssel::oracle::solve_exhaustive(pairs);
  REQUIRE(pair_result.optimum.has_value());
  CHECK(*pair_result.optimum == 2);
  CHECK(pair_result.selection.chosen == std::vector<std::uint8_t>{1, 1, 0});
}

TEST_CASE("solve_exhaustive enforces the size guard") {
  gssel::SplitMix64 rng(5);
  const gssel::BilpInstance bilp = testutil::random_bilp(rng, 6, 3);
  CHECK_THROWS_AS(gssel::oracle::solve_exhaustive(bilp, 5), std::invalid_argument);
  CHECK_THROWS_AS(gssel::oracle::solve_exhaustive_parallel(bilp, 5),
                  std::invalid_argument);
  CHECK_NOTHROW(gssel::oracle::solve_exhaustive(bilp, 6));
}

TEST_CASE("solve_exhaustive matches the bitmask reference") {
  gssel::SplitMix64 rng(9001);
  for (int round = 0; round < 300; ++round) {
    const int vars = 1 + static_cast<int>(rng.next() % 12);
    const int rows = 1 + static_cast<int>(rng.next() % 8);
    const gssel::BilpInstance bilp = testutil::random_bilp(rng, vars, rows);
    const EsaResult result = gssel::oracle::solve_exhaustive(bilp);
    const auto reference = testutil::ref_optimum(bilp);
    REQUIRE(result.optimum.has_value() == reference.has_value());
    if (reference) {
      CHECK(*result.optimum == *reference);
      CHECK(result.selection.cardinality() == *reference);
      CHECK(gssel::transform::is_feasible(bilp, result.selection));
    }
  }
}

TEST_CASE("parallel exhaustive search replicates the serial result exactly") {
  gssel::SplitMix64 rng(31173);
  for (int round = 0; round < 200; ++round) {
    const int vars = 1 + static_cast<int>(rng.next() % 12);
    const int rows = 1 + static_cast<int>(rng.next() % 8);
    const gssel::BilpInstance bilp = testutil::random_bilp(rng, vars, rows);
    const EsaResult serial = gssel::oracle::solve_exhaustive(bilp);
    const EsaResult parallel = gssel::oracle::solve_exhaustive_parallel(bilp);
    REQUIRE(serial.optimum.has_value() == parallel.optimum.has_value());
    if (serial.optimum) {
      CHECK(*serial.optimum == *parallel.optimum);
      CHECK(serial.selection.chosen == parallel.selection.chosen);
    }
  }
}
