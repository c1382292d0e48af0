#ifndef GSSEL_TYPES_HPP
#define GSSEL_TYPES_HPP

#include <cstdint>
#include <utility>
#include <vector>

// Core value types shared by every module. All of them are immutable after
// construction by convention and safe to share across concurrent solver runs.

namespace gssel {

// A ground-station selection scenario: K candidate stations, T time periods,
// per-station per-period outage probabilities and the maximum tolerated
// system outage probability for each period.
struct ProblemInstance {
  int num_stations = 0;                     // K >= 1
  int num_periods = 0;                      // T >= 1
  std::vector<std::vector<double>> outage;  // K x T, entries in (0, 1]
  std::vector<double> required_outage;      // length T, entries in (0, 1]

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
};

// 0/1 vector over the K candidate stations; 1 means the station is installed.
struct Selection {
  std::vector<std::uint8_t> chosen;

  int cardinality() const {
    int c = 0;
    for (auto v : chosen) c += v;
    return c;
  }

  void validate(int num_stations) const;
};

// Undirected simple graph used to build minimum-node-cover instances.
// Nodes are 0-based indices; edges are unordered pairs without self-loops
// or duplicates.
struct NodeCoverGraph {
  int num_nodes = 0;
  std::vector<std::pair<int, int>> edges;

  void validate() const;
};

// Covering program in log units: minimize the number of chosen columns z
// subject to alpha * z >= beta componentwise, z binary. Produced from a
// ProblemInstance by transform::to_bilp or from a graph by
// instance::encode_node_cover. A row count of zero is legal (a graph with no
// edges yields an unconstrained program).
struct BilpInstance {
  int num_vars = 0;                        // K >= 1
  std::vector<std::vector<double>> alpha;  // T rows of length num_vars, finite, >= 0
  std::vector<double> beta;                // length T, finite, >= 0

  int num_rows() const { return static_cast<int>(alpha.size()); }

  void validate() const;
};

}  // namespace gssel

#endif  // GSSEL_TYPES_HPP
