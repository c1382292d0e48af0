#ifndef GSSEL_INSTANCE_HPP
#define GSSEL_INSTANCE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "gssel/types.hpp"

namespace gssel::instance {

// Draws every outage entry i.i.d. uniform on the closed interval [low, high]
// (SplitMix64 stream, station-major order) and sets every period's required
// outage to 1 - required_availability. The same seed reproduces the instance
// bit for bit.
//
// Requires 0 < low <= high <= 1, 0 < required_availability < 1 and counts
// >= 1; otherwise throws std::invalid_argument.
ProblemInstance generate_uniform(int num_stations, int num_periods, double low,
                                 double high, double required_availability,
                                 std::uint64_t seed);

// Encodes minimum node cover as a covering program: one variable per node,
// one row per edge {n, m} with coefficient 1 in columns n and m and
// right-hand side 1. A graph with no edges yields a row-free program whose
// optimum is 0. Throws std::invalid_argument on an empty node set.
BilpInstance encode_node_cover(const NodeCoverGraph& graph);

// --- File formats (documented byte for byte in the README) ---

// Instance JSON:
//   {"format": 1, "num_stations": K, "num_periods": T,
//    "outage": [[p_1_1, ..., p_1_T], ..., [p_K_1, ..., p_K_T]],
//    "required_outage": [q_1, ..., q_T]}
// The reader accepts a missing "format" key (treated as 1) and rejects any
// other version; invariant violations throw std::invalid_argument naming the
// offending field.
ProblemInstance read_instance_json(std::istream& in);
ProblemInstance read_instance_json_file(const std::string& path);
void write_instance_json(const ProblemInstance& inst, std::ostream& out);
void write_instance_json_file(const ProblemInstance& inst, const std::string& path);

// Graph file: first line "N M", then M lines "n m" with 1-based node indices.
NodeCoverGraph read_graph(std::istream& in);
NodeCoverGraph read_graph_file(const std::string& path);

}  // namespace gssel::instance

#endif  // GSSEL_INSTANCE_HPP
