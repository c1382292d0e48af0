#include "gssel/instance.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "gssel/rng.hpp"
#include "json.hpp"

namespace gssel::instance {

ProblemInstance generate_uniform(int num_stations, int num_periods, double low,
                                 double high, double required_availability,
                                 std::uint64_t seed) {
  if (num_stations < 1) throw std::invalid_argument("num_stations must be >= 1");
  if (num_periods < 1) throw std::invalid_argument("num_periods must be >= 1");
  if (!(low > 0.0 && low <= high && high <= 1.0))
    throw std::invalid_argument("probability bounds must satisfy 0 < low <= high <= 1");
  if (!(required_availability > 0.0 && required_availability < 1.0))
    throw std::invalid_argument("required_availability must be in (0, 1)");

  SplitMix64 rng(seed);
  ProblemInstance inst;
  inst.num_stations = num_stations;
  inst.num_periods = num_periods;
  inst.outage.assign(num_stations, std::vector<double>(num_periods));
  for (int k = 0; k < num_stations; ++k)
    for (int t = 0; t < num_periods; ++t)
      inst.outage[k][t] = rng.next_uniform(low, high);
  inst.required_outage.assign(num_periods, 1.0 - required_availability);
  return inst;
}

BilpInstance encode_node_cover(const NodeCoverGraph& graph) {
  graph.validate();
  BilpInstance bilp;
  bilp.num_vars = graph.num_nodes;
  bilp.alpha.reserve(graph.edges.size());
  for (const auto& [n, m] : graph.edges) {
    std::vector<double> row(graph.num_nodes, 0.0);
    row[n] = 1.0;
    row[m] = 1.0;
    bilp.alpha.push_back(std::move(row));
    bilp.beta.push_back(1.0);
  }
  return bilp;
}

namespace {

using nlohmann::json;

json require_key(const json& doc, const char* key) {
  if (!doc.contains(key))
    throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

}  // namespace

ProblemInstance read_instance_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("instance document must be a JSON object");
  if (doc.contains("format") && doc.at("format") != 1)
    throw std::invalid_argument("unsupported \"format\" (expected 1)");

  ProblemInstance inst;
  try {
    inst.num_stations = require_key(doc, "num_stations").get<int>();
    inst.num_periods = require_key(doc, "num_periods").get<int>();
    inst.outage = require_key(doc, "outage").get<std::vector<std::vector<double>>>();
    inst.required_outage = require_key(doc, "required_outage").get<std::vector<double>>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("ill-typed instance field: ") + e.what());
  }
  inst.validate();
  return inst;
}

ProblemInstance read_instance_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open instance file: " + path);
  return read_instance_json(in);
}

void write_instance_json(const ProblemInstance& inst, std::ostream& out) {
  json doc;
  doc["format"] = 1;
  doc["num_stations"] = inst.num_stations;
  doc["num_periods"] = inst.num_periods;
  doc["outage"] = inst.outage;
  doc["required_outage"] = inst.required_outage;
  out << doc.dump(2) << '\n';
}

void write_instance_json_file(const ProblemInstance& inst, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  write_instance_json(inst, out);
  if (!out) throw std::runtime_error("write failed: " + path);
}

NodeCoverGraph read_graph(std::istream& in) {
  NodeCoverGraph graph;
  int num_edges = 0;
  if (!(in >> graph.num_nodes >> num_edges))
    throw std::invalid_argument("graph header must be \"N M\"");
  if (num_edges < 0) throw std::invalid_argument("edge count must be >= 0");
  graph.edges.reserve(num_edges);
  for (int e = 0; e < num_edges; ++e) {
    int n = 0, m = 0;
    if (!(in >> n >> m))
      throw std::invalid_argument("edge line " + std::to_string(e + 1) +
                                  " must be \"n m\"");
    // File indices are 1-based.
    graph.edges.emplace_back(n - 1, m - 1);
  }
  graph.validate();
  return graph;
}

NodeCoverGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  return read_graph(in);
}

}  // namespace gssel::instance
