#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mwlp/graph.hpp"
#include "mwlp/rng.hpp"

namespace mwlp {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Importance band -> repair duration range. Bands are half-open
// [min_importance, max_importance); a boundary importance falls in the band
// whose minimum equals it.
struct RepairBand {
  double min_importance = 0.0;
  double max_importance = std::numeric_limits<double>::infinity();
  double lo_hours = 0.0;
  double hi_hours = 0.0;
};

inline std::vector<RepairBand> default_repair_table() {
  return {
      {0.0, 10.0, 2.0, 4.0},
      {10.0, 100.0, 2.0, 6.0},
      {100.0, 1000.0, 3.0, 8.0},
      {1000.0, std::numeric_limits<double>::infinity(), 5.0, 10.0},
  };
}

inline const RepairBand& repair_band_for(const std::vector<RepairBand>& table,
                                         double importance) {
  for (const RepairBand& band : table) {
    if (importance >= band.min_importance && importance < band.max_importance)
      return band;
  }
  throw std::invalid_argument("repair table does not cover importance " +
                              std::to_string(importance));
}

struct InstanceParams {
  int n = 201;
  int m = 20;
  int importance_min = 1;
  int importance_max = 1500;
  double travel_min_minutes = 30.0;
  double travel_max_minutes = 60.0;
  std::vector<RepairBand> repair_table = default_repair_table();
  std::uint64_t seed = 0;
};

// Rounds to six decimals, the precision of the instance file format.
// Generated graphs are quantized at construction so that saving and loading
// them is a bit-exact identity.
inline double quantize6(double x) { return std::round(x * 1e6) / 1e6; }

// Random environment: integer importances, symmetric travel times (one draw
// per unordered pair), destination repair time from the band matching the
// destination's importance. d(u -> v) = travel(u,v) + repair(v), so edges
// come out asymmetric. Deterministic per seed; the draw order is fixed
// (importances, then repair times, then travel by ascending pair).
inline Graph generate_random_instance(const InstanceParams& params) {
  if (params.n < 1) throw std::invalid_argument("node count must be positive");
  if (params.importance_min > params.importance_max ||
      params.travel_min_minutes > params.travel_max_minutes)
    throw std::invalid_argument("empty parameter range");

  Rng rng(params.seed);
  Graph g = Graph::make(params.n, 0);
  for (int v = 1; v < params.n; ++v) {
    g.importance[v] = static_cast<double>(
        uniform_int(rng, params.importance_min, params.importance_max));
  }
  for (int v = 1; v < params.n; ++v) {
    const RepairBand& band = repair_band_for(params.repair_table, g.importance[v]);
    g.repair_minutes[v] =
        quantize6(uniform_real(rng, band.lo_hours * 60.0, band.hi_hours * 60.0));
  }
  for (int u = 0; u < params.n; ++u) {
    for (int v = u + 1; v < params.n; ++v) {
      const double travel = quantize6(
          uniform_real(rng, params.travel_min_minutes, params.travel_max_minutes));
      g.set_edge(u, v, quantize6(travel + g.repair_minutes[v]));
      g.set_edge(v, u, quantize6(travel + g.repair_minutes[u]));
    }
  }
  return g;
}

// Pre-exported road network: intersections with coordinates, undirected road
// segments with lengths in meters, a subset of intersections marked as
// repair targets, and a depot intersection.
struct RoadNetwork {
  struct Intersection {
    long long id = 0;
    double x = 0.0;
    double y = 0.0;
  };
  struct Segment {
    long long a = 0;
    long long b = 0;
    double meters = 0.0;
  };
  struct Target {
    long long id = 0;
    double importance = 0.0;
  };

  std::vector<Intersection> intersections;
  std::vector<Segment> segments;
  std::vector<Target> targets;
  long long depot_id = 0;
  bool has_depot = false;
};

namespace detail {

// Dijkstra over the road network from one source; distances in meters.
inline std::vector<double> shortest_distances(
    const std::vector<std::vector<std::pair<int, double>>>& adjacency,
    int source) {
  std::vector<double> dist(adjacency.size(),
                           std::numeric_limits<double>::infinity());
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[source] = 0.0;
  queue.emplace(0.0, source);
  while (!queue.empty()) {
    const auto [d, u] = queue.top();
    queue.pop();
    if (d > dist[u]) continue;
    for (const auto& [v, len] : adjacency[u]) {
      if (dist[u] + len < dist[v]) {
        dist[v] = dist[u] + len;
        queue.emplace(dist[v], v);
      }
    }
  }
  return dist;
}

}  // namespace detail

// Complete graph over the targets plus the depot. Travel between two graph
// nodes is the shortest road distance divided by `speed` (distance units per
// minute); the destination's repair time is folded into incoming edges.
// Node 0 of the result is the depot, followed by the targets in file order.
// `repair_minutes` aligns with the target list; empty means all zero.
inline Graph metric_closure(const RoadNetwork& network, double speed,
                            const std::vector<double>& repair_minutes = {}) {
  if (speed <= 0.0) throw std::invalid_argument("speed must be positive");
  if (!network.has_depot) throw std::invalid_argument("road network has no depot");
  if (!repair_minutes.empty() && repair_minutes.size() != network.targets.size())
    throw std::invalid_argument("repair vector does not match target count");

  std::map<long long, int> index_of;
  for (const auto& node : network.intersections) {
    if (!index_of.emplace(node.id, static_cast<int>(index_of.size())).second)
      throw std::invalid_argument("duplicate intersection id " +
                                  std::to_string(node.id));
  }
  auto resolve = [&](long long id) {
    const auto it = index_of.find(id);
    if (it == index_of.end())
      throw std::invalid_argument("unknown intersection id " + std::to_string(id));
    return it->second;
  };

  std::vector<std::vector<std::pair<int, double>>> adjacency(index_of.size());
  for (const auto& seg : network.segments) {
    const int a = resolve(seg.a);
    const int b = resolve(seg.b);
    adjacency[a].emplace_back(b, seg.meters);
    adjacency[b].emplace_back(a, seg.meters);
  }

  // Graph nodes: depot first, then targets that are not the depot itself.
  std::vector<long long> ids{network.depot_id};
  std::vector<double> importances{0.0};
  std::vector<double> repairs{0.0};
  for (std::size_t t = 0; t < network.targets.size(); ++t) {
    if (network.targets[t].id == network.depot_id) continue;
    ids.push_back(network.targets[t].id);
    importances.push_back(network.targets[t].importance);
    repairs.push_back(repair_minutes.empty() ? 0.0 : repair_minutes[t]);
  }

  const int n = static_cast<int>(ids.size());
  Graph g = Graph::make(n, 0);
  g.importance = importances;
  g.repair_minutes = repairs;

  std::vector<std::vector<double>> travel(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto dist = detail::shortest_distances(adjacency, resolve(ids[i]));
    travel[i].resize(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
      const double d = dist[resolve(ids[j])];
      if (!std::isfinite(d))
        throw std::invalid_argument("road network: node " +
                                    std::to_string(ids[j]) +
                                    " unreachable from " + std::to_string(ids[i]));
      travel[i][j] = d / speed;
    }
  }
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) g.set_edge(u, v, travel[u][v] + g.repair_minutes[v]);
  return g;
}

namespace detail {

inline std::string format6(double x) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

}  // namespace detail

// Instance file, version 1:
//   mwlp 1
//   n <count> depot <index>
//   node <index> <importance> <repair_minutes>     (n lines)
//   edge <u> <v> <d_minutes>                       (n*(n-1) lines)
// Edges carry travel plus destination repair, already folded.
inline void save_instance(const Graph& g, std::ostream& out) {
  out << "mwlp 1\n";
  out << "n " << g.n << " depot " << g.depot << "\n";
  for (int v = 0; v < g.n; ++v) {
    out << "node " << v << ' ' << detail::format6(g.importance[v]) << ' '
        << detail::format6(g.repair_minutes[v]) << "\n";
  }
  for (int u = 0; u < g.n; ++u) {
    for (int v = 0; v < g.n; ++v) {
      if (u == v) continue;
      out << "edge " << u << ' ' << v << ' ' << detail::format6(g.edge(u, v))
          << "\n";
    }
  }
}

inline void save_instance(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  save_instance(g, out);
}

inline Graph load_instance(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_line = [&](const char* what) {
    if (!std::getline(in, line))
      throw parse_error("line " + std::to_string(line_no + 1) +
                        ": unexpected end of file, expected " + what);
    ++line_no;
  };

  next_line("header");
  {
    std::istringstream ls(line);
    std::string tag;
    int version = 0;
    if (!(ls >> tag >> version) || tag != "mwlp" || version != 1)
      throw parse_error("line 1: expected header 'mwlp 1'");
  }

  next_line("size line");
  int n = 0, depot = 0;
  {
    std::istringstream ls(line);
    std::string ntag, dtag;
    if (!(ls >> ntag >> n >> dtag >> depot) || ntag != "n" || dtag != "depot")
      throw parse_error("line 2: expected 'n <count> depot <index>'");
    if (n < 1 || depot < 0 || depot >= n)
      throw parse_error("line 2: invalid node count or depot index");
  }

  Graph g = Graph::make(n, depot);
  for (int k = 0; k < n; ++k) {
    next_line("node line");
    std::istringstream ls(line);
    std::string tag;
    int index = 0;
    double importance = 0.0, repair = 0.0;
    if (!(ls >> tag >> index >> importance >> repair) || tag != "node")
      throw parse_error("line " + std::to_string(line_no) +
                        ": expected 'node <index> <importance> <repair>'");
    if (index != k)
      throw parse_error("line " + std::to_string(line_no) +
                        ": node lines must be in index order");
    g.importance[k] = importance;
    g.repair_minutes[k] = repair;
  }
  for (int k = 0; k < n * (n - 1); ++k) {
    next_line("edge line");
    std::istringstream ls(line);
    std::string tag;
    int u = 0, v = 0;
    double d = 0.0;
    if (!(ls >> tag >> u >> v >> d) || tag != "edge")
      throw parse_error("line " + std::to_string(line_no) +
                        ": expected 'edge <u> <v> <d>'");
    if (u < 0 || u >= n || v < 0 || v >= n || u == v)
      throw parse_error("line " + std::to_string(line_no) +
                        ": edge endpoints out of range");
    g.set_edge(u, v, d);
  }
  return g;
}

inline Graph load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open " + path);
  return load_instance(in);
}

// Road network file: any mix of
//   xnode <id> <x> <y>
//   seg <id1> <id2> <meters>
//   target <id> <importance>
//   depot <id>
inline RoadNetwork load_road_network(std::istream& in) {
  RoadNetwork network;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    auto fail = [&](const char* expected) {
      throw parse_error("line " + std::to_string(line_no) + ": expected " +
                        expected);
    };
    if (tag == "xnode") {
      RoadNetwork::Intersection node;
      if (!(ls >> node.id >> node.x >> node.y)) fail("'xnode <id> <x> <y>'");
      network.intersections.push_back(node);
    } else if (tag == "seg") {
      RoadNetwork::Segment seg;
      if (!(ls >> seg.a >> seg.b >> seg.meters)) fail("'seg <id1> <id2> <meters>'");
      network.segments.push_back(seg);
    } else if (tag == "target") {
      RoadNetwork::Target target;
      if (!(ls >> target.id >> target.importance)) fail("'target <id> <importance>'");
      network.targets.push_back(target);
    } else if (tag == "depot") {
      if (!(ls >> network.depot_id)) fail("'depot <id>'");
      network.has_depot = true;
    } else {
      throw parse_error("line " + std::to_string(line_no) +
                        ": unknown record '" + tag + "'");
    }
  }
  return network;
}

inline RoadNetwork load_road_network(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open " + path);
  return load_road_network(in);
}

}  // namespace mwlp
