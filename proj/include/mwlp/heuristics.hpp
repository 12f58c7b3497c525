#pragma once

#include <cstdint>
#include <vector>

#include "mwlp/graph.hpp"
#include "mwlp/metrics.hpp"

namespace mwlp {

// The two per-subset routing rules used as the partition cost proxy.
// NearestNeighbor picks the unvisited subset node with the smallest edge
// weight from the current node; Greedy picks the one with the highest
// importance. Ties break toward the smallest node index so that seeded
// runs reproduce.
enum class Heuristic { Greedy, NearestNeighbor };

namespace detail {

// Weighted latency of the heuristic route over `subset` (which must contain
// the depot), with one node optionally skipped and one optionally added.
// This is the hot path of the partition optimizer: it walks the route
// without materializing it, using the same accumulation order as path_wlp.
inline double route_wlp(const Graph& g, const std::vector<int>& subset,
                        Heuristic h, int skip = -1, int extra = -1) {
  thread_local std::vector<int> nodes;
  thread_local std::vector<char> used;
  nodes.clear();
  for (int v : subset)
    if (v != skip) nodes.push_back(v);
  if (extra >= 0) nodes.push_back(extra);
  used.assign(nodes.size(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] == g.depot) {
      used[i] = 1;
      break;
    }
  }

  int current = g.depot;
  double t = 0.0;
  double cost = 0.0;
  for (std::size_t step = 1; step < nodes.size(); ++step) {
    int best = -1;
    double best_value = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (used[i]) continue;
      const double value = h == Heuristic::Greedy
                               ? g.importance[nodes[i]]
                               : g.edge(current, nodes[i]);
      const bool better =
          best < 0 ||
          (h == Heuristic::Greedy ? value > best_value : value < best_value) ||
          (value == best_value && nodes[i] < nodes[best]);
      if (better) {
        best = static_cast<int>(i);
        best_value = value;
      }
    }
    used[best] = 1;
    t += g.edge(current, nodes[best]);
    cost += g.importance[nodes[best]] * t;
    current = nodes[best];
  }
  return cost;
}

}  // namespace detail

// Route over every node of `subset`, starting at the depot. `scan_ops`, when
// given, receives the number of candidate scans performed (k(k-1)/2 for a
// k-node subset).
inline Path heuristic_path(const Graph& g, const std::vector<int>& subset,
                           Heuristic h, std::uint64_t* scan_ops = nullptr) {
  Path path;
  path.reserve(subset.size());
  path.push_back(g.depot);
  std::vector<char> used(subset.size(), 0);
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] == g.depot) {
      used[i] = 1;
      break;
    }
  }
  std::uint64_t scans = 0;
  int current = g.depot;
  for (std::size_t step = 1; step < subset.size(); ++step) {
    int best = -1;
    double best_value = 0.0;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (used[i]) continue;
      ++scans;
      const double value = h == Heuristic::Greedy
                               ? g.importance[subset[i]]
                               : g.edge(current, subset[i]);
      const bool better =
          best < 0 ||
          (h == Heuristic::Greedy ? value > best_value : value < best_value) ||
          (value == best_value && subset[i] < subset[best]);
      if (better) {
        best = static_cast<int>(i);
        best_value = value;
      }
    }
    used[best] = 1;
    current = subset[best];
    path.push_back(current);
  }
  if (scan_ops) *scan_ops = scans;
  return path;
}

// Cost proxy c of a subset: the weighted latency of its heuristic route.
// Identical arithmetic to path_wlp(heuristic_path(...)).
inline double subset_cost(const Graph& g, const std::vector<int>& subset,
                          Heuristic h) {
  return detail::route_wlp(g, subset, h);
}

inline Assignment assignment_from_partition(const Graph& g, const Partition& p,
                                            Heuristic h) {
  Assignment a;
  a.paths.reserve(p.subsets.size());
  for (const auto& subset : p.subsets)
    a.paths.push_back(heuristic_path(g, subset, h));
  return a;
}

// Fraction of the subset's heuristic cost attributable to node v:
//   (wlp(route) - wlp(route without v)) / wlp(route).
// Can go negative when removing v makes the heuristic route
// disproportionately worse; values are never clamped. A zero-cost subset
// has no computable contribution and reports 0.
inline double node_contribution(const Graph& g, const std::vector<int>& subset,
                                int v, Heuristic h) {
  const double full = detail::route_wlp(g, subset, h);
  if (full == 0.0) return 0.0;
  const double without = detail::route_wlp(g, subset, h, /*skip=*/v);
  return (full - without) / full;
}

}  // namespace mwlp
