#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "mwlp/graph.hpp"
#include "mwlp/heuristics.hpp"
#include "mwlp/instances.hpp"

namespace testsupport {

// Shared reference instance: 3 nodes, depot 0, importances [0, 3, 5],
// asymmetric edges. Small enough to trace every algorithm by hand, and the
// greedy and nearest-neighbor heuristics disagree on it.
inline mwlp::Graph make_e1() {
  mwlp::Graph g = mwlp::Graph::make(3, 0);
  g.importance = {0.0, 3.0, 5.0};
  g.set_edge(0, 1, 1.0);
  g.set_edge(1, 0, 1.0);
  g.set_edge(0, 2, 4.0);
  g.set_edge(2, 0, 4.0);
  g.set_edge(1, 2, 2.0);
  g.set_edge(2, 1, 3.0);
  return g;
}

// Scaled-down random instance for desk-size tests.
inline mwlp::Graph micro_instance(std::uint64_t seed, int n,
                                  int importance_max = 100,
                                  double travel_min = 5.0,
                                  double travel_max = 15.0) {
  mwlp::InstanceParams params;
  params.n = n;
  params.m = 2;
  params.importance_min = 1;
  params.importance_max = importance_max;
  params.travel_min_minutes = travel_min;
  params.travel_max_minutes = travel_max;
  params.seed = seed;
  return mwlp::generate_random_instance(params);
}

// Independent enumeration oracles for the optimizer moves. These rebuild the
// candidate subsets explicitly and price them with the public subset_cost,
// instead of the optimizer's skip/extra evaluation path.

inline std::vector<int> without(const std::vector<int>& subset, int v) {
  std::vector<int> result;
  for (int u : subset)
    if (u != v) result.push_back(u);
  return result;
}

inline std::vector<int> with_node(const std::vector<int>& subset, int v) {
  std::vector<int> result = subset;
  result.insert(std::lower_bound(result.begin(), result.end(), v), v);
  return result;
}

inline std::optional<int> oracle_best_transfer(const mwlp::Graph& g,
                                               const mwlp::Partition& p, int i,
                                               int j, mwlp::Heuristic h) {
  const auto& from = p.subsets[i];
  const auto& to = p.subsets[j];
  const double before =
      std::max(mwlp::subset_cost(g, from, h), mwlp::subset_cost(g, to, h));
  std::optional<int> best;
  double best_delta = 0.0;
  for (int v : from) {
    if (v == g.depot) continue;
    const double after = std::max(mwlp::subset_cost(g, without(from, v), h),
                                  mwlp::subset_cost(g, with_node(to, v), h));
    const double delta = before - after;
    if (delta > best_delta || (!best && delta > 0.0)) {
      best = v;
      best_delta = delta;
    }
  }
  return best;
}

inline std::optional<std::pair<int, int>> oracle_best_swap(
    const mwlp::Graph& g, const mwlp::Partition& p, int i, int j,
    mwlp::Heuristic h) {
  const auto& a = p.subsets[i];
  const auto& b = p.subsets[j];
  const double before =
      std::max(mwlp::subset_cost(g, a, h), mwlp::subset_cost(g, b, h));
  std::optional<std::pair<int, int>> best;
  double best_delta = 0.0;
  for (int vi : a) {
    if (vi == g.depot) continue;
    for (int vj : b) {
      if (vj == g.depot) continue;
      const double after = std::max(
          mwlp::subset_cost(g, with_node(without(a, vi), vj), h),
          mwlp::subset_cost(g, with_node(without(b, vj), vi), h));
      const double delta = before - after;
      if (delta > best_delta || (!best && delta > 0.0)) {
        best = std::make_pair(vi, vj);
        best_delta = delta;
      }
    }
  }
  return best;
}

}  // namespace testsupport
