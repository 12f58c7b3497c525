#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace mwlp {

// Ordered route of node indices; the first element is always the depot.
using Path = std::vector<int>;

// Complete directed weighted graph. Node importances are population units,
// edge weights are minutes of travel to the destination with the
// destination's repair time already folded in (hence the asymmetry).
// repair_minutes is kept for serialization; it never enters cost formulas.
struct Graph {
  int n = 0;
  int depot = 0;
  std::vector<double> importance;
  std::vector<double> repair_minutes;
  std::vector<double> edges;  // n*n, row-major, edges[u*n+v] = d(u -> v)

  static Graph make(int n, int depot = 0) {
    Graph g;
    g.n = n;
    g.depot = depot;
    g.importance.assign(static_cast<std::size_t>(n), 0.0);
    g.repair_minutes.assign(static_cast<std::size_t>(n), 0.0);
    g.edges.assign(static_cast<std::size_t>(n) * n, 0.0);
    return g;
  }

  double edge(int u, int v) const {
    return edges[static_cast<std::size_t>(u) * n + v];
  }
  void set_edge(int u, int v, double d) {
    edges[static_cast<std::size_t>(u) * n + v] = d;
  }

  bool operator==(const Graph&) const = default;
};

// m node-sets that pairwise share only the depot and jointly cover V.
// Subsets are kept sorted ascending; a subset may be just {depot}.
struct Partition {
  std::vector<std::vector<int>> subsets;
};

// One depot-rooted path per crew; together the paths visit every non-depot
// node exactly once.
struct Assignment {
  std::vector<Path> paths;

  bool operator==(const Assignment&) const = default;
};

// Validations return nullopt on success, otherwise the first violated
// invariant as text. Violations are values, not exceptions.

inline std::optional<std::string> validate_graph(const Graph& g) {
  if (g.n < 1) return "node count must be positive";
  if (g.depot < 0 || g.depot >= g.n) return "depot index out of range";
  if (static_cast<int>(g.importance.size()) != g.n)
    return "importance vector size mismatch";
  if (static_cast<int>(g.edges.size()) != g.n * g.n)
    return "edge matrix size mismatch";
  if (g.importance[g.depot] != 0.0) return "depot importance nonzero";
  for (int v = 0; v < g.n; ++v) {
    if (!std::isfinite(g.importance[v]) || g.importance[v] < 0.0)
      return "negative or non-finite importance at node " + std::to_string(v);
  }
  for (int u = 0; u < g.n; ++u) {
    for (int v = 0; v < g.n; ++v) {
      const double d = g.edge(u, v);
      if (u == v) {
        if (d != 0.0) return "nonzero diagonal";
      } else if (!std::isfinite(d) || d < 0.0) {
        return "negative or non-finite edge weight " + std::to_string(u) +
               " -> " + std::to_string(v);
      }
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> validate_partition(const Graph& g,
                                                     const Partition& p) {
  if (p.subsets.empty()) return "partition has no subsets";
  std::vector<int> owner(static_cast<std::size_t>(g.n), -1);
  for (std::size_t i = 0; i < p.subsets.size(); ++i) {
    bool has_depot = false;
    for (int v : p.subsets[i]) {
      if (v < 0 || v >= g.n)
        return "unknown node " + std::to_string(v);
      if (v == g.depot) {
        has_depot = true;
        continue;
      }
      if (owner[v] >= 0)
        return "node " + std::to_string(v) + " in two subsets";
      owner[v] = static_cast<int>(i);
    }
    if (!has_depot) return "subset missing depot";
  }
  for (int v = 0; v < g.n; ++v) {
    if (v != g.depot && owner[v] < 0)
      return "node " + std::to_string(v) + " not covered";
  }
  return std::nullopt;
}

inline std::optional<std::string> validate_assignment(const Graph& g,
                                                      const Assignment& a) {
  if (a.paths.empty()) return "assignment has no paths";
  std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
  for (const Path& path : a.paths) {
    if (path.empty() || path.front() != g.depot)
      return "path does not begin at depot";
    for (std::size_t k = 1; k < path.size(); ++k) {
      const int v = path[k];
      if (v < 0 || v >= g.n) return "unknown node " + std::to_string(v);
      if (v == g.depot) return "depot revisited mid-path";
      if (seen[v]) return "node " + std::to_string(v) + " appears twice";
      seen[v] = 1;
    }
  }
  for (int v = 0; v < g.n; ++v) {
    if (v != g.depot && !seen[v])
      return "node " + std::to_string(v) + " missing from assignment";
  }
  return std::nullopt;
}

// Forgets the visit order of each path.
inline Partition partition_of(const Assignment& a) {
  Partition p;
  p.subsets.reserve(a.paths.size());
  for (const Path& path : a.paths) {
    std::vector<int> subset(path.begin(), path.end());
    std::sort(subset.begin(), subset.end());
    p.subsets.push_back(std::move(subset));
  }
  return p;
}

// Two partitions get the same key iff they hold the same subsets as
// unordered node-sets, regardless of subset order or within-subset order.
inline std::string canonical_key(const Partition& p) {
  std::vector<std::vector<int>> sets = p.subsets;
  for (auto& s : sets) std::sort(s.begin(), s.end());
  std::sort(sets.begin(), sets.end());
  std::string key;
  for (const auto& s : sets) {
    for (int v : s) {
      key += std::to_string(v);
      key += ',';
    }
    key += '|';
  }
  return key;
}

}  // namespace mwlp
