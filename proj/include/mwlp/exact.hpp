#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mwlp/graph.hpp"
#include "mwlp/metrics.hpp"

namespace mwlp {

// Raised when an instance exceeds the brute-force enumeration limits.
struct size_guard_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExactResult {
  Assignment assignment;
  double optimum = 0.0;
  std::uint64_t candidates = 0;
};

// Minimum weighted latency over all single-crew routes: every permutation of
// the non-depot nodes, prefixed by the depot. (n-1)! candidates, so n <= 11.
inline ExactResult exact_single_mwlp(const Graph& g) {
  if (g.n > 11)
    throw size_guard_error("exact_single_mwlp limited to n <= 11, got n = " +
                           std::to_string(g.n));
  std::vector<int> order;
  for (int v = 0; v < g.n; ++v)
    if (v != g.depot) order.push_back(v);

  ExactResult result;
  Path path;
  path.reserve(static_cast<std::size_t>(g.n));
  bool first = true;
  do {
    path.clear();
    path.push_back(g.depot);
    path.insert(path.end(), order.begin(), order.end());
    const double cost = path_wlp(g, path);
    ++result.candidates;
    if (first || cost < result.optimum) {
      result.optimum = cost;
      result.assignment.paths.assign(1, path);
      first = false;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return result;
}

namespace detail {

// Visits every composition of `total` into `parts` nonnegative summands.
template <typename Visit>
void for_each_composition(int total, int parts, std::vector<int>& sizes,
                          Visit&& visit) {
  if (parts == 1) {
    sizes.push_back(total);
    visit(sizes);
    sizes.pop_back();
    return;
  }
  for (int take = 0; take <= total; ++take) {
    sizes.push_back(take);
    for_each_composition(total - take, parts - 1, sizes, visit);
    sizes.pop_back();
  }
}

}  // namespace detail

// Minimum wlp_sum over every assignment of the non-depot nodes to m labeled
// crews, orderings included: each permutation of the nodes is cut into m
// consecutive, possibly empty segments. Guarded to n <= 8, m <= 4.
inline ExactResult exact_multi_mwlp(const Graph& g, int m) {
  if (m < 1) throw std::invalid_argument("agent count must be positive");
  if (g.n > 8 || m > 4)
    throw size_guard_error(
        "exact_multi_mwlp limited to n <= 8 and m <= 4, got n = " +
        std::to_string(g.n) + ", m = " + std::to_string(m));

  std::vector<int> order;
  for (int v = 0; v < g.n; ++v)
    if (v != g.depot) order.push_back(v);

  ExactResult result;
  bool first = true;
  std::vector<int> sizes;
  sizes.reserve(static_cast<std::size_t>(m));
  do {
    detail::for_each_composition(
        static_cast<int>(order.size()), m, sizes, [&](const std::vector<int>& cut) {
          double cost = 0.0;
          std::size_t offset = 0;
          for (int size : cut) {
            double t = 0.0;
            int from = g.depot;
            for (int k = 0; k < size; ++k) {
              const int v = order[offset + k];
              t += g.edge(from, v);
              cost += g.importance[v] * t;
              from = v;
            }
            offset += size;
          }
          ++result.candidates;
          if (first || cost < result.optimum) {
            result.optimum = cost;
            result.assignment.paths.clear();
            std::size_t at = 0;
            for (int size : cut) {
              Path path{g.depot};
              for (int k = 0; k < size; ++k) path.push_back(order[at + k]);
              at += size;
              result.assignment.paths.push_back(std::move(path));
            }
            first = false;
          }
        });
  } while (std::next_permutation(order.begin(), order.end()));
  return result;
}

}  // namespace mwlp
