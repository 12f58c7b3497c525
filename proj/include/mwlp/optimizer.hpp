#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mwlp/graph.hpp"
#include "mwlp/heuristics.hpp"
#include "mwlp/metrics.hpp"
#include "mwlp/rng.hpp"

namespace mwlp {

struct OptimizerConfig {
  double outlier_threshold = 0.13;  // contribution above this marks a node
  Heuristic heuristic = Heuristic::Greedy;
  std::uint64_t seed = 0;           // seeds the initial partition only
  int max_outer_iterations = 100;   // safety cap; unreachable in practice
};

// Optional observation points; every callback may be empty. Tests use these
// to check that intermediate partitions stay valid, that each applied move
// strictly reduced its pair's max cost, and that accepted costs decrease.
struct OptimizerHooks {
  std::function<void(const Partition&)> on_partition_update;
  std::function<void(double, double)> on_pair_improvement;  // max before/after
  std::function<void(double)> on_outer_accept;              // accepted wlp_sum
};

namespace detail {

struct MoveEval {
  double pair_max_before = 0.0;
  double pair_max_after = 0.0;
};

// Best node of subsets[i] (depot excluded) to move into subsets[j], judged
// by the reduction of max(c(Vi), c(Vj)). Strictly improving only; ties break
// toward the smallest node index.
inline std::optional<int> find_best_transfer(const Graph& g, const Partition& p,
                                             int i, int j, Heuristic h,
                                             MoveEval* eval = nullptr) {
  const auto& from = p.subsets[i];
  const auto& to = p.subsets[j];
  const double before = std::max(route_wlp(g, from, h), route_wlp(g, to, h));
  int best = -1;
  double best_after = 0.0;
  for (int v : from) {
    if (v == g.depot) continue;
    const double after = std::max(route_wlp(g, from, h, /*skip=*/v),
                                  route_wlp(g, to, h, -1, /*extra=*/v));
    if (best < 0 || after < best_after) {
      best = v;
      best_after = after;
    }
  }
  if (best < 0 || !(before - best_after > 0.0)) return std::nullopt;
  if (eval) *eval = {before, best_after};
  return best;
}

// Best pair (vi in subsets[i], vj in subsets[j]) to exchange, same criterion.
// Ties break toward the smallest vi, then the smallest vj.
inline std::optional<std::pair<int, int>> find_best_swap(
    const Graph& g, const Partition& p, int i, int j, Heuristic h,
    MoveEval* eval = nullptr) {
  const auto& a = p.subsets[i];
  const auto& b = p.subsets[j];
  const double before = std::max(route_wlp(g, a, h), route_wlp(g, b, h));
  int best_vi = -1, best_vj = -1;
  double best_after = 0.0;
  for (int vi : a) {
    if (vi == g.depot) continue;
    for (int vj : b) {
      if (vj == g.depot) continue;
      const double after = std::max(route_wlp(g, a, h, /*skip=*/vi, /*extra=*/vj),
                                    route_wlp(g, b, h, /*skip=*/vj, /*extra=*/vi));
      if (best_vi < 0 || after < best_after) {
        best_vi = vi;
        best_vj = vj;
        best_after = after;
      }
    }
  }
  if (best_vi < 0 || !(before - best_after > 0.0)) return std::nullopt;
  if (eval) *eval = {before, best_after};
  return std::make_pair(best_vi, best_vj);
}

inline void sorted_erase(std::vector<int>& subset, int v) {
  subset.erase(std::lower_bound(subset.begin(), subset.end(), v));
}

inline void sorted_insert(std::vector<int>& subset, int v) {
  subset.insert(std::lower_bound(subset.begin(), subset.end(), v), v);
}

}  // namespace detail

inline std::optional<int> best_transfer(const Graph& g, const Partition& p,
                                        int i, int j, Heuristic h) {
  return detail::find_best_transfer(g, p, i, j, h);
}

inline std::optional<std::pair<int, int>> best_swap(const Graph& g,
                                                    const Partition& p, int i,
                                                    int j, Heuristic h) {
  return detail::find_best_swap(g, p, i, j, h);
}

// Local search over the partition: repeatedly apply the best strictly
// improving transfer per marked ordered pair and the best strictly improving
// swap per marked unordered pair, re-marking every pair that touches a
// changed subset. With heuristic subset costs there is no termination
// guarantee from the marks alone, so each sweep records the partition's
// canonical key and the search stops on the first repeat.
inline Partition transfers_and_swaps(const Graph& g, Partition p, Heuristic h,
                                     const OptimizerHooks* hooks = nullptr) {
  const int m = static_cast<int>(p.subsets.size());
  if (m < 2) return p;

  std::vector<char> transfer_marked(static_cast<std::size_t>(m) * m, 1);
  std::vector<char> swap_marked(static_cast<std::size_t>(m) * m, 1);
  auto tmark = [&](int i, int j) -> char& {
    return transfer_marked[static_cast<std::size_t>(i) * m + j];
  };
  auto smark = [&](int i, int j) -> char& {
    return swap_marked[static_cast<std::size_t>(i) * m + j];  // i < j
  };

  auto any_marked = [&] {
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i != j && tmark(i, j)) return true;
        if (i < j && smark(i, j)) return true;
      }
    }
    return false;
  };

  auto remark_touching = [&](int i, int j) {
    for (int k = 0; k < m; ++k) {
      if (k != i) {
        tmark(i, k) = tmark(k, i) = 1;
        smark(std::min(i, k), std::max(i, k)) = 1;
      }
      if (k != j) {
        tmark(j, k) = tmark(k, j) = 1;
        smark(std::min(j, k), std::max(j, k)) = 1;
      }
    }
  };

  auto notify = [&](const detail::MoveEval& eval) {
    if (!hooks) return;
    if (hooks->on_pair_improvement)
      hooks->on_pair_improvement(eval.pair_max_before, eval.pair_max_after);
    if (hooks->on_partition_update) hooks->on_partition_update(p);
  };

  std::unordered_set<std::string> tried;
  while (any_marked()) {
    if (!tried.insert(canonical_key(p)).second) break;  // seen before

    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (i == j || !tmark(i, j)) continue;
        detail::MoveEval eval;
        if (auto v = detail::find_best_transfer(g, p, i, j, h, &eval)) {
          detail::sorted_erase(p.subsets[i], *v);
          detail::sorted_insert(p.subsets[j], *v);
          notify(eval);
          remark_touching(i, j);
        } else {
          tmark(i, j) = 0;
        }
      }
    }

    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        if (!smark(i, j)) continue;
        detail::MoveEval eval;
        if (auto pair = detail::find_best_swap(g, p, i, j, h, &eval)) {
          detail::sorted_erase(p.subsets[i], pair->first);
          detail::sorted_insert(p.subsets[j], pair->first);
          detail::sorted_erase(p.subsets[j], pair->second);
          detail::sorted_insert(p.subsets[i], pair->second);
          notify(eval);
          remark_touching(i, j);
        } else {
          smark(i, j) = 0;
        }
      }
    }
  }
  return p;
}

// Relocate every node whose contribution to its subset's cost exceeds the
// threshold into the subset whose cost grows the least by taking it.
// Subsets are scanned in ascending index order, nodes in ascending index
// order, and each relocation applies to the working partition immediately.
inline Partition transfer_outliers(const Graph& g, Partition p, Heuristic h,
                                   double threshold,
                                   const OptimizerHooks* hooks = nullptr) {
  const int m = static_cast<int>(p.subsets.size());
  for (int i = 0; i < m; ++i) {
    const std::vector<int> members = p.subsets[i];  // only i loses nodes here
    for (int v : members) {
      if (v == g.depot) continue;
      if (!(node_contribution(g, p.subsets[i], v, h) > threshold)) continue;
      int best_k = -1;
      double best_cost = std::numeric_limits<double>::infinity();
      for (int k = 0; k < m; ++k) {
        const double cost =
            k == i ? detail::route_wlp(g, p.subsets[i], h)  // Vi u {v} = Vi
                   : detail::route_wlp(g, p.subsets[k], h, -1, /*extra=*/v);
        if (cost < best_cost) {
          best_cost = cost;
          best_k = k;
        }
      }
      if (best_k != i) {
        detail::sorted_erase(p.subsets[i], v);
        detail::sorted_insert(p.subsets[best_k], v);
        if (hooks && hooks->on_partition_update) hooks->on_partition_update(p);
      }
    }
  }
  return p;
}

// Non-depot nodes are shuffled by the seeded generator and dealt round-robin
// into m subsets, each of which starts with the depot.
inline Partition random_initial_partition(const Graph& g, int m,
                                          std::uint64_t seed) {
  Rng rng(seed);
  std::vector<int> others;
  others.reserve(static_cast<std::size_t>(g.n) - 1);
  for (int v = 0; v < g.n; ++v)
    if (v != g.depot) others.push_back(v);
  shuffle(rng, others);

  Partition p;
  p.subsets.assign(static_cast<std::size_t>(m), {g.depot});
  for (std::size_t idx = 0; idx < others.size(); ++idx)
    p.subsets[idx % m].push_back(others[idx]);
  for (auto& subset : p.subsets) std::sort(subset.begin(), subset.end());
  return p;
}

// Full pipeline: random start, transfers-and-swaps, then alternate outlier
// relocation with transfers-and-swaps while the resulting assignment keeps
// strictly improving. Returns the heuristic assignment of the best accepted
// partition.
inline Assignment optimize(const Graph& g, int m, const OptimizerConfig& cfg,
                           const OptimizerHooks* hooks = nullptr) {
  Partition accepted = random_initial_partition(g, m, cfg.seed);
  if (hooks && hooks->on_partition_update) hooks->on_partition_update(accepted);
  Partition candidate = transfers_and_swaps(g, accepted, cfg.heuristic, hooks);

  Assignment accepted_asgn = assignment_from_partition(g, accepted, cfg.heuristic);
  Assignment candidate_asgn =
      assignment_from_partition(g, candidate, cfg.heuristic);
  if (hooks && hooks->on_outer_accept)
    hooks->on_outer_accept(wlp_sum(g, accepted_asgn));

  int iterations = 0;
  while (wlp_sum(g, candidate_asgn) < wlp_sum(g, accepted_asgn) &&
         iterations++ < cfg.max_outer_iterations) {
    candidate = transfer_outliers(g, candidate, cfg.heuristic,
                                  cfg.outlier_threshold, hooks);
    candidate = transfers_and_swaps(g, candidate, cfg.heuristic, hooks);
    accepted_asgn = assignment_from_partition(g, accepted, cfg.heuristic);
    candidate_asgn = assignment_from_partition(g, candidate, cfg.heuristic);
    if (wlp_sum(g, candidate_asgn) < wlp_sum(g, accepted_asgn)) {
      accepted = candidate;
      if (hooks && hooks->on_outer_accept)
        hooks->on_outer_accept(wlp_sum(g, candidate_asgn));
    }
  }
  return assignment_from_partition(g, accepted, cfg.heuristic);
}

}  // namespace mwlp
