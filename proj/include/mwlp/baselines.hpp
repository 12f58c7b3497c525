#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "mwlp/graph.hpp"
#include "mwlp/heuristics.hpp"
#include "mwlp/rng.hpp"

namespace mwlp {

// Labels of the five benchmark strategies.
enum class StrategyId { GA, NNA, GRA, TSG, TSNN };

inline const char* to_string(StrategyId id) {
  switch (id) {
    case StrategyId::GA: return "GA";
    case StrategyId::NNA: return "NNA";
    case StrategyId::GRA: return "GRA";
    case StrategyId::TSG: return "TSG";
    case StrategyId::TSNN: return "TSNN";
  }
  return "?";
}

inline std::optional<StrategyId> parse_strategy(const std::string& name) {
  if (name == "GA") return StrategyId::GA;
  if (name == "NNA") return StrategyId::NNA;
  if (name == "GRA") return StrategyId::GRA;
  if (name == "TSG") return StrategyId::TSG;
  if (name == "TSNN") return StrategyId::TSNN;
  return std::nullopt;
}

struct CrewState {
  int crew = 0;
  int at = 0;               // current node
  double available_at = 0;  // minutes; non-decreasing over the run
  Path route;
};

namespace detail {

// Event-driven claiming over the shared graph: the crew that frees up first
// (ties toward the lowest crew index) claims one node according to `rule`,
// travels there, and the clock advances. Simultaneity at t=0 is resolved the
// same way, by crew index.
template <typename ClaimRule>
Assignment run_claiming(const Graph& g, int m, ClaimRule&& rule) {
  std::vector<CrewState> crews(static_cast<std::size_t>(m));
  for (int c = 0; c < m; ++c) {
    crews[c].crew = c;
    crews[c].at = g.depot;
    crews[c].route.push_back(g.depot);
  }
  std::vector<char> claimed(static_cast<std::size_t>(g.n), 0);
  claimed[g.depot] = 1;

  int remaining = g.n - 1;
  while (remaining > 0) {
    int next = 0;
    for (int c = 1; c < m; ++c)
      if (crews[c].available_at < crews[next].available_at) next = c;
    CrewState& crew = crews[next];
    const int v = rule(crew, claimed);
    crew.available_at += g.edge(crew.at, v);
    crew.at = v;
    crew.route.push_back(v);
    claimed[v] = 1;
    --remaining;
  }

  Assignment a;
  a.paths.reserve(crews.size());
  for (auto& crew : crews) a.paths.push_back(std::move(crew.route));
  return a;
}

inline int claim_highest_importance(const Graph& g,
                                    const std::vector<char>& claimed) {
  int best = -1;
  for (int v = 0; v < g.n; ++v) {
    if (claimed[v]) continue;
    if (best < 0 || g.importance[v] > g.importance[best]) best = v;
  }
  return best;
}

inline int claim_nearest(const Graph& g, int from,
                         const std::vector<char>& claimed) {
  int best = -1;
  for (int v = 0; v < g.n; ++v) {
    if (claimed[v]) continue;
    if (best < 0 || g.edge(from, v) < g.edge(from, best)) best = v;
  }
  return best;
}

}  // namespace detail

// Every freed-up crew claims the unclaimed node of highest importance.
inline Assignment greedy_assignment(const Graph& g, int m) {
  return detail::run_claiming(g, m, [&](const CrewState&,
                                        const std::vector<char>& claimed) {
    return detail::claim_highest_importance(g, claimed);
  });
}

// Every freed-up crew claims the unclaimed node nearest to where it stands.
inline Assignment nearest_neighbor_assignment(const Graph& g, int m) {
  return detail::run_claiming(
      g, m, [&](const CrewState& crew, const std::vector<char>& claimed) {
        return detail::claim_nearest(g, crew.at, claimed);
      });
}

// Mixed strategy: the first ceil(m/2) crews claim by importance; the rest
// claim a seeded-random unclaimed node within (max edge - min edge)/4 of
// their position, falling back to the nearest unclaimed node when none is in
// range. The radius is fixed from the whole graph at the start of the run.
inline Assignment greedy_random_assignment(const Graph& g, int m,
                                           std::uint64_t seed) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (int u = 0; u < g.n; ++u) {
    for (int v = 0; v < g.n; ++v) {
      if (u == v) continue;
      lo = std::min(lo, g.edge(u, v));
      hi = std::max(hi, g.edge(u, v));
    }
  }
  const double radius = g.n > 1 ? (hi - lo) / 4.0 : 0.0;
  const int greedy_crews = (m + 1) / 2;

  Rng rng(seed);
  std::vector<int> in_range;
  return detail::run_claiming(
      g, m, [&](const CrewState& crew, const std::vector<char>& claimed) {
        if (crew.crew < greedy_crews)
          return detail::claim_highest_importance(g, claimed);
        in_range.clear();
        for (int v = 0; v < g.n; ++v)
          if (!claimed[v] && g.edge(crew.at, v) <= radius) in_range.push_back(v);
        if (in_range.empty()) return detail::claim_nearest(g, crew.at, claimed);
        return in_range[uniform_below(rng, in_range.size())];
      });
}

}  // namespace mwlp
