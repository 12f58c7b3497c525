#pragma once

#include <algorithm>
#include <cstdio>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mwlp/graph.hpp"

namespace mwlp {

// Cumulative travel time from the depot to the node at `position` (0-based)
// along the path. The depot position has latency 0.
inline double latency(const Graph& g, const Path& path, std::size_t position) {
  double t = 0.0;
  for (std::size_t k = 1; k <= position; ++k) t += g.edge(path[k - 1], path[k]);
  return t;
}

// Sum over path positions of importance(v) * latency(v). Accumulated in
// visit order; every other cost in the library reuses this exact
// accumulation so comparisons stay bit-for-bit consistent.
inline double path_wlp(const Graph& g, const Path& path) {
  double t = 0.0;
  double cost = 0.0;
  for (std::size_t k = 1; k < path.size(); ++k) {
    t += g.edge(path[k - 1], path[k]);
    cost += g.importance[path[k]] * t;
  }
  return cost;
}

inline double wlp_sum(const Graph& g, const Assignment& a) {
  double total = 0.0;
  for (const Path& path : a.paths) total += path_wlp(g, path);
  return total;
}

// Average customer wait in hours: wlp_sum over total importance, min -> h.
// The single-node instance (nothing to serve) reports 0 by convention.
inline double average_wait_hours(const Graph& g, const Assignment& a) {
  double total_importance = 0.0;
  for (double w : g.importance) total_importance += w;
  if (total_importance <= 0.0) {
    bool any_target = false;
    for (const Path& path : a.paths) any_target |= path.size() > 1;
    if (!any_target) return 0.0;
    throw std::domain_error("degenerate instance");
  }
  return wlp_sum(g, a) / total_importance / 60.0;
}

// Spread between the most and least loaded crew, in weighted-latency units.
inline double latency_range(const Graph& g, const Assignment& a) {
  double lo = 0.0, hi = 0.0;
  bool first = true;
  for (const Path& path : a.paths) {
    const double c = path_wlp(g, path);
    if (first) {
      lo = hi = c;
      first = false;
    } else {
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
  }
  return hi - lo;
}

// Step function of total importance still unserved versus time.
struct RestorationCurve {
  std::vector<std::pair<double, double>> points;  // (minutes, unserved)

  double final_time() const {
    return points.empty() ? 0.0 : points.back().first;
  }

  // Value of the step function at time t (left-continuous steps).
  double unserved_at(double t) const {
    double value = points.empty() ? 0.0 : points.front().second;
    for (const auto& [time, unserved] : points) {
      if (time <= t) value = unserved;
    }
    return value;
  }

  void write_csv(std::ostream& out) const {
    out << "time_minutes,population_unserved\n";
    char buf[80];
    for (const auto& [time, unserved] : points) {
      std::snprintf(buf, sizeof(buf), "%.6f,%.6f\n", time, unserved);
      out << buf;
    }
  }
};

// Each node's service completes at its latency along its path; simultaneous
// completions merge into one point.
inline RestorationCurve restoration_curve(const Graph& g, const Assignment& a) {
  double total = 0.0;
  for (int v = 0; v < g.n; ++v)
    if (v != g.depot) total += g.importance[v];

  std::map<double, double> served_at;  // completion time -> importance sum
  for (const Path& path : a.paths) {
    double t = 0.0;
    for (std::size_t k = 1; k < path.size(); ++k) {
      t += g.edge(path[k - 1], path[k]);
      served_at[t] += g.importance[path[k]];
    }
  }

  RestorationCurve curve;
  curve.points.emplace_back(0.0, total);
  double unserved = total;
  for (const auto& [time, served] : served_at) {
    unserved -= served;
    if (time == 0.0)
      curve.points.front().second = unserved;
    else
      curve.points.emplace_back(time, unserved);
  }
  return curve;
}

}  // namespace mwlp
