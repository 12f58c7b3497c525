#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mwlp/baselines.hpp"
#include "mwlp/graph.hpp"
#include "mwlp/metrics.hpp"
#include "mwlp/optimizer.hpp"

namespace mwlp {

// One strategy run on one instance.
struct SolveReport {
  std::string strategy;
  std::string instance_seed;  // generator seed, or file stem for loaded instances
  Assignment assignment;
  double wlp_sum = 0.0;
  double average_wait_hours = 0.0;
  double latency_range = 0.0;
  double wall_ms = 0.0;
};

inline SolveReport run_strategy(const Graph& g, int m, StrategyId strategy,
                                std::uint64_t seed, double outlier_threshold) {
  const auto start = std::chrono::steady_clock::now();
  Assignment a;
  switch (strategy) {
    case StrategyId::GA:
      a = greedy_assignment(g, m);
      break;
    case StrategyId::NNA:
      a = nearest_neighbor_assignment(g, m);
      break;
    case StrategyId::GRA:
      a = greedy_random_assignment(g, m, seed);
      break;
    case StrategyId::TSG:
    case StrategyId::TSNN: {
      OptimizerConfig cfg;
      cfg.heuristic = strategy == StrategyId::TSG ? Heuristic::Greedy
                                                  : Heuristic::NearestNeighbor;
      cfg.seed = seed;
      cfg.outlier_threshold = outlier_threshold;
      a = optimize(g, m, cfg);
      break;
    }
  }
  const auto stop = std::chrono::steady_clock::now();

  SolveReport report;
  report.strategy = to_string(strategy);
  report.instance_seed = std::to_string(seed);
  report.wlp_sum = wlp_sum(g, a);
  report.average_wait_hours = average_wait_hours(g, a);
  report.latency_range = latency_range(g, a);
  report.wall_ms =
      std::chrono::duration<double, std::milli>(stop - start).count();
  report.assignment = std::move(a);
  return report;
}

namespace detail {

inline std::string format9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9f", x);
  return buf;
}

}  // namespace detail

// Report CSV: one data row per (instance seed, strategy).
inline void save_report(const std::vector<SolveReport>& reports,
                        std::ostream& out) {
  out << "instance_seed,strategy,wlp_sum,average_wait_hours,latency_range,"
         "wall_ms\n";
  for (const SolveReport& r : reports) {
    out << r.instance_seed << ',' << r.strategy << ','
        << detail::format9(r.wlp_sum) << ','
        << detail::format9(r.average_wait_hours) << ','
        << detail::format9(r.latency_range) << ','
        << detail::format9(r.wall_ms) << "\n";
  }
}

inline void save_report(const std::vector<SolveReport>& reports,
                        const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  save_report(reports, out);
}

// Linear-interpolation quantile (the numpy default) over a sorted sample.
inline double quantile_sorted(const std::vector<double>& sorted, double q) {
  if (sorted.empty()) throw std::invalid_argument("quantile of empty sample");
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + (sorted[hi] - sorted[lo]) * frac;
}

inline double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return quantile_sorted(values, 0.5);
}

inline double interquartile_range(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  return quantile_sorted(values, 0.75) - quantile_sorted(values, 0.25);
}

}  // namespace mwlp
