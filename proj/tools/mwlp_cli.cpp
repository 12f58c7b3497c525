// Command-line front end: instance generation, single solves, benchmark
// sweeps, and restoration-curve emission. All output files are byte-stable
// for identical flags; wall-clock timings go to the console only.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "mwlp/exact.hpp"
#include "mwlp/instances.hpp"
#include "mwlp/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitSizeGuard = 3;

struct GeneratorFlags {
  mwlp::InstanceParams params;
  bool zero_repair = false;
  std::string road_file;
  double speed_mph = 25.0;

  void register_on(CLI::App* cmd) {
    cmd->add_option("--nodes", params.n, "Node count including the depot");
    cmd->add_option("--agents", params.m, "Crew count");
    cmd->add_option("--importance-min", params.importance_min);
    cmd->add_option("--importance-max", params.importance_max);
    cmd->add_option("--travel-min", params.travel_min_minutes,
                    "Travel time lower bound, minutes");
    cmd->add_option("--travel-max", params.travel_max_minutes,
                    "Travel time upper bound, minutes");
    cmd->add_flag("--zero-repair", zero_repair, "Set all repair times to zero");
    cmd->add_option("--road", road_file,
                    "Road network file; metric closure instead of random edges");
    cmd->add_option("--speed-mph", speed_mph, "Crew speed for --road mode");
  }
};

constexpr double kMetersPerMile = 1609.344;

mwlp::Graph build_instance(const GeneratorFlags& flags, std::uint64_t seed) {
  mwlp::InstanceParams params = flags.params;
  params.seed = seed;
  if (flags.zero_repair)
    params.repair_table = {
        {0.0, std::numeric_limits<double>::infinity(), 0.0, 0.0}};
  if (flags.road_file.empty()) return mwlp::generate_random_instance(params);

  const mwlp::RoadNetwork network = mwlp::load_road_network(flags.road_file);
  std::vector<double> repairs(network.targets.size(), 0.0);
  if (!flags.zero_repair) {
    mwlp::Rng rng(seed);
    for (std::size_t t = 0; t < network.targets.size(); ++t) {
      const auto& band = mwlp::repair_band_for(params.repair_table,
                                               network.targets[t].importance);
      repairs[t] = mwlp::quantize6(
          mwlp::uniform_real(rng, band.lo_hours * 60.0, band.hi_hours * 60.0));
    }
  }
  const double speed_per_minute = flags.speed_mph * kMetersPerMile / 60.0;
  return mwlp::metric_closure(network, speed_per_minute, repairs);
}

double total_importance(const mwlp::Graph& g) {
  double total = 0.0;
  for (double w : g.importance) total += w;
  return total;
}

// Table II order; benchmark rows and summaries always use it.
const std::vector<mwlp::StrategyId> kCanonicalOrder = {
    mwlp::StrategyId::GA, mwlp::StrategyId::NNA, mwlp::StrategyId::GRA,
    mwlp::StrategyId::TSG, mwlp::StrategyId::TSNN};

std::vector<mwlp::StrategyId> parse_strategies(
    const std::vector<std::string>& names) {
  std::vector<mwlp::StrategyId> requested;
  for (const std::string& name : names) {
    const auto id = mwlp::parse_strategy(name);
    if (!id) throw CLI::ValidationError("unknown strategy '" + name + "'");
    requested.push_back(*id);
  }
  std::vector<mwlp::StrategyId> ordered;
  for (mwlp::StrategyId id : kCanonicalOrder)
    if (std::find(requested.begin(), requested.end(), id) != requested.end())
      ordered.push_back(id);
  return ordered;
}

void print_report(const mwlp::SolveReport& report) {
  std::cout << "strategy " << report.strategy << "\n";
  std::cout << "wlp_sum " << mwlp::detail::format9(report.wlp_sum) << "\n";
  std::cout << "average_wait_hours "
            << mwlp::detail::format9(report.average_wait_hours) << "\n";
  std::cout << "latency_range " << mwlp::detail::format9(report.latency_range)
            << "\n";
  std::cout << "wall_ms " << report.wall_ms << "\n";
  for (std::size_t c = 0; c < report.assignment.paths.size(); ++c) {
    std::cout << "crew " << c << ':';
    for (int v : report.assignment.paths[c]) std::cout << ' ' << v;
    std::cout << "\n";
  }
}

int cmd_generate(const GeneratorFlags& flags, std::uint64_t seed,
                 const std::string& out) {
  const mwlp::Graph g = build_instance(flags, seed);
  if (const auto violation = mwlp::validate_graph(g))
    throw std::runtime_error("generated graph invalid: " + *violation);
  mwlp::save_instance(g, out);
  std::cout << "instance n=" << g.n << " m=" << flags.params.m
            << " total_importance=" << total_importance(g) << " seed=" << seed
            << " -> " << out << "\n";
  return kExitOk;
}

int cmd_solve(const std::string& instance_path, const std::string& strategy,
              int agents, std::uint64_t seed, double alpha,
              const std::string& out) {
  const mwlp::Graph g = mwlp::load_instance(instance_path);
  if (const auto violation = mwlp::validate_graph(g))
    throw mwlp::parse_error(instance_path + ": " + *violation);

  mwlp::SolveReport report;
  if (strategy == "EXACT") {
    const auto start = std::chrono::steady_clock::now();
    const mwlp::ExactResult exact = mwlp::exact_multi_mwlp(g, agents);
    const auto stop = std::chrono::steady_clock::now();
    report.strategy = "EXACT";
    report.instance_seed = std::to_string(seed);
    report.assignment = exact.assignment;
    report.wlp_sum = exact.optimum;
    report.average_wait_hours = mwlp::average_wait_hours(g, exact.assignment);
    report.latency_range = mwlp::latency_range(g, exact.assignment);
    report.wall_ms =
        std::chrono::duration<double, std::milli>(stop - start).count();
  } else {
    const auto id = mwlp::parse_strategy(strategy);
    if (!id) throw CLI::ValidationError("unknown strategy '" + strategy + "'");
    report = mwlp::run_strategy(g, agents, *id, seed, alpha);
  }

  print_report(report);
  if (!out.empty()) {
    std::vector<mwlp::SolveReport> rows{report};
    rows[0].wall_ms = 0.0;  // files stay byte-reproducible
    mwlp::save_report(rows, out);
  }
  return kExitOk;
}

struct BenchmarkCell {
  std::string label;
  std::uint64_t solver_seed = 0;
  mwlp::StrategyId strategy;
  const mwlp::Graph* graph = nullptr;
};

int cmd_benchmark(const GeneratorFlags& flags, std::vector<std::uint64_t> seeds,
                  const std::vector<std::string>& strategy_names,
                  const std::string& instance_dir, double alpha, unsigned jobs,
                  const std::string& out) {
  const std::vector<mwlp::StrategyId> strategies =
      parse_strategies(strategy_names);
  if (strategies.empty()) throw CLI::ValidationError("no strategies given");

  // Instances: either generated per seed or loaded from a directory.
  std::vector<std::pair<std::string, mwlp::Graph>> instances;
  std::vector<std::uint64_t> solver_seeds;
  const int agents = flags.params.m;
  if (instance_dir.empty()) {
    if (seeds.empty()) throw CLI::ValidationError("no seeds given");
    std::sort(seeds.begin(), seeds.end());
    seeds.erase(std::unique(seeds.begin(), seeds.end()), seeds.end());
    for (std::uint64_t seed : seeds) {
      instances.emplace_back(std::to_string(seed), build_instance(flags, seed));
      solver_seeds.push_back(seed);
    }
  } else {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(instance_dir))
      if (entry.path().extension() == ".mwlp") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty())
      throw mwlp::parse_error("no .mwlp instances in " + instance_dir);
    for (const auto& file : files) {
      instances.emplace_back(file.stem().string(),
                             mwlp::load_instance(file.string()));
      solver_seeds.push_back(0);  // loaded instances carry no seed
    }
  }

  std::vector<BenchmarkCell> cells;
  for (std::size_t i = 0; i < instances.size(); ++i)
    for (mwlp::StrategyId id : strategies)
      cells.push_back({instances[i].first, solver_seeds[i], id,
                       &instances[i].second});

  // Parallel cells; results land in cell order, so output order never
  // depends on scheduling.
  std::vector<mwlp::SolveReport> reports(cells.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t k = cursor.fetch_add(1);
      if (k >= cells.size()) return;
      const BenchmarkCell& cell = cells[k];
      mwlp::SolveReport report = mwlp::run_strategy(
          *cell.graph, agents, cell.strategy, cell.solver_seed, alpha);
      report.instance_seed = cell.label;
      {
        static std::mutex io_mutex;
        std::lock_guard<std::mutex> lock(io_mutex);
        std::cout << "instance " << cell.label << ' ' << report.strategy
                  << " wlp_sum=" << mwlp::detail::format9(report.wlp_sum)
                  << " wall_ms=" << report.wall_ms << "\n";
      }
      reports[k] = std::move(report);
    }
  };
  const unsigned thread_count = std::max(
      1u, std::min<unsigned>(jobs, static_cast<unsigned>(cells.size())));
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < thread_count; ++t) threads.emplace_back(worker);
  for (auto& thread : threads) thread.join();

  std::ofstream file(out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + out + " for writing");
  for (auto& report : reports) report.wall_ms = 0.0;
  mwlp::save_report(reports, file);

  // Per-strategy summary block: median and IQR of wait and range.
  for (mwlp::StrategyId id : strategies) {
    std::vector<double> waits, ranges;
    for (const auto& report : reports) {
      if (report.strategy != mwlp::to_string(id)) continue;
      waits.push_back(report.average_wait_hours);
      ranges.push_back(report.latency_range);
    }
    file << "# " << mwlp::to_string(id) << " median_wait_h="
         << mwlp::detail::format9(mwlp::median(waits)) << " iqr_wait_h="
         << mwlp::detail::format9(mwlp::interquartile_range(waits))
         << " median_range="
         << mwlp::detail::format9(mwlp::median(ranges)) << " iqr_range="
         << mwlp::detail::format9(mwlp::interquartile_range(ranges)) << "\n";
  }
  std::cout << "wrote " << reports.size() << " rows -> " << out << "\n";
  return kExitOk;
}

int cmd_curve(const std::string& instance_path, const std::string& strategy,
              int agents, std::uint64_t seed, double alpha,
              const std::string& out) {
  const mwlp::Graph g = mwlp::load_instance(instance_path);
  if (const auto violation = mwlp::validate_graph(g))
    throw mwlp::parse_error(instance_path + ": " + *violation);

  mwlp::Assignment assignment;
  if (strategy == "EXACT") {
    assignment = mwlp::exact_multi_mwlp(g, agents).assignment;
  } else {
    const auto id = mwlp::parse_strategy(strategy);
    if (!id) throw CLI::ValidationError("unknown strategy '" + strategy + "'");
    assignment = mwlp::run_strategy(g, agents, *id, seed, alpha).assignment;
  }

  const mwlp::RestorationCurve curve = mwlp::restoration_curve(g, assignment);
  std::ofstream file(out, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + out + " for writing");
  curve.write_csv(file);
  std::cout << "curve with " << curve.points.size() << " points -> " << out
            << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-crew minimum weighted latency solvers and benchmarks"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "Write an instance file");
  GeneratorFlags gen_flags;
  gen_flags.register_on(generate);
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  generate->add_option("--seed", gen_seed, "Generator seed");
  generate->add_option("--out", gen_out, "Output instance file")->required();

  // solve
  auto* solve = app.add_subcommand("solve", "Run one strategy on an instance");
  std::string solve_instance, solve_strategy, solve_out;
  int solve_agents = 20;
  std::uint64_t solve_seed = 0;
  double solve_alpha = 0.13;
  solve->add_option("--instance", solve_instance)->required();
  solve->add_option("--strategy", solve_strategy,
                    "GA|NNA|GRA|TSG|TSNN|EXACT")->required();
  solve->add_option("--agents", solve_agents, "Crew count");
  solve->add_option("--seed", solve_seed, "Solver seed");
  solve->add_option("--alpha", solve_alpha, "Outlier threshold");
  solve->add_option("--out", solve_out, "Optional report CSV");

  // benchmark
  auto* benchmark =
      app.add_subcommand("benchmark", "Instances x strategies sweep");
  GeneratorFlags bench_flags;
  bench_flags.register_on(benchmark);
  std::vector<std::uint64_t> bench_seeds;
  std::vector<std::string> bench_strategies;
  std::string bench_dir, bench_out;
  double bench_alpha = 0.13;
  unsigned bench_jobs = std::max(1u, std::thread::hardware_concurrency());
  benchmark->add_option("--seed", bench_seeds, "Instance seed (repeatable)");
  benchmark->add_option("--strategy", bench_strategies,
                        "Strategy label (repeatable)");
  benchmark->add_option("--instance-dir", bench_dir,
                        "Load .mwlp instances instead of generating");
  benchmark->add_option("--alpha", bench_alpha, "Outlier threshold");
  benchmark->add_option("--jobs", bench_jobs, "Worker threads");
  benchmark->add_option("--out", bench_out, "Report CSV")->required();

  // curve
  auto* curve = app.add_subcommand("curve", "Restoration curve CSV");
  std::string curve_instance, curve_strategy, curve_out;
  int curve_agents = 20;
  std::uint64_t curve_seed = 0;
  double curve_alpha = 0.13;
  curve->add_option("--instance", curve_instance)->required();
  curve->add_option("--strategy", curve_strategy)->required();
  curve->add_option("--agents", curve_agents, "Crew count");
  curve->add_option("--seed", curve_seed, "Solver seed");
  curve->add_option("--alpha", curve_alpha, "Outlier threshold");
  curve->add_option("--out", curve_out, "Output CSV")->required();

  try {
    app.parse(argc, argv);
    if (generate->parsed())
      return cmd_generate(gen_flags, gen_seed, gen_out);
    if (solve->parsed())
      return cmd_solve(solve_instance, solve_strategy, solve_agents, solve_seed,
                       solve_alpha, solve_out);
    if (benchmark->parsed())
      return cmd_benchmark(bench_flags, bench_seeds, bench_strategies,
                           bench_dir, bench_alpha, bench_jobs, bench_out);
    if (curve->parsed())
      return cmd_curve(curve_instance, curve_strategy, curve_agents, curve_seed,
                       curve_alpha, curve_out);
    return kExitUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const mwlp::size_guard_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSizeGuard;
  } catch (const mwlp::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
