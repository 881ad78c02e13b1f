#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pamcpp/generator.hpp"
#include "pamcpp/solver.hpp"

namespace pamcpp {

struct MetricStats {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation
};

struct BenchRow {
  std::string label;
  int trials = 0;
  MetricStats latency, makespan, mmr;
  MetricStats base_latency, base_makespan, base_mmr;
  double latency_improvement_pct = 0.0;   // (baseline - solver) / baseline
  double makespan_improvement_pct = 0.0;
};

struct BenchOptions {
  int trials = 10;
  std::uint64_t seed = 1;        // trial t runs with seed + t
  std::vector<int> robot_sweep;  // when set, one row per robot count
};

// Trials on a fixed map and zone layout, resampling robot starts per trial.
std::vector<BenchRow> bench_instance(const Instance& base, const BenchOptions& options);

// Trials on freshly generated instances.
std::vector<BenchRow> bench_generated(int width, int height, int n_zones, int n_robots,
                                      CostMode cost_mode, const SolverConfig& config,
                                      const BenchOptions& options);

std::string format_bench_table(const std::vector<BenchRow>& rows);
std::string serialize_bench(const std::vector<BenchRow>& rows);

}  // namespace pamcpp
