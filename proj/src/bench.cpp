#include "pamcpp/bench.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace pamcpp {

namespace {

MetricStats stats_of(const std::vector<double>& values) {
  MetricStats s;
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / values.size();
  if (values.size() > 1) {
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(sq / (values.size() - 1));
  }
  return s;
}

BenchRow aggregate(const std::string& label, const std::vector<SolveResult>& results) {
  BenchRow row;
  row.label = label;
  row.trials = static_cast<int>(results.size());
  std::vector<double> lat, mk, mmr, blat, bmk, bmmr;
  for (const SolveResult& r : results) {
    lat.push_back(r.metrics.weighted_latency);
    mk.push_back(r.metrics.makespan);
    mmr.push_back(r.metrics.mmr);
    if (r.baseline_metrics) {
      blat.push_back(r.baseline_metrics->weighted_latency);
      bmk.push_back(r.baseline_metrics->makespan);
      bmmr.push_back(r.baseline_metrics->mmr);
    }
  }
  row.latency = stats_of(lat);
  row.makespan = stats_of(mk);
  row.mmr = stats_of(mmr);
  row.base_latency = stats_of(blat);
  row.base_makespan = stats_of(bmk);
  row.base_mmr = stats_of(bmmr);
  if (row.base_latency.mean > 0.0)
    row.latency_improvement_pct =
        100.0 * (row.base_latency.mean - row.latency.mean) / row.base_latency.mean;
  if (row.base_makespan.mean > 0.0)
    row.makespan_improvement_pct =
        100.0 * (row.base_makespan.mean - row.makespan.mean) / row.base_makespan.mean;
  return row;
}

std::vector<int> sweep_counts(const BenchOptions& options, int fallback) {
  if (!options.robot_sweep.empty()) return options.robot_sweep;
  return {fallback};
}

}  // namespace

std::vector<BenchRow> bench_instance(const Instance& base, const BenchOptions& options) {
  std::vector<BenchRow> rows;
  for (int k : sweep_counts(options, static_cast<int>(base.robots.size()))) {
    std::vector<SolveResult> results;
    for (int t = 0; t < options.trials; ++t) {
      Instance trial = resample_starts(base, k, options.seed + t);
      trial.config.seed = options.seed + t;
      results.push_back(solve(trial, {.run_baseline = true}));
    }
    rows.push_back(aggregate("robots=" + std::to_string(k), results));
  }
  return rows;
}

std::vector<BenchRow> bench_generated(int width, int height, int n_zones, int n_robots,
                                      CostMode cost_mode, const SolverConfig& config,
                                      const BenchOptions& options) {
  std::vector<BenchRow> rows;
  for (int k : sweep_counts(options, n_robots)) {
    std::vector<SolveResult> results;
    for (int t = 0; t < options.trials; ++t) {
      Instance trial =
          generate_instance(options.seed + t, width, height, n_zones, k, cost_mode);
      trial.config = config;
      trial.config.seed = options.seed + t;
      results.push_back(solve(trial, {.run_baseline = true}));
    }
    rows.push_back(aggregate("robots=" + std::to_string(k), results));
  }
  return rows;
}

std::string format_bench_table(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "row           trials  latency (solver)     latency (baseline)   "
         "makespan (solver)    makespan (baseline)  mmr (solver)   "
         "impr.lat%  impr.mk%\n";
  for (const BenchRow& r : rows) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "%-13s %6d  %8.1f ± %-8.1f  %8.1f ± %-8.1f  %8.1f ± %-8.1f  "
                  "%8.1f ± %-8.1f  %5.2f ± %-5.2f  %8.1f  %8.1f\n",
                  r.label.c_str(), r.trials, r.latency.mean, r.latency.stddev,
                  r.base_latency.mean, r.base_latency.stddev, r.makespan.mean,
                  r.makespan.stddev, r.base_makespan.mean, r.base_makespan.stddev,
                  r.mmr.mean, r.mmr.stddev, r.latency_improvement_pct,
                  r.makespan_improvement_pct);
    out << buf;
  }
  return out.str();
}

std::string serialize_bench(const std::vector<BenchRow>& rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const BenchRow& r : rows) {
    nlohmann::ordered_json j;
    j["label"] = r.label;
    j["trials"] = r.trials;
    auto put = [&](const char* name, const MetricStats& s) {
      j[name] = {{"mean", s.mean}, {"std", s.stddev}};
    };
    put("weighted_latency", r.latency);
    put("weighted_latency_baseline", r.base_latency);
    put("makespan", r.makespan);
    put("makespan_baseline", r.base_makespan);
    put("mmr", r.mmr);
    put("mmr_baseline", r.base_mmr);
    j["latency_improvement_pct"] = r.latency_improvement_pct;
    j["makespan_improvement_pct"] = r.makespan_improvement_pct;
    doc.push_back(j);
  }
  return doc.dump(2) + "\n";
}

}  // namespace pamcpp
