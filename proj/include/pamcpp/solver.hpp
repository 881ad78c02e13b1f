#pragma once

#include <optional>
#include <vector>

#include "pamcpp/evaluator.hpp"

namespace pamcpp {

// Wall time per pipeline stage, in seconds.
struct StageTimes {
  double cost_calculation = 0.0;
  double zone_assignment = 0.0;
  double sequential_tree_traversal = 0.0;
  double residual_path_planning = 0.0;
};

struct SolveOptions {
  bool run_baseline = false;
  bool keep_trace = false;
};

struct SolveResult {
  FullPlan plan;
  Metrics metrics;
  std::optional<Metrics> baseline_metrics;
  std::vector<LsTraceEntry> ls_trace;  // populated only when requested
  StageTimes stage_seconds;
};

// Full two-phase pipeline: cost tables, greedy assignment plus local search,
// zone-tree traversal, residual coverage, then metric evaluation.
SolveResult solve(const Instance& instance, const SolveOptions& options = {});

}  // namespace pamcpp
