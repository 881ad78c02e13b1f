#pragma once

#include <utility>
#include <vector>

#include "pamcpp/residual_planner.hpp"

namespace pamcpp {

struct Metrics {
  std::vector<int> zone_times;      // T_j, 1-based timesteps
  double weighted_latency = 0.0;    // sum of w_j * T_j
  int makespan = 0;                 // max path cell count
  double mmr = 1.0;                 // makespan / mean path length
  std::pair<double, int> lex_key() const { return {weighted_latency, makespan}; }
};

// Earliest synchronized timestep at which every cell of each zone has been
// visited; robots advance one cell per timestep, shorter paths simply stop.
std::vector<int> zone_coverage_times(const Instance& instance, const FullPlan& plan);

Metrics evaluate(const Instance& instance, const FullPlan& plan);

// -1 / 0 / +1; latencies within 1e-9 compare as equal and fall through to
// makespan.
int lex_compare(const Metrics& a, const Metrics& b);

// Priority-agnostic reference: all robots idle through phase 1, so the whole
// map is planned as residual coverage; zone latencies are measured afterwards.
FullPlan baseline_plan(const Instance& instance);

// Walk validity, start cells, closed-tour endings and full coverage; throws
// ValidationError describing the first violation.
void check_plan(const Instance& instance, const FullPlan& plan);

}  // namespace pamcpp
