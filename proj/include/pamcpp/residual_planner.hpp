#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pamcpp/priority_planner.hpp"

namespace pamcpp {

// Steiner cycle over the uncovered hypervertices and its partition into
// per-robot arcs with the transfer walks that reach them.
struct ResidualPlan {
  HyperTree steiner;
  GridWalk cycle;                            // closed circumnavigation
  std::vector<std::pair<int, int>> arcs;     // (start index, length); (0,0) = idle
  std::vector<GridWalk> transfers;           // empty for idle robots
};

struct FullPlan {
  std::vector<GridWalk> paths;
  std::vector<int> phase_boundary;  // index where phase 2 begins (== |path| if none)
  Assignment assignment;
  std::string instance_digest;
};

// Hypervertices not spanned by any phase-1 tree.
std::vector<int> residual_set(const HyperGraph& h, const std::vector<Phase1Plan>& phase1);

struct SplitResult {
  std::vector<std::pair<int, int>> arcs;
  std::vector<GridWalk> transfers;
  double realized_max = 0.0;  // max over robots of phase1 + transfer + arc cost
};

// Partitions the cycle into contiguous arcs minimizing the largest combined
// workload max_i(C1_i + transfer_i + arc_i). Robots are ordered by the cycle
// index nearest to them; the bound is bisected with a greedy prefix-filling
// feasibility check, and the result never exceeds the equal-length split.
SplitResult min_max_split(const GridWalk& cycle, const std::vector<double>& phase1_costs,
                          const std::vector<Cell>& phase1_ends, const GridMap& map,
                          bool time_weighted);

FullPlan plan_phase2(const HyperGraph& h, const Instance& instance,
                     const std::vector<Phase1Plan>& phase1, const Assignment& assignment,
                     ResidualPlan* residual_out = nullptr);

}  // namespace pamcpp
