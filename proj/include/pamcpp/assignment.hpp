#pragma once

#include <string>
#include <vector>

#include "pamcpp/graph_core.hpp"
#include "pamcpp/instance.hpp"

namespace pamcpp {

// Surrogate travel costs between depots and zones on the hypergraph:
// zone_internal[j] is the zone's MST cost, depot_to_zone[i][j] the cheapest
// start-to-zone distance, zone_to_zone the optimistic closest-pair distance.
struct CostTables {
  std::vector<double> zone_internal;
  std::vector<std::vector<double>> depot_to_zone;  // [robot][zone]
  std::vector<std::vector<double>> zone_to_zone;   // symmetric, zero diagonal

  int zone_count() const { return static_cast<int>(zone_internal.size()); }
  int robot_count() const { return static_cast<int>(depot_to_zone.size()); }
};

// Ordered zone sequences per robot; every zone appears exactly once.
struct Assignment {
  std::vector<std::vector<int>> sequences;  // zone indices
  double surrogate_cost = 0.0;

  friend bool operator==(const Assignment&, const Assignment&) = default;
};

struct LsTraceEntry {
  int iteration = 0;
  bool move_op = false;  // move vs swap
  bool accepted = false;
  double surrogate = 0.0;
};

CostTables compute_cost_tables(const HyperGraph& h, const Instance& instance,
                               const std::vector<std::vector<int>>& zone_hvs);

// Sum over robots and sequence positions of weight * arrival time, where the
// arrival recurrence accumulates depot/inter-zone travel plus internal cost.
double surrogate_latency(const CostTables& tables, const std::vector<double>& weights,
                         const std::vector<std::vector<int>>& sequences);

// Greedy insertion: repeatedly commit the (robot, zone) append with the
// smallest weighted arrival-time increment; ties prefer the smaller robot id,
// then the smaller zone id.
Assignment greedy_assign(const CostTables& tables, const std::vector<double>& weights,
                         int n_robots);

// Accept-if-improving refinement with move/swap operators drawn per the
// configured schedule. With fewer than two zones every iteration is a no-op.
Assignment local_search(const Assignment& initial, const CostTables& tables,
                        const std::vector<double>& weights, const SolverConfig& config,
                        std::vector<LsTraceEntry>* trace = nullptr);

// Exhaustive minimizer over all ordered zone partitions; guarded to
// n_zones <= 7 and n_robots <= 3. Throws ValidationError beyond the guard.
Assignment brute_force_assign(const CostTables& tables, const std::vector<double>& weights,
                              int n_robots);

// Operator-selection probability of the move operator at iteration t.
double move_probability(const SolverConfig& config, int iteration);

}  // namespace pamcpp
