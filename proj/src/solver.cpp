#include "pamcpp/solver.hpp"

#include <chrono>

#include "pamcpp/io.hpp"

namespace pamcpp {

namespace {

class StageClock {
 public:
  StageClock() : start_(std::chrono::steady_clock::now()) {}
  double lap() {
    auto now = std::chrono::steady_clock::now();
    double s = std::chrono::duration<double>(now - start_).count();
    start_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

SolveResult solve(const Instance& instance, const SolveOptions& options) {
  SolveResult result;
  StageClock clock;

  HyperGraph h = build_hypergraph(instance.map);
  std::vector<std::vector<int>> zone_hvs;
  zone_hvs.reserve(instance.zones.size());
  for (const Zone& zone : instance.zones)
    zone_hvs.push_back(zone_hypervertices(h, instance.map, zone));
  std::vector<double> weights;
  for (const Zone& zone : instance.zones) weights.push_back(zone.weight);
  CostTables tables = compute_cost_tables(h, instance, zone_hvs);
  result.stage_seconds.cost_calculation = clock.lap();

  Assignment assignment = greedy_assign(tables, weights, static_cast<int>(instance.robots.size()));
  assignment = local_search(assignment, tables, weights, instance.config,
                            options.keep_trace ? &result.ls_trace : nullptr);
  result.stage_seconds.zone_assignment = clock.lap();

  std::vector<Phase1Plan> phase1 = plan_phase1(h, instance, assignment, zone_hvs);
  result.stage_seconds.sequential_tree_traversal = clock.lap();

  result.plan = plan_phase2(h, instance, phase1, assignment);
  result.plan.instance_digest = instance_digest(instance);
  result.stage_seconds.residual_path_planning = clock.lap();

  result.metrics = evaluate(instance, result.plan);
  if (options.run_baseline)
    result.baseline_metrics = evaluate(instance, baseline_plan(instance));
  return result;
}

}  // namespace pamcpp
