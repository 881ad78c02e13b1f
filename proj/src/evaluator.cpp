#include "pamcpp/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pamcpp/errors.hpp"
#include "pamcpp/hypergraph.hpp"

namespace pamcpp {

std::vector<int> zone_coverage_times(const Instance& instance, const FullPlan& plan) {
  const GridMap& map = instance.map;
  std::vector<int> first_visit(map.width * map.height, std::numeric_limits<int>::max());
  for (const GridWalk& path : plan.paths) {
    for (std::size_t t = 0; t < path.cells.size(); ++t) {
      int idx = map.index(path.cells[t]);
      first_visit[idx] = std::min(first_visit[idx], static_cast<int>(t) + 1);
    }
  }

  std::vector<int> times;
  times.reserve(instance.zones.size());
  for (const Zone& zone : instance.zones) {
    int t = 0;
    for (Cell c : zone.cells) {
      int v = first_visit[map.index(c)];
      if (v == std::numeric_limits<int>::max())
        throw InternalError("zone " + std::to_string(zone.id) + " never covered");
      t = std::max(t, v);
    }
    times.push_back(t);
  }
  return times;
}

Metrics evaluate(const Instance& instance, const FullPlan& plan) {
  Metrics m;
  m.zone_times = zone_coverage_times(instance, plan);
  for (std::size_t j = 0; j < instance.zones.size(); ++j)
    m.weighted_latency += instance.zones[j].weight * m.zone_times[j];

  double total = 0.0;
  for (const GridWalk& path : plan.paths) {
    m.makespan = std::max(m.makespan, static_cast<int>(path.cells.size()));
    total += static_cast<double>(path.cells.size());
  }
  double mean = total / static_cast<double>(plan.paths.size());
  m.mmr = static_cast<double>(m.makespan) / mean;
  return m;
}

int lex_compare(const Metrics& a, const Metrics& b) {
  constexpr double kTol = 1e-9;
  if (a.weighted_latency < b.weighted_latency - kTol) return -1;
  if (a.weighted_latency > b.weighted_latency + kTol) return 1;
  if (a.makespan < b.makespan) return -1;
  if (a.makespan > b.makespan) return 1;
  return 0;
}

FullPlan baseline_plan(const Instance& instance) {
  HyperGraph h = build_hypergraph(instance.map);
  std::vector<Phase1Plan> idle;
  for (std::size_t i = 0; i < instance.robots.size(); ++i) {
    Phase1Plan p;
    p.robot = static_cast<int>(i);
    p.walk.cells.push_back(instance.robots[i]);
    idle.push_back(std::move(p));
  }
  Assignment none;
  none.sequences.assign(instance.robots.size(), {});
  return plan_phase2(h, instance, idle, none);
}

void check_plan(const Instance& instance, const FullPlan& plan) {
  const GridMap& map = instance.map;
  if (plan.paths.size() != instance.robots.size())
    throw ValidationError("plan robot count mismatch");

  std::vector<char> visited(map.width * map.height, 0);
  for (std::size_t i = 0; i < plan.paths.size(); ++i) {
    const auto& cells = plan.paths[i].cells;
    if (cells.empty())
      throw ValidationError("robot " + std::to_string(i) + " path empty");
    if (!(cells.front() == instance.robots[i]))
      throw ValidationError("robot " + std::to_string(i) +
                            " path does not start at its start cell");
    for (std::size_t t = 0; t < cells.size(); ++t) {
      Cell c = cells[t];
      if (!map.in_bounds(c))
        throw ValidationError("robot " + std::to_string(i) + " cell (" +
                              std::to_string(c.x) + "," + std::to_string(c.y) +
                              ") out of bounds");
      if (!map.is_free(c))
        throw ValidationError("robot " + std::to_string(i) + " cell (" +
                              std::to_string(c.x) + "," + std::to_string(c.y) +
                              ") is not free");
      if (t > 0 && !adjacent4(cells[t - 1], c))
        throw ValidationError("non-adjacent step at robot " + std::to_string(i) +
                              " index " + std::to_string(t));
      visited[map.index(c)] = 1;
    }
    if (instance.config.closed_tour && !(cells.back() == instance.robots[i]))
      throw ValidationError("robot " + std::to_string(i) + " does not return to start");
    if (i < plan.phase_boundary.size()) {
      int b = plan.phase_boundary[i];
      if (b < 1 || b > static_cast<int>(cells.size()))
        throw ValidationError("robot " + std::to_string(i) + " phase boundary out of range");
    }
  }

  for (int y = 0; y < map.height; ++y)
    for (int x = 0; x < map.width; ++x)
      if (!map.obstacle[map.index(x, y)] && !visited[map.index(x, y)])
        throw ValidationError("coverage incomplete");
}

}  // namespace pamcpp
