#include "pamcpp/residual_planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "pamcpp/errors.hpp"

namespace pamcpp {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::vector<int> residual_set(const HyperGraph& h, const std::vector<Phase1Plan>& phase1) {
  std::vector<char> covered(h.hv_count, 0);
  for (const Phase1Plan& plan : phase1)
    for (int hv : plan.covered_hvs) covered[hv] = 1;
  std::vector<int> out;
  for (int hv = 0; hv < h.hv_count; ++hv)
    if (!covered[hv]) out.push_back(hv);
  return out;
}

namespace {

struct SplitContext {
  const GridMap* map = nullptr;
  const GridWalk* cycle = nullptr;
  int n = 0;  // distinct cycle cells
  int k = 0;
  const std::vector<double>* phase1_costs = nullptr;
  std::vector<std::vector<double>> robot_dist;  // per robot, to every cell
  std::vector<int> order;                       // robots by nearest cycle index
  std::vector<double> entry_cost;               // cost of entering cycle[idx]
  std::vector<double> prefix;                   // prefix sums of entry_cost

  double transfer(int robot, int idx) const {
    return robot_dist[robot][map->index(cycle->cells[idx])];
  }
  // cost of walking an arc of `len` cells starting at `start`
  double arc_cost(int start, int len) const {
    if (len <= 1) return 0.0;
    return prefix[start + len] - prefix[start + 1];
  }
};

struct Allocation {
  std::vector<std::pair<int, int>> arcs;
  double realized_max = 0.0;
  bool complete = false;
};

Allocation greedy_fill(const SplitContext& ctx, double bound) {
  Allocation alloc;
  alloc.arcs.assign(ctx.k, {0, 0});
  int idx = 0;
  double realized = 0.0;
  for (int robot : ctx.order) {
    double c1 = (*ctx.phase1_costs)[robot];
    realized = std::max(realized, c1);
    if (idx >= ctx.n) continue;
    double t = ctx.transfer(robot, idx);
    double budget = bound - c1 - t;
    if (budget < 0.0) continue;
    // longest arc whose traversal stays within budget
    int lo = 1, hi = ctx.n - idx, len = 1;
    while (lo <= hi) {
      int mid = (lo + hi) / 2;
      if (ctx.arc_cost(idx, mid) <= budget) {
        len = mid;
        lo = mid + 1;
      } else {
        hi = mid - 1;
      }
    }
    alloc.arcs[robot] = {idx, len};
    realized = std::max(realized, c1 + t + ctx.arc_cost(idx, len));
    idx += len;
  }
  alloc.complete = idx >= ctx.n;
  alloc.realized_max = realized;
  return alloc;
}

Allocation equal_split(const SplitContext& ctx) {
  Allocation alloc;
  alloc.arcs.assign(ctx.k, {0, 0});
  int base = ctx.n / ctx.k, extra = ctx.n % ctx.k;
  int idx = 0;
  double realized = 0.0;
  for (int pos = 0; pos < ctx.k; ++pos) {
    int robot = ctx.order[pos];
    double c1 = (*ctx.phase1_costs)[robot];
    int len = base + (pos < extra ? 1 : 0);
    if (len > 0) {
      alloc.arcs[robot] = {idx, len};
      realized = std::max(realized, c1 + ctx.transfer(robot, idx) + ctx.arc_cost(idx, len));
      idx += len;
    } else {
      realized = std::max(realized, c1);
    }
  }
  alloc.complete = idx >= ctx.n;
  alloc.realized_max = realized;
  return alloc;
}

}  // namespace

SplitResult min_max_split(const GridWalk& cycle, const std::vector<double>& phase1_costs,
                          const std::vector<Cell>& phase1_ends, const GridMap& map,
                          bool time_weighted) {
  SplitContext ctx;
  ctx.map = &map;
  ctx.cycle = &cycle;
  ctx.n = static_cast<int>(cycle.cells.size()) - 1;
  ctx.k = static_cast<int>(phase1_ends.size());
  ctx.phase1_costs = &phase1_costs;
  if (ctx.n < 1 || ctx.k < 1) throw InternalError("degenerate cycle split");

  for (Cell end : phase1_ends)
    ctx.robot_dist.push_back(cell_distances(map, {end}, time_weighted));

  std::vector<int> nearest(ctx.k, 0);
  for (int i = 0; i < ctx.k; ++i) {
    double best = kInf;
    for (int idx = 0; idx < ctx.n; ++idx) {
      double d = ctx.transfer(i, idx);
      if (d < best) {
        best = d;
        nearest[i] = idx;
      }
    }
  }
  std::vector<int> base_order(ctx.k);
  std::iota(base_order.begin(), base_order.end(), 0);
  std::sort(base_order.begin(), base_order.end(), [&](int a, int b) {
    return nearest[a] != nearest[b] ? nearest[a] < nearest[b] : a < b;
  });

  ctx.entry_cost.resize(ctx.n);
  for (int idx = 0; idx < ctx.n; ++idx)
    ctx.entry_cost[idx] = time_weighted ? map.cost[map.index(cycle.cells[idx])] : 1.0;
  ctx.prefix.assign(ctx.n + 1, 0.0);
  for (int idx = 0; idx < ctx.n; ++idx)
    ctx.prefix[idx + 1] = ctx.prefix[idx] + ctx.entry_cost[idx];

  // The greedy fill is sensitive to which robot takes the first arc, so every
  // rotation of the nearest-index order is tried and the smallest realized
  // max wins.
  Allocation best;
  best.realized_max = kInf;
  best.complete = false;
  for (int shift = 0; shift < ctx.k; ++shift) {
    ctx.order.clear();
    for (int pos = 0; pos < ctx.k; ++pos)
      ctx.order.push_back(base_order[(pos + shift) % ctx.k]);

    int first = ctx.order.front();
    double hi = phase1_costs[first] + ctx.transfer(first, 0) + ctx.arc_cost(0, ctx.n);
    for (double c1 : phase1_costs) hi = std::max(hi, c1);
    Allocation top = greedy_fill(ctx, hi);
    if (!top.complete) continue;
    if (top.realized_max < best.realized_max) best = top;

    if (!time_weighted) {
      long long ilo = 0, ihi = static_cast<long long>(std::llround(hi));
      while (ilo <= ihi) {
        long long mid = (ilo + ihi) / 2;
        Allocation cand = greedy_fill(ctx, static_cast<double>(mid));
        if (cand.complete) {
          if (cand.realized_max < best.realized_max) best = cand;
          ihi = mid - 1;
        } else {
          ilo = mid + 1;
        }
      }
    } else {
      double lo = 0.0;
      for (int step = 0; step < 100; ++step) {
        double mid = 0.5 * (lo + hi);
        Allocation cand = greedy_fill(ctx, mid);
        if (cand.complete) {
          if (cand.realized_max < best.realized_max) best = cand;
          hi = mid;
        } else {
          lo = mid;
        }
      }
    }

    Allocation equal = equal_split(ctx);
    if (equal.complete && equal.realized_max < best.realized_max) best = equal;
  }
  if (!best.complete) throw InternalError("cycle split infeasible at upper bound");

  SplitResult result;
  result.arcs = best.arcs;
  result.realized_max = best.realized_max;
  result.transfers.resize(ctx.k);
  for (int i = 0; i < ctx.k; ++i) {
    auto [start, len] = best.arcs[i];
    if (len == 0) continue;
    result.transfers[i] =
        grid_shortest_path(map, phase1_ends[i], cycle.cells[start], time_weighted);
  }
  return result;
}

FullPlan plan_phase2(const HyperGraph& h, const Instance& instance,
                     const std::vector<Phase1Plan>& phase1, const Assignment& assignment,
                     ResidualPlan* residual_out) {
  const GridMap& map = instance.map;
  const bool weighted = instance.config.weighted_time;
  FullPlan plan;
  plan.assignment = assignment;
  for (const Phase1Plan& p : phase1) {
    plan.paths.push_back(p.walk);
    plan.phase_boundary.push_back(static_cast<int>(p.walk.cells.size()));
  }

  std::vector<int> residual = residual_set(h, phase1);
  ResidualPlan detail;
  if (!residual.empty()) {
    detail.steiner = steiner_tree(h, residual);

    std::vector<Cell> ends;
    for (const Phase1Plan& p : phase1) ends.push_back(p.walk.cells.back());
    auto end_dist = cell_distances(map, ends, false);
    Cell origin{-1, -1};
    double best = kInf;
    for (int hv : detail.steiner.vertices) {
      for (Cell c : h.hv_cells[hv]) {
        double d = end_dist[map.index(c)];
        if (d < best || (d == best && map.index(c) < map.index(origin))) {
          best = d;
          origin = c;
        }
      }
    }
    detail.cycle = circumnavigate(h, detail.steiner, origin);

    std::vector<double> c1;
    for (const Phase1Plan& p : phase1) c1.push_back(walk_cost(map, p.walk, weighted));
    SplitResult split = min_max_split(detail.cycle, c1, ends, map, weighted);
    detail.arcs = split.arcs;
    detail.transfers = split.transfers;

    for (std::size_t i = 0; i < plan.paths.size(); ++i) {
      auto [start, len] = split.arcs[i];
      if (len == 0) continue;
      auto& cells = plan.paths[i].cells;
      const auto& transfer = split.transfers[i].cells;
      cells.insert(cells.end(), transfer.begin() + 1, transfer.end());
      for (int t = 1; t < len; ++t) cells.push_back(detail.cycle.cells[start + t]);
    }
  }

  if (instance.config.closed_tour) {
    for (std::size_t i = 0; i < plan.paths.size(); ++i) {
      Cell last = plan.paths[i].cells.back();
      Cell home = instance.robots[i];
      if (last == home) continue;
      GridWalk leg = grid_shortest_path(map, last, home, weighted);
      plan.paths[i].cells.insert(plan.paths[i].cells.end(), leg.cells.begin() + 1,
                                 leg.cells.end());
    }
  }

  if (residual_out) *residual_out = std::move(detail);
  return plan;
}

}  // namespace pamcpp
