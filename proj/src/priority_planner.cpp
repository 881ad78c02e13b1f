#include "pamcpp/priority_planner.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "pamcpp/errors.hpp"

namespace pamcpp {

std::vector<HyperTree> build_zone_trees(const HyperGraph& h, int start_hv,
                                        const std::vector<std::vector<int>>& zones) {
  std::vector<HyperTree> out;
  int anchor = start_hv;
  for (const auto& zone : zones) {
    auto reach = dijkstra(h, anchor);
    int entry = -1;
    for (int u : zone)
      if (entry == -1 || reach.dist[u] < reach.dist[entry] ||
          (reach.dist[u] == reach.dist[entry] && u < entry))
        entry = u;

    std::vector<int> connector = reach.path_to(entry);
    HyperTree internal = kruskal_mst(h, zone);

    // keep the connector only up to its first vertex inside the zone
    std::vector<int> kept;
    for (int v : connector) {
      kept.push_back(v);
      if (internal.contains(v)) break;
    }

    std::vector<int> vertices = internal.vertices;
    std::vector<std::pair<int, int>> edges = internal.edges;
    for (std::size_t i = 0; i + 1 < kept.size(); ++i) {
      vertices.push_back(kept[i]);
      edges.emplace_back(kept[i], kept[i + 1]);
    }
    out.push_back(make_tree(h, std::move(vertices), std::move(edges), anchor));
    anchor = entry;
  }
  return out;
}

namespace {

Cell nearest_block_cell(const HyperGraph& h, const GridMap& map, int hv, Cell from) {
  Cell best{-1, -1};
  std::size_t best_len = std::numeric_limits<std::size_t>::max();
  for (Cell cand : h.hv_cells[hv]) {
    auto walk = grid_shortest_path(map, from, cand, false);
    if (walk.cells.size() < best_len ||
        (walk.cells.size() == best_len && lex_less(cand, best))) {
      best_len = walk.cells.size();
      best = cand;
    }
  }
  return best;
}

GridWalk traverse_from(const HyperGraph& h, const GridMap& map,
                       const std::vector<std::vector<Cell>>& zone_cells,
                       const std::vector<HyperTree>& trees, std::size_t level,
                       Cell start_cell) {
  GridWalk loop = circumnavigate(h, trees[level], start_cell);
  if (level + 1 == trees.size()) return loop;

  std::unordered_set<int> remaining;
  for (Cell c : zone_cells[level]) remaining.insert(map.index(c));

  GridWalk out;
  bool spliced = false;
  for (Cell v : loop.cells) {
    if (!spliced && remaining.empty()) {
      const HyperTree& next = trees[level + 1];
      if (next.contains(h.hv_of(map, v))) {
        GridWalk sub = traverse_from(h, map, zone_cells, trees, level + 1, v);
        out.cells.insert(out.cells.end(), sub.cells.begin(), sub.cells.end());
      } else {
        // detour to the next tree's anchor block and come back the same way
        Cell target = nearest_block_cell(h, map, next.anchor, v);
        GridWalk bridge = grid_shortest_path(map, v, target, false);
        GridWalk sub = traverse_from(h, map, zone_cells, trees, level + 1, target);
        out.cells.insert(out.cells.end(), bridge.cells.begin(), bridge.cells.end());
        out.cells.insert(out.cells.end(), sub.cells.begin() + 1, sub.cells.end());
        out.cells.insert(out.cells.end(), bridge.cells.rbegin() + 1, bridge.cells.rend());
      }
      spliced = true;
      continue;  // v was consumed as the head of the splice
    }
    out.cells.push_back(v);
    remaining.erase(map.index(v));
  }
  if (!spliced) throw InternalError("zone unreachable within tree");
  return out;
}

}  // namespace

GridWalk sequential_tree_traversal(const HyperGraph& h, const GridMap& map,
                                   const std::vector<std::vector<Cell>>& zone_cells,
                                   const std::vector<HyperTree>& trees, Cell start_cell) {
  if (trees.empty() || zone_cells.size() != trees.size())
    throw InternalError("traversal needs one tree per zone");
  return traverse_from(h, map, zone_cells, trees, 0, start_cell);
}

std::vector<Phase1Plan> plan_phase1(const HyperGraph& h, const Instance& instance,
                                    const Assignment& assignment,
                                    const std::vector<std::vector<int>>& zone_hvs) {
  std::vector<Phase1Plan> plans;
  plans.reserve(instance.robots.size());
  for (std::size_t i = 0; i < instance.robots.size(); ++i) {
    Phase1Plan plan;
    plan.robot = static_cast<int>(i);
    Cell start = instance.robots[i];
    const auto& seq = assignment.sequences[i];
    if (seq.empty()) {
      plan.walk.cells.push_back(start);
      plans.push_back(std::move(plan));
      continue;
    }

    std::vector<std::vector<int>> ordered_hvs;
    std::vector<std::vector<Cell>> ordered_cells;
    for (int j : seq) {
      ordered_hvs.push_back(zone_hvs[j]);
      ordered_cells.push_back(instance.zones[j].cells);
    }
    plan.trees = build_zone_trees(h, h.hv_of(instance.map, start), ordered_hvs);
    plan.walk = sequential_tree_traversal(h, instance.map, ordered_cells, plan.trees, start);
    for (const HyperTree& tree : plan.trees)
      plan.covered_hvs.insert(plan.covered_hvs.end(), tree.vertices.begin(),
                              tree.vertices.end());
    std::sort(plan.covered_hvs.begin(), plan.covered_hvs.end());
    plan.covered_hvs.erase(std::unique(plan.covered_hvs.begin(), plan.covered_hvs.end()),
                           plan.covered_hvs.end());
    plans.push_back(std::move(plan));
  }
  return plans;
}

}  // namespace pamcpp
