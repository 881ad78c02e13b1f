#pragma once

#include <vector>

#include "pamcpp/assignment.hpp"
#include "pamcpp/graph_core.hpp"

namespace pamcpp {

// One robot's prioritized-zone traversal: zone trees in visiting order, the
// resulting cell walk, and the hypervertices those trees span.
struct Phase1Plan {
  int robot = 0;
  std::vector<HyperTree> trees;
  GridWalk walk;
  std::vector<int> covered_hvs;  // sorted union of tree vertices
};

// Zone-wise tree construction: per zone, a shortest connector path from the
// running anchor to the zone's nearest hypervertex merged with the zone's MST.
// The connector is truncated at its first vertex inside the zone so the merge
// stays acyclic; the anchor then advances to the entry vertex.
std::vector<HyperTree> build_zone_trees(const HyperGraph& h, int start_hv,
                                        const std::vector<std::vector<int>>& zones);

// Sequential tree traversal: circumnavigate each tree in order; as soon as the
// current zone's cells are all covered, splice in the closed traversal of the
// remaining zones at the current cell and resume, so every tree cell is
// walked and the result is a closed walk from start_cell.
GridWalk sequential_tree_traversal(const HyperGraph& h, const GridMap& map,
                                   const std::vector<std::vector<Cell>>& zone_cells,
                                   const std::vector<HyperTree>& trees, Cell start_cell);

std::vector<Phase1Plan> plan_phase1(const HyperGraph& h, const Instance& instance,
                                    const Assignment& assignment,
                                    const std::vector<std::vector<int>>& zone_hvs);

}  // namespace pamcpp
