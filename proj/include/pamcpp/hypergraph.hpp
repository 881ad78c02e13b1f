#pragma once

#include <array>
#include <utility>
#include <vector>

#include "pamcpp/instance.hpp"

namespace pamcpp {

struct HyperEdge {
  int u = 0;  // u < v
  int v = 0;
  double cost = 0.0;
};

// Contraction of the grid into fully-free 2x2 blocks. Hypervertex ids follow
// block row-major order; vertex cost is the mean of its four cell costs and
// edge cost the mean of its endpoint costs.
struct HyperGraph {
  int hv_count = 0;
  std::vector<std::array<Cell, 4>> hv_cells;  // NW, NE, SW, SE
  std::vector<double> hv_cost;
  std::vector<std::pair<int, int>> hv_block;  // (bx, by) per hypervertex
  std::vector<HyperEdge> edges;               // sorted by (u, v)
  std::vector<std::vector<std::pair<int, double>>> adjacency;  // sorted by id
  std::vector<int> cell_to_hv;                // row-major; -1 on obstacles

  int hv_of(const GridMap& map, Cell c) const { return cell_to_hv[map.index(c)]; }
};

HyperGraph build_hypergraph(const GridMap& map);

// Hypervertices containing at least one cell of the zone.
// Throws ValidationError("zone ... fragmented after contraction") if the
// result is disconnected in h.
std::vector<int> zone_hypervertices(const HyperGraph& h, const GridMap& map,
                                    const Zone& zone);

}  // namespace pamcpp
