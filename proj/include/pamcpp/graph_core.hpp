#pragma once

#include <utility>
#include <vector>

#include "pamcpp/hypergraph.hpp"

namespace pamcpp {

// Connected acyclic set of hyperedges plus a traversal anchor.
struct HyperTree {
  std::vector<int> vertices;                  // sorted unique
  std::vector<std::pair<int, int>> edges;     // u < v, sorted
  int anchor = -1;
  double total_cost = 0.0;

  bool contains(int hv) const;
  friend bool operator==(const HyperTree&, const HyperTree&) = default;
};

// A 4-connected sequence of free grid cells.
struct GridWalk {
  std::vector<Cell> cells;

  friend bool operator==(const GridWalk&, const GridWalk&) = default;
};

struct DijkstraResult {
  std::vector<double> dist;
  std::vector<int> parent;  // -1 at the source

  // Vertex sequence source..target following parents.
  std::vector<int> path_to(int target) const;
};

// Shortest hyperedge-cost distances from source; equal-cost parents resolve
// to the smaller hypervertex id.
DijkstraResult dijkstra(const HyperGraph& h, int source);

// Minimum spanning tree of the subgraph induced by subset, ties broken by
// lexicographic edge id. Anchor is left unset. Throws ValidationError
// ("disconnected subset") if subset does not induce a connected subgraph.
HyperTree kruskal_mst(const HyperGraph& h, const std::vector<int>& subset);

// Shortest-path heuristic Steiner tree: grow from the smallest terminal,
// repeatedly attach the nearest unconnected terminal along its shortest path,
// then prune non-terminal leaves. Cost is within 2x of optimal.
HyperTree steiner_tree(const HyperGraph& h, const std::vector<int>& terminals);

// Clockwise circumnavigation of the tree starting (and ending) at start_cell:
// a closed walk of 4*|vertices|+1 entries visiting every block cell once.
// Throws ValidationError("start cell outside tree") otherwise.
GridWalk circumnavigate(const HyperGraph& h, const HyperTree& tree, Cell start_cell);

// Cell-level shortest path. time_weighted selects entered-cell-cost distance
// over step count; ties resolve to the lexicographically smallest next cell.
GridWalk grid_shortest_path(const GridMap& map, Cell from, Cell to, bool time_weighted);

// Distances from the nearest source to every free cell (steps, or entered-cell
// costs when time_weighted). Unreachable/obstacle cells hold +inf.
std::vector<double> cell_distances(const GridMap& map, const std::vector<Cell>& sources,
                                   bool time_weighted);

// Cost of traversing a walk: steps, or the sum of entered-cell costs.
double walk_cost(const GridMap& map, const GridWalk& walk, bool time_weighted);

double hyperedge_cost(const HyperGraph& h, int u, int v);

// Normalizes vertices/edges, recomputes total_cost from h, and enforces the
// tree invariant |edges| = |vertices| - 1 with anchor inside.
HyperTree make_tree(const HyperGraph& h, std::vector<int> vertices,
                    std::vector<std::pair<int, int>> edges, int anchor);

}  // namespace pamcpp
