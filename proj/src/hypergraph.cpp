#include "pamcpp/hypergraph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>

#include "pamcpp/errors.hpp"

namespace pamcpp {

HyperGraph build_hypergraph(const GridMap& map) {
  HyperGraph h;
  const int bw = map.width / 2, bh = map.height / 2;
  std::vector<int> block_to_hv(bw * bh, -1);

  for (int by = 0; by < bh; ++by) {
    for (int bx = 0; bx < bw; ++bx) {
      Cell nw{2 * bx, 2 * by};
      if (!map.is_free(nw)) continue;  // blocks are uniformly free or blocked
      block_to_hv[by * bw + bx] = h.hv_count++;
      std::array<Cell, 4> cells{{nw, {nw.x + 1, nw.y}, {nw.x, nw.y + 1}, {nw.x + 1, nw.y + 1}}};
      double sum = 0.0;
      for (Cell c : cells) sum += map.cost[map.index(c)];
      h.hv_cells.push_back(cells);
      h.hv_cost.push_back(sum / 4.0);
      h.hv_block.emplace_back(bx, by);
    }
  }

  h.cell_to_hv.assign(map.width * map.height, -1);
  for (int hv = 0; hv < h.hv_count; ++hv)
    for (Cell c : h.hv_cells[hv]) h.cell_to_hv[map.index(c)] = hv;

  h.adjacency.resize(h.hv_count);
  for (int hv = 0; hv < h.hv_count; ++hv) {
    auto [bx, by] = h.hv_block[hv];
    // right and down neighbors only; each edge recorded once with u < v
    for (auto [nbx, nby] : {std::pair{bx + 1, by}, std::pair{bx, by + 1}}) {
      if (nbx >= bw || nby >= bh) continue;
      int other = block_to_hv[nby * bw + nbx];
      if (other == -1) continue;
      double cost = (h.hv_cost[hv] + h.hv_cost[other]) / 2.0;
      h.edges.push_back({hv, other, cost});
    }
  }
  std::sort(h.edges.begin(), h.edges.end(),
            [](const HyperEdge& a, const HyperEdge& b) {
              return a.u != b.u ? a.u < b.u : a.v < b.v;
            });
  for (const HyperEdge& e : h.edges) {
    h.adjacency[e.u].emplace_back(e.v, e.cost);
    h.adjacency[e.v].emplace_back(e.u, e.cost);
  }
  for (auto& nbrs : h.adjacency) std::sort(nbrs.begin(), nbrs.end());
  return h;
}

std::vector<int> zone_hypervertices(const HyperGraph& h, const GridMap& map,
                                    const Zone& zone) {
  std::set<int> members;
  for (Cell c : zone.cells) members.insert(h.hv_of(map, c));

  std::deque<int> queue{*members.begin()};
  std::set<int> seen{*members.begin()};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (auto [v, cost] : h.adjacency[u]) {
      (void)cost;
      if (!members.count(v) || seen.count(v)) continue;
      seen.insert(v);
      queue.push_back(v);
    }
  }
  if (seen.size() != members.size())
    throw ValidationError("zone " + std::to_string(zone.id) +
                          " fragmented after contraction");
  return {members.begin(), members.end()};
}

}  // namespace pamcpp
