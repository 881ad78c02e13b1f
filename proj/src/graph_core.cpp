#include "pamcpp/graph_core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "pamcpp/errors.hpp"

namespace pamcpp {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

bool HyperTree::contains(int hv) const {
  return std::binary_search(vertices.begin(), vertices.end(), hv);
}

std::vector<int> DijkstraResult::path_to(int target) const {
  std::vector<int> path;
  for (int v = target; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

DijkstraResult dijkstra(const HyperGraph& h, int source) {
  DijkstraResult r;
  r.dist.assign(h.hv_count, kInf);
  r.parent.assign(h.hv_count, -1);
  r.dist[source] = 0.0;

  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  queue.emplace(0.0, source);
  std::vector<char> done(h.hv_count, 0);
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (done[u]) continue;
    done[u] = 1;
    for (auto [v, w] : h.adjacency[u]) {
      double cand = d + w;
      if (cand < r.dist[v]) {
        r.dist[v] = cand;
        r.parent[v] = u;
        queue.emplace(cand, v);
      } else if (cand == r.dist[v] && u < r.parent[v]) {
        r.parent[v] = u;
      }
    }
  }
  return r;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

void normalize_tree(HyperTree& tree) {
  std::sort(tree.vertices.begin(), tree.vertices.end());
  tree.vertices.erase(std::unique(tree.vertices.begin(), tree.vertices.end()),
                      tree.vertices.end());
  for (auto& [u, v] : tree.edges)
    if (u > v) std::swap(u, v);
  std::sort(tree.edges.begin(), tree.edges.end());
  tree.edges.erase(std::unique(tree.edges.begin(), tree.edges.end()), tree.edges.end());
}

}  // namespace

double hyperedge_cost(const HyperGraph& h, int u, int v) {
  for (auto [n, w] : h.adjacency[u])
    if (n == v) return w;
  throw InternalError("missing hyperedge");
}

HyperTree make_tree(const HyperGraph& h, std::vector<int> vertices,
                    std::vector<std::pair<int, int>> edges, int anchor) {
  HyperTree tree;
  tree.vertices = std::move(vertices);
  tree.edges = std::move(edges);
  tree.anchor = anchor;
  normalize_tree(tree);
  if (tree.edges.size() + 1 != tree.vertices.size() || !tree.contains(anchor))
    throw InternalError("malformed hypertree");
  tree.total_cost = 0.0;
  for (auto [u, v] : tree.edges) tree.total_cost += hyperedge_cost(h, u, v);
  return tree;
}

HyperTree kruskal_mst(const HyperGraph& h, const std::vector<int>& subset) {
  HyperTree tree;
  tree.vertices = subset;
  normalize_tree(tree);
  if (tree.vertices.empty()) throw ValidationError("disconnected subset");

  std::vector<char> member(h.hv_count, 0);
  for (int v : tree.vertices) member[v] = 1;

  std::vector<HyperEdge> induced;
  for (const HyperEdge& e : h.edges)
    if (member[e.u] && member[e.v]) induced.push_back(e);
  std::stable_sort(induced.begin(), induced.end(),
                   [](const HyperEdge& a, const HyperEdge& b) { return a.cost < b.cost; });

  UnionFind uf(h.hv_count);
  for (const HyperEdge& e : induced) {
    if (!uf.merge(e.u, e.v)) continue;
    tree.edges.emplace_back(e.u, e.v);
    tree.total_cost += e.cost;
  }
  if (tree.edges.size() + 1 != tree.vertices.size())
    throw ValidationError("disconnected subset");
  std::sort(tree.edges.begin(), tree.edges.end());
  return tree;
}

HyperTree steiner_tree(const HyperGraph& h, const std::vector<int>& terminals) {
  std::set<int> wanted(terminals.begin(), terminals.end());
  if (wanted.empty()) throw ValidationError("disconnected subset");

  HyperTree tree;
  std::set<int> in_tree{*wanted.begin()};
  std::set<int> pending(std::next(wanted.begin()), wanted.end());

  while (!pending.empty()) {
    // multi-source shortest paths from the current tree
    std::vector<double> dist(h.hv_count, kInf);
    std::vector<int> parent(h.hv_count, -1);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    for (int v : in_tree) {
      dist[v] = 0.0;
      queue.emplace(0.0, v);
    }
    std::vector<char> done(h.hv_count, 0);
    while (!queue.empty()) {
      auto [d, u] = queue.top();
      queue.pop();
      if (done[u]) continue;
      done[u] = 1;
      for (auto [v, w] : h.adjacency[u]) {
        double cand = d + w;
        if (cand < dist[v]) {
          dist[v] = cand;
          parent[v] = u;
          queue.emplace(cand, v);
        } else if (cand == dist[v] && u < parent[v]) {
          parent[v] = u;
        }
      }
    }

    int best = -1;
    for (int t : pending)
      if (best == -1 || dist[t] < dist[best]) best = t;

    for (int v = best; parent[v] != -1; v = parent[v]) {
      tree.edges.emplace_back(parent[v], v);
      if (!in_tree.count(v)) in_tree.insert(v);
    }
    in_tree.insert(best);
    pending.erase(best);
  }

  tree.vertices.assign(in_tree.begin(), in_tree.end());
  normalize_tree(tree);

  // prune non-terminal leaves
  while (true) {
    std::map<int, int> degree;
    for (auto [u, v] : tree.edges) {
      ++degree[u];
      ++degree[v];
    }
    std::set<int> drop;
    for (int v : tree.vertices)
      if (!wanted.count(v) && degree[v] <= 1) drop.insert(v);
    if (drop.empty()) break;
    std::erase_if(tree.vertices, [&](int v) { return drop.count(v) > 0; });
    std::erase_if(tree.edges, [&](const std::pair<int, int>& e) {
      return drop.count(e.first) > 0 || drop.count(e.second) > 0;
    });
  }

  tree.total_cost = 0.0;
  for (auto [u, v] : tree.edges) tree.total_cost += hyperedge_cost(h, u, v);
  tree.anchor = *wanted.begin();
  return tree;
}

namespace {

// Corner roles within a block.
enum Corner { kNW = 0, kNE = 1, kSW = 2, kSE = 3 };

struct BlockFlags {
  bool north = false, east = false, south = false, west = false;
};

}  // namespace

GridWalk circumnavigate(const HyperGraph& h, const HyperTree& tree, Cell start_cell) {
  int owner = -1;
  for (int hv : tree.vertices)
    for (Cell c : h.hv_cells[hv])
      if (c == start_cell) owner = hv;
  if (owner == -1) throw ValidationError("start cell outside tree");

  std::map<std::pair<int, int>, BlockFlags> flags;
  for (int hv : tree.vertices) flags[h.hv_block[hv]];
  for (auto [u, v] : tree.edges) {
    auto [ux, uy] = h.hv_block[u];
    auto [vx, vy] = h.hv_block[v];
    if (uy == vy) {
      auto& left = ux < vx ? flags[{ux, uy}] : flags[{vx, vy}];
      auto& right = ux < vx ? flags[{vx, vy}] : flags[{ux, uy}];
      left.east = true;
      right.west = true;
    } else {
      auto& top = uy < vy ? flags[{ux, uy}] : flags[{vx, vy}];
      auto& bottom = uy < vy ? flags[{vx, vy}] : flags[{ux, uy}];
      top.south = true;
      bottom.north = true;
    }
  }

  // Clockwise boundary-following: the tree stays on the robot's right.
  auto next_cell = [&](Cell c) -> Cell {
    const BlockFlags& f = flags.at({c.x / 2, c.y / 2});
    int corner = (c.x & 1) + 2 * (c.y & 1);
    switch (corner) {
      case kNW:
        return f.north ? Cell{c.x, c.y - 1} : Cell{c.x + 1, c.y};
      case kNE:
        return f.east ? Cell{c.x + 1, c.y} : Cell{c.x, c.y + 1};
      case kSE:
        return f.south ? Cell{c.x, c.y + 1} : Cell{c.x - 1, c.y};
      default:  // kSW
        return f.west ? Cell{c.x - 1, c.y} : Cell{c.x, c.y - 1};
    }
  };

  GridWalk walk;
  walk.cells.push_back(start_cell);
  Cell cur = start_cell;
  do {
    cur = next_cell(cur);
    walk.cells.push_back(cur);
    if (walk.cells.size() > 4 * tree.vertices.size() + 1)
      throw InternalError("circumnavigation did not close");
  } while (!(cur == start_cell));
  return walk;
}

std::vector<double> cell_distances(const GridMap& map, const std::vector<Cell>& sources,
                                   bool time_weighted) {
  std::vector<double> dist(map.width * map.height, kInf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  for (Cell s : sources) {
    dist[map.index(s)] = 0.0;
    queue.emplace(0.0, map.index(s));
  }
  std::vector<char> done(map.width * map.height, 0);
  while (!queue.empty()) {
    auto [d, ui] = queue.top();
    queue.pop();
    if (done[ui]) continue;
    done[ui] = 1;
    Cell u = map.cell_at(ui);
    for (Cell step : kNeighborSteps) {
      Cell v{u.x + step.x, u.y + step.y};
      if (!map.is_free(v)) continue;
      int vi = map.index(v);
      double cand = d + (time_weighted ? map.cost[vi] : 1.0);
      if (cand < dist[vi]) {
        dist[vi] = cand;
        queue.emplace(cand, vi);
      }
    }
  }
  return dist;
}

GridWalk grid_shortest_path(const GridMap& map, Cell from, Cell to, bool time_weighted) {
  GridWalk walk;
  walk.cells.push_back(from);
  if (from == to) return walk;

  // remaining[c] = cheapest cost of reaching `to` from c, where stepping from
  // c into n costs cost(n); computed by relaxing backwards from `to`.
  std::vector<double> remaining(map.width * map.height,
                                std::numeric_limits<double>::infinity());
  {
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
    remaining[map.index(to)] = 0.0;
    queue.emplace(0.0, map.index(to));
    std::vector<char> done(map.width * map.height, 0);
    while (!queue.empty()) {
      auto [d, ui] = queue.top();
      queue.pop();
      if (done[ui]) continue;
      done[ui] = 1;
      Cell u = map.cell_at(ui);
      double step_in = time_weighted ? map.cost[ui] : 1.0;
      for (Cell step : kNeighborSteps) {
        Cell v{u.x + step.x, u.y + step.y};
        if (!map.is_free(v)) continue;
        int vi = map.index(v);
        double cand = d + step_in;  // walking v -> u enters u
        if (cand < remaining[vi]) {
          remaining[vi] = cand;
          queue.emplace(cand, vi);
        }
      }
    }
  }

  Cell cur = from;
  while (!(cur == to)) {
    Cell best{-1, -1};
    double best_val = std::numeric_limits<double>::infinity();
    for (Cell step : kNeighborSteps) {
      Cell n{cur.x + step.x, cur.y + step.y};
      if (!map.is_free(n)) continue;
      double val = (time_weighted ? map.cost[map.index(n)] : 1.0) +
                   remaining[map.index(n)];
      if (val < best_val || (val == best_val && lex_less(n, best))) {
        best_val = val;
        best = n;
      }
    }
    if (best.x < 0) throw InternalError("no path between free cells");
    walk.cells.push_back(best);
    cur = best;
  }
  return walk;
}

double walk_cost(const GridMap& map, const GridWalk& walk, bool time_weighted) {
  double total = 0.0;
  for (std::size_t i = 1; i < walk.cells.size(); ++i)
    total += time_weighted ? map.cost[map.index(walk.cells[i])] : 1.0;
  return total;
}

}  // namespace pamcpp
