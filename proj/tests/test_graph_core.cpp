#include <map>
#include <set>

#include "doctest.h"
#include "pamcpp/errors.hpp"
#include "pamcpp/generator.hpp"
#include "test_support.hpp"

using namespace pamcpp;
using namespace pamcpp::testing;

TEST_CASE("dijkstra on the unit square") {
  HyperGraph h = lattice_graph(2, 2);
  auto r = dijkstra(h, 0);
  CHECK(r.dist[0] == doctest::Approx(0.0));
  CHECK(r.dist[1] == doctest::Approx(1.0));
  CHECK(r.dist[2] == doctest::Approx(1.0));
  CHECK(r.dist[3] == doctest::Approx(2.0));
  // equal-cost predecessors resolve to the smaller id
  CHECK(r.parent[3] == 1);
}

TEST_CASE("dijkstra prefers the cheap edge") {
  HyperGraph h = synthetic_graph(
      4, {{0, 1, 1.0}, {0, 2, 0.9}, {1, 3, 1.0}, {2, 3, 1.0}});
  auto r = dijkstra(h, 0);
  CHECK(r.dist[3] == doctest::Approx(1.9));
  CHECK(r.parent[3] == 2);
}

TEST_CASE("dijkstra distances satisfy the triangle inequality") {
  std::mt19937_64 gen(11);
  for (int round = 0; round < 5; ++round) {
    HyperGraph h = lattice_graph(3, 3, 0.5 + draw_unit(gen));
    std::vector<DijkstraResult> all;
    for (int v = 0; v < h.hv_count; ++v) all.push_back(dijkstra(h, v));
    for (int a = 0; a < h.hv_count; ++a)
      for (int b = 0; b < h.hv_count; ++b)
        for (int c = 0; c < h.hv_count; ++c)
          CHECK(all[a].dist[c] <= all[a].dist[b] + all[b].dist[c] + 1e-12);
  }
}

TEST_CASE("kruskal on degenerate and square subsets") {
  HyperGraph h = lattice_graph(2, 2);
  HyperTree single = kruskal_mst(h, {2});
  CHECK(single.vertices == std::vector<int>{2});
  CHECK(single.edges.empty());
  CHECK(single.total_cost == doctest::Approx(0.0));

  HyperTree square = kruskal_mst(h, {0, 1, 2, 3});
  CHECK(square.total_cost == doctest::Approx(3.0));
  CHECK(square.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}});
}

TEST_CASE("kruskal on a path keeps every edge") {
  HyperGraph h = synthetic_graph(
      5, {{0, 1, 1.0}, {1, 2, 0.9}, {2, 3, 1.1}, {3, 4, 1.0}});
  HyperTree tree = kruskal_mst(h, {0, 1, 2, 3, 4});
  CHECK(tree.total_cost == doctest::Approx(4.0));
  CHECK(tree.edges.size() == 4);
}

TEST_CASE("kruskal rejects disconnected subsets") {
  HyperGraph h = lattice_graph(3, 1);
  CHECK_THROWS_WITH_AS(kruskal_mst(h, {0, 2}), "disconnected subset", ValidationError);
}

TEST_CASE("kruskal matches spanning-tree enumeration") {
  std::mt19937_64 gen(5);
  for (int round = 0; round < 10; ++round) {
    std::vector<HyperEdge> edges;
    int n = 4 + static_cast<int>(draw_below(gen, 3));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (v == u + 1 || draw_unit(gen) < 0.5)
          edges.push_back({u, v, 0.5 + draw_unit(gen)});
    HyperGraph h = synthetic_graph(n, edges);
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    CHECK(kruskal_mst(h, all).total_cost ==
          doctest::Approx(enumerate_mst_cost(h, all)));
  }
}

TEST_CASE("steiner tree base cases") {
  HyperGraph h = lattice_graph(3, 3);
  std::vector<int> all(9);
  std::iota(all.begin(), all.end(), 0);

  SUBCASE("all terminals reduces to the MST") {
    HyperTree st = steiner_tree(h, all);
    HyperTree mst = kruskal_mst(h, all);
    CHECK(st.total_cost == doctest::Approx(mst.total_cost));
    CHECK(st.vertices == mst.vertices);
  }
  SUBCASE("two terminals yield the shortest path") {
    HyperTree st = steiner_tree(h, {0, 8});
    CHECK(st.total_cost == doctest::Approx(dijkstra(h, 0).dist[8]));
    CHECK(st.edges.size() == st.vertices.size() - 1);
  }
  SUBCASE("three corners match the enumerated junction optimum") {
    HyperTree st = steiner_tree(h, {0, 2, 6});
    CHECK(st.total_cost == doctest::Approx(enumerate_steiner_cost(h, {0, 2, 6})));
  }
}

TEST_CASE("steiner stays within twice the enumerated optimum") {
  std::mt19937_64 gen(23);
  for (int round = 0; round < 8; ++round) {
    HyperGraph h = lattice_graph(3, 3, 0.5 + draw_unit(gen));
    std::vector<int> terminals;
    for (int v = 0; v < 9; ++v)
      if (draw_unit(gen) < 0.4) terminals.push_back(v);
    if (terminals.empty()) terminals.push_back(static_cast<int>(draw_below(gen, 9)));
    HyperTree st = steiner_tree(h, terminals);
    double opt = enumerate_steiner_cost(h, terminals);
    CHECK(st.total_cost <= 2.0 * opt + 1e-9);
    // leaves are terminals
    std::map<int, int> degree;
    for (auto [u, v] : st.edges) {
      ++degree[u];
      ++degree[v];
    }
    std::set<int> wanted(terminals.begin(), terminals.end());
    for (int v : st.vertices)
      if (degree[v] <= 1) CHECK(wanted.count(v) == 1);
  }
}

TEST_CASE("circumnavigation of a single block") {
  GridMap map = open_map(2, 2);
  HyperGraph h = build_hypergraph(map);
  HyperTree tree = kruskal_mst(h, {0});
  tree.anchor = 0;
  GridWalk walk = circumnavigate(h, tree, {0, 0});
  CHECK(walk.cells == std::vector<Cell>{{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}});
}

TEST_CASE("circumnavigation of the full 4x4 spanning tree") {
  GridMap map = open_map(4, 4);
  HyperGraph h = build_hypergraph(map);
  std::vector<int> all{0, 1, 2, 3};
  HyperTree tree = kruskal_mst(h, all);
  tree.anchor = 0;
  for (Cell start : {Cell{0, 0}, Cell{3, 2}, Cell{1, 1}}) {
    GridWalk walk = circumnavigate(h, tree, start);
    CHECK(walk.cells.size() == 17);
    CHECK(walk.cells.front() == start);
    CHECK(walk.cells.back() == start);
    std::set<int> distinct;
    for (std::size_t i = 0; i + 1 < walk.cells.size(); ++i) {
      distinct.insert(map.index(walk.cells[i]));
      CHECK(adjacent4(walk.cells[i], walk.cells[i + 1]));
    }
    CHECK(distinct.size() == 16);
  }
}

TEST_CASE("circumnavigation of an L-shaped tree") {
  GridMap map = open_map(4, 4);
  HyperGraph h = build_hypergraph(map);
  // blocks (0,0), (1,0), (0,1): an L missing the bottom-right block
  int a = h.cell_to_hv[map.index(0, 0)];
  int b = h.cell_to_hv[map.index(2, 0)];
  int c = h.cell_to_hv[map.index(0, 2)];
  HyperTree tree = kruskal_mst(h, {a, b, c});
  tree.anchor = a;
  GridWalk walk = circumnavigate(h, tree, {0, 0});
  CHECK(walk.cells.size() == 13);
  std::set<int> distinct;
  for (std::size_t i = 0; i + 1 < walk.cells.size(); ++i)
    distinct.insert(map.index(walk.cells[i]));
  CHECK(distinct.size() == 12);
}

TEST_CASE("circumnavigation rejects foreign start cells") {
  GridMap map = open_map(4, 4);
  HyperGraph h = build_hypergraph(map);
  HyperTree tree = kruskal_mst(h, {0});
  tree.anchor = 0;
  CHECK_THROWS_WITH_AS(circumnavigate(h, tree, {3, 3}), "start cell outside tree",
                       ValidationError);
}

TEST_CASE("grid shortest paths") {
  GridMap map = open_map(6, 2);
  SUBCASE("identity") {
    GridWalk w = grid_shortest_path(map, {2, 1}, {2, 1}, false);
    CHECK(w.cells == std::vector<Cell>{{2, 1}});
  }
  SUBCASE("straight corridor") {
    GridWalk w = grid_shortest_path(map, {0, 0}, {4, 0}, false);
    CHECK(w.cells.size() == 5);
    for (Cell c : w.cells) CHECK(c.y == 0);
  }
  SUBCASE("corner to corner on 4x4") {
    GridWalk w = grid_shortest_path(open_map(4, 4), {0, 0}, {3, 3}, false);
    CHECK(w.cells.size() == 7);
    for (std::size_t i = 0; i + 1 < w.cells.size(); ++i)
      CHECK(adjacent4(w.cells[i], w.cells[i + 1]));
  }
  SUBCASE("weighted paths avoid expensive cells") {
    GridMap costly = open_map(4, 2);
    costly.cost[costly.index(1, 0)] = 10.0;
    costly.cost[costly.index(2, 0)] = 10.0;
    GridWalk w = grid_shortest_path(costly, {0, 0}, {3, 0}, true);
    CHECK(w.cells.size() == 6);  // dips through the cheap row
    CHECK(walk_cost(costly, w, true) == doctest::Approx(5.0));
  }
}

TEST_CASE("grid path determinism") {
  Instance inst = generate_instance(17, 12, 12, 0, 1, CostMode::kUniform);
  auto free = inst.map.free_cells();
  GridWalk a = grid_shortest_path(inst.map, free.front(), free.back(), true);
  GridWalk b = grid_shortest_path(inst.map, free.front(), free.back(), true);
  CHECK(a == b);
}
