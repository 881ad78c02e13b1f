#include "pamcpp/grid_map.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "pamcpp/errors.hpp"

namespace pamcpp {

int GridMap::free_cell_count() const {
  return static_cast<int>(std::count(obstacle.begin(), obstacle.end(), std::uint8_t{0}));
}

std::vector<Cell> GridMap::free_cells() const {
  std::vector<Cell> out;
  out.reserve(obstacle.size());
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x)
      if (!obstacle[index(x, y)]) out.push_back({x, y});
  return out;
}

std::vector<int> free_component_distances(const GridMap& map, Cell source) {
  std::vector<int> dist(map.width * map.height, -1);
  std::deque<Cell> queue;
  dist[map.index(source)] = 0;
  queue.push_back(source);
  while (!queue.empty()) {
    Cell c = queue.front();
    queue.pop_front();
    for (Cell d : kNeighborSteps) {
      Cell n{c.x + d.x, c.y + d.y};
      if (!map.is_free(n)) continue;
      if (dist[map.index(n)] != -1) continue;
      dist[map.index(n)] = dist[map.index(c)] + 1;
      queue.push_back(n);
    }
  }
  return dist;
}

void validate_map(const GridMap& map) {
  if (map.width <= 0 || map.height <= 0)
    throw ValidationError("empty map");
  if (map.width % 2 != 0 || map.height % 2 != 0)
    throw ValidationError("dimensions must be even");
  if (static_cast<int>(map.obstacle.size()) != map.width * map.height ||
      static_cast<int>(map.cost.size()) != map.width * map.height)
    throw ValidationError("cell storage size mismatch");

  for (int by = 0; by < map.height / 2; ++by) {
    for (int bx = 0; bx < map.width / 2; ++bx) {
      int blocked = 0;
      for (int dy = 0; dy < 2; ++dy)
        for (int dx = 0; dx < 2; ++dx)
          blocked += map.obstacle[map.index(2 * bx + dx, 2 * by + dy)] ? 1 : 0;
      if (blocked != 0 && blocked != 4)
        throw ValidationError("block (" + std::to_string(2 * bx) + "," +
                              std::to_string(2 * by) + ") partially blocked");
    }
  }

  Cell first_free{-1, -1};
  for (int y = 0; y < map.height; ++y) {
    for (int x = 0; x < map.width; ++x) {
      if (map.obstacle[map.index(x, y)]) continue;
      if (map.cost[map.index(x, y)] <= 0.0)
        throw ValidationError("non-positive cost at cell (" + std::to_string(x) +
                              "," + std::to_string(y) + ")");
      if (first_free.x < 0) first_free = {x, y};
    }
  }
  if (first_free.x < 0) throw ValidationError("map has no free cells");

  auto dist = free_component_distances(map, first_free);
  for (int y = 0; y < map.height; ++y)
    for (int x = 0; x < map.width; ++x)
      if (!map.obstacle[map.index(x, y)] && dist[map.index(x, y)] == -1)
        throw ValidationError("free space disconnected");
}

}  // namespace pamcpp
