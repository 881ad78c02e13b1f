#pragma once

#include <cstdint>
#include <vector>

#include "pamcpp/geometry.hpp"

namespace pamcpp {

// Rectangular 4-connected grid with even dimensions. Obstacles occupy whole
// 2x2 blocks aligned to even coordinates; every free cell carries a positive
// traversal cost.
struct GridMap {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> obstacle;  // row-major flags
  std::vector<double> cost;            // row-major; 0.0 on obstacle cells

  int index(int x, int y) const { return y * width + x; }
  int index(Cell c) const { return c.y * width + c.x; }
  Cell cell_at(int idx) const { return {idx % width, idx / width}; }
  bool in_bounds(Cell c) const {
    return c.x >= 0 && c.x < width && c.y >= 0 && c.y < height;
  }
  bool is_free(Cell c) const { return in_bounds(c) && !obstacle[index(c)]; }
  int free_cell_count() const;
  std::vector<Cell> free_cells() const;  // row-major scan order

  friend bool operator==(const GridMap&, const GridMap&) = default;
};

// Throws ValidationError naming the first violated invariant.
void validate_map(const GridMap& map);

// Single-source step distances over free cells; -1 where unreachable.
std::vector<int> free_component_distances(const GridMap& map, Cell source);

}  // namespace pamcpp
