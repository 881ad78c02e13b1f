#pragma once

#include <array>
#include <cstdint>

namespace pamcpp {

struct Cell {
  int x = 0;
  int y = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

// Lexicographic on (x, y); the tie-break order for path steps.
inline bool lex_less(Cell a, Cell b) {
  return a.x != b.x ? a.x < b.x : a.y < b.y;
}

inline bool adjacent4(Cell a, Cell b) {
  int dx = a.x - b.x, dy = a.y - b.y;
  return (dx == 0 && (dy == 1 || dy == -1)) || (dy == 0 && (dx == 1 || dx == -1));
}

// Neighbor offsets in lexicographic order of the resulting cell delta.
inline constexpr std::array<Cell, 4> kNeighborSteps{{{-1, 0}, {0, -1}, {0, 1}, {1, 0}}};

}  // namespace pamcpp
