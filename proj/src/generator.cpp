#include "pamcpp/generator.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <vector>

#include "pamcpp/errors.hpp"
#include "pamcpp/rng.hpp"

namespace pamcpp {

namespace {

bool blocks_connected(const std::vector<char>& blocked, int bw, int bh) {
  int start = -1, free_blocks = 0;
  for (int b = 0; b < bw * bh; ++b) {
    if (blocked[b]) continue;
    ++free_blocks;
    if (start == -1) start = b;
  }
  if (free_blocks == 0) return false;
  std::vector<char> seen(bw * bh, 0);
  std::deque<int> queue{start};
  seen[start] = 1;
  int reached = 0;
  while (!queue.empty()) {
    int b = queue.front();
    queue.pop_front();
    ++reached;
    int bx = b % bw, by = b / bw;
    for (auto [dx, dy] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
      int nx = bx + dx, ny = by + dy;
      if (nx < 0 || nx >= bw || ny < 0 || ny >= bh) continue;
      int nb = ny * bw + nx;
      if (blocked[nb] || seen[nb]) continue;
      seen[nb] = 1;
      queue.push_back(nb);
    }
  }
  return reached == free_blocks;
}

}  // namespace

Instance generate_instance(std::uint64_t seed, int width, int height, int n_zones,
                           int n_robots, CostMode cost_mode) {
  if (width % 2 != 0 || height % 2 != 0)
    throw ValidationError("dimensions must be even");
  if (width <= 0 || height <= 0) throw ValidationError("empty map");
  if (n_zones < 0 || n_robots < 1) throw ValidationError("bad zone or robot count");

  std::mt19937_64 gen(seed);
  const int bw = width / 2, bh = height / 2;

  // obstacles: whole blocks, ~12% density, free area kept connected
  std::vector<char> blocked(bw * bh, 0);
  int target = bw * bh * 12 / 100;
  int placed = 0;
  for (int attempt = 0; placed < target && attempt < 50 * target + 50; ++attempt) {
    int b = static_cast<int>(draw_below(gen, bw * bh));
    if (blocked[b]) continue;
    blocked[b] = 1;
    if (blocks_connected(blocked, bw, bh))
      ++placed;
    else
      blocked[b] = 0;
  }

  Instance instance;
  instance.map.width = width;
  instance.map.height = height;
  instance.map.obstacle.assign(width * height, 0);
  instance.map.cost.assign(width * height, 0.0);
  for (int by = 0; by < bh; ++by)
    for (int bx = 0; bx < bw; ++bx)
      if (blocked[by * bw + bx])
        for (int dy = 0; dy < 2; ++dy)
          for (int dx = 0; dx < 2; ++dx)
            instance.map.obstacle[instance.map.index(2 * bx + dx, 2 * by + dy)] = 1;
  for (int y = 0; y < height; ++y)
    for (int x = 0; x < width; ++x)
      if (!instance.map.obstacle[instance.map.index(x, y)])
        instance.map.cost[instance.map.index(x, y)] =
            cost_mode == CostMode::kUnit ? 1.0 : 0.8 + 0.4 * draw_unit(gen);

  // zones: disjoint rectangles of free cells, 2-4 cells per side
  std::vector<char> owned(width * height, 0);
  for (int j = 0; j < n_zones; ++j) {
    bool done = false;
    for (int attempt = 0; attempt < 500 && !done; ++attempt) {
      int zw = 2 + static_cast<int>(draw_below(gen, 3));
      int zh = 2 + static_cast<int>(draw_below(gen, 3));
      zw = std::min(zw, width);
      zh = std::min(zh, height);
      int x0 = static_cast<int>(draw_below(gen, width - zw + 1));
      int y0 = static_cast<int>(draw_below(gen, height - zh + 1));
      bool ok = true;
      for (int y = y0; y < y0 + zh && ok; ++y)
        for (int x = x0; x < x0 + zw && ok; ++x)
          if (instance.map.obstacle[instance.map.index(x, y)] ||
              owned[instance.map.index(x, y)])
            ok = false;
      if (!ok) continue;
      Zone zone;
      zone.id = j;
      zone.weight = 1.0;
      for (int y = y0; y < y0 + zh; ++y)
        for (int x = x0; x < x0 + zw; ++x) {
          zone.cells.push_back({x, y});
          owned[instance.map.index(x, y)] = 1;
        }
      instance.zones.push_back(std::move(zone));
      done = true;
    }
    if (!done) throw PlacementError("placement failed: zone " + std::to_string(j));
  }

  // robot starts: distinct free non-zone cells
  std::vector<char> taken(width * height, 0);
  for (int i = 0; i < n_robots; ++i) {
    bool done = false;
    for (int attempt = 0; attempt < 2000 && !done; ++attempt) {
      int x = static_cast<int>(draw_below(gen, width));
      int y = static_cast<int>(draw_below(gen, height));
      int idx = instance.map.index(x, y);
      if (instance.map.obstacle[idx] || owned[idx] || taken[idx]) continue;
      taken[idx] = 1;
      instance.robots.push_back({x, y});
      done = true;
    }
    if (!done) throw PlacementError("placement failed: robot " + std::to_string(i));
  }

  instance.config.seed = seed;
  validate_instance(instance);
  return instance;
}

Instance resample_starts(const Instance& base, int n_robots, std::uint64_t seed) {
  Instance out = base;
  out.robots.clear();
  out.config.seed = seed;

  std::vector<char> owned(base.map.width * base.map.height, 0);
  for (const Zone& zone : base.zones)
    for (Cell c : zone.cells) owned[base.map.index(c)] = 1;

  std::mt19937_64 gen(seed);
  std::vector<char> taken(base.map.width * base.map.height, 0);
  for (int i = 0; i < n_robots; ++i) {
    bool done = false;
    for (int attempt = 0; attempt < 2000 && !done; ++attempt) {
      int x = static_cast<int>(draw_below(gen, base.map.width));
      int y = static_cast<int>(draw_below(gen, base.map.height));
      int idx = base.map.index(x, y);
      if (base.map.obstacle[idx] || owned[idx] || taken[idx]) continue;
      taken[idx] = 1;
      out.robots.push_back({x, y});
      done = true;
    }
    if (!done) throw PlacementError("placement failed: robot " + std::to_string(i));
  }
  validate_instance(out);
  return out;
}

}  // namespace pamcpp
