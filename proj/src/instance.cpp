#include "pamcpp/instance.hpp"

#include <deque>
#include <string>
#include <unordered_set>
#include <vector>

#include "pamcpp/errors.hpp"

namespace pamcpp {

namespace {

std::string cell_str(Cell c) {
  return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")";
}

bool zone_connected(const GridMap& map, const Zone& zone) {
  std::unordered_set<int> members;
  for (Cell c : zone.cells) members.insert(map.index(c));
  std::deque<int> queue{map.index(zone.cells.front())};
  std::unordered_set<int> seen{queue.front()};
  while (!queue.empty()) {
    Cell c = map.cell_at(queue.front());
    queue.pop_front();
    for (Cell d : kNeighborSteps) {
      Cell n{c.x + d.x, c.y + d.y};
      if (!map.in_bounds(n)) continue;
      int idx = map.index(n);
      if (!members.count(idx) || seen.count(idx)) continue;
      seen.insert(idx);
      queue.push_back(idx);
    }
  }
  return seen.size() == members.size();
}

}  // namespace

void validate_instance(const Instance& instance) {
  const GridMap& map = instance.map;
  validate_map(map);

  std::unordered_set<int> zone_ids;
  std::vector<int> owner(map.width * map.height, -1);
  for (const Zone& zone : instance.zones) {
    if (!zone_ids.insert(zone.id).second)
      throw ValidationError("duplicate zone id " + std::to_string(zone.id));
    if (zone.cells.empty())
      throw ValidationError("zone " + std::to_string(zone.id) + " has no cells");
    if (zone.weight <= 0.0)
      throw ValidationError("zone " + std::to_string(zone.id) + " non-positive weight");
    for (Cell c : zone.cells) {
      if (!map.in_bounds(c))
        throw ValidationError("zone " + std::to_string(zone.id) + " cell " +
                              cell_str(c) + " out of bounds");
      if (!map.is_free(c))
        throw ValidationError("zone " + std::to_string(zone.id) + " cell " +
                              cell_str(c) + " is not free");
      int idx = map.index(c);
      if (owner[idx] == zone.id)
        throw ValidationError("zone " + std::to_string(zone.id) +
                              " repeats cell " + cell_str(c));
      if (owner[idx] != -1)
        throw ValidationError("zone " + std::to_string(zone.id) + " overlaps zone " +
                              std::to_string(owner[idx]));
      owner[idx] = zone.id;
    }
    if (!zone_connected(map, zone))
      throw ValidationError("zone " + std::to_string(zone.id) + " disconnected");
  }

  if (instance.robots.empty()) throw ValidationError("no robots");
  std::unordered_set<int> starts;
  for (std::size_t i = 0; i < instance.robots.size(); ++i) {
    Cell r = instance.robots[i];
    if (!map.in_bounds(r) || !map.is_free(r))
      throw ValidationError("robot " + std::to_string(i) + " start " + cell_str(r) +
                            " is not a free cell");
    if (!starts.insert(map.index(r)).second)
      throw ValidationError("duplicate robot start");
  }

  if (instance.config.ls_iterations < 0)
    throw ValidationError("ls_iterations must be non-negative");
  if (!(instance.config.ls_period_fraction > 0.0 &&
        instance.config.ls_period_fraction <= 1.0))
    throw ValidationError("ls_period_fraction out of range");
}

}  // namespace pamcpp
