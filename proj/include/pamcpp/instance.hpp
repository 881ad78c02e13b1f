#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pamcpp/grid_map.hpp"

namespace pamcpp {

// A connected set of free cells demanding early coverage, weighted by urgency.
struct Zone {
  int id = 0;
  std::vector<Cell> cells;
  double weight = 1.0;

  friend bool operator==(const Zone&, const Zone&) = default;
};

enum class LsSchedule { kCosine, kStatic };

struct SolverConfig {
  std::uint64_t seed = 0;
  int ls_iterations = 2000;
  LsSchedule ls_schedule = LsSchedule::kCosine;
  double ls_period_fraction = 0.1;
  bool closed_tour = false;
  bool weighted_time = false;

  friend bool operator==(const SolverConfig&, const SolverConfig&) = default;
};

struct Instance {
  GridMap map;
  std::vector<Zone> zones;
  std::vector<Cell> robots;  // start cells
  SolverConfig config;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Applies every model invariant; throws ValidationError on the first violation.
void validate_instance(const Instance& instance);

}  // namespace pamcpp
