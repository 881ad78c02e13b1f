#pragma once

#include <cstdint>

#include "pamcpp/instance.hpp"

namespace pamcpp {

enum class CostMode { kUnit, kUniform };  // uniform draws from U(0.8, 1.2)

// Deterministic random instance: whole-block obstacles that keep the free area
// connected, disjoint rectangular zones of weight 1 on free cells, and
// distinct robot starts on free non-zone cells. Throws PlacementError when the
// retry budget runs out.
Instance generate_instance(std::uint64_t seed, int width, int height, int n_zones,
                           int n_robots, CostMode cost_mode);

// Same map and zones with freshly sampled starts (and possibly a different
// robot count); config.seed is set to the sampling seed.
Instance resample_starts(const Instance& base, int n_robots, std::uint64_t seed);

}  // namespace pamcpp
