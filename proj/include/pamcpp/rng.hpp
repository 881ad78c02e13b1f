#pragma once

#include <cstdint>
#include <random>

namespace pamcpp {

// Draw helpers over std::mt19937_64, whose output sequence is fixed by the
// standard; avoiding std::uniform_*_distribution keeps seeded traces identical
// across standard-library implementations.
inline std::uint64_t draw_below(std::mt19937_64& gen, std::uint64_t n) {
  return gen() % n;
}

inline double draw_unit(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace pamcpp
