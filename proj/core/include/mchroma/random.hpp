#pragma once

// Counter-based uniform draws: the value for (seed, index, lane) does not
// depend on the order in which indices are visited, so sampling can be split
// across any number of workers and still merge to the same report.

#include <cstdint>

namespace mchroma {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Uniform double in [0, 1) for stream `seed`, sample `index`, coordinate `lane`.
constexpr double counter_uniform(std::uint64_t seed, std::uint64_t index, std::uint32_t lane) {
  const std::uint64_t key = splitmix64(seed ^ 0xD1B54A32D192ED03ULL);
  const std::uint64_t bits = splitmix64(key + splitmix64(index * 8 + lane));
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace mchroma
