#pragma once

// Red-blue colorings with a forbidden translate configuration, and the
// transforms between them and proper k-colorings.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mchroma/geom.hpp"
#include "mchroma/scheme.hpp"
#include "mchroma/verify.hpp"

namespace mchroma {

struct RedBlueColoring {
  std::function<bool(Vec2)> is_red;
  std::string description;
  /// Set when the coloring is periodic under a known lattice; used as the
  /// default sampling domain.
  std::optional<SampleDomain> period;
};

/// A finite, nonempty set of pairwise distinct points.
class Configuration {
 public:
  explicit Configuration(std::vector<Vec2> points);
  const std::vector<Vec2>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }

 private:
  std::vector<Vec2> points_;
};

struct RedBluePair {
  RedBlueColoring coloring;
  Configuration config;
};

/// Red = color class 0 of the scheme; K = { -r : r a coset representative }.
RedBluePair to_red_blue(const ColoringScheme& scheme);

/// Thrown when no x + a_i is red, i.e. K + x is entirely blue.
class HypothesisViolation : public std::runtime_error {
 public:
  explicit HypothesisViolation(Vec2 x);
  Vec2 x;
};

/// x -> smallest i in {1, ..., k} with x + a_i red.
std::function<int(Vec2)> from_red_blue(RedBlueColoring rb, Configuration config);

struct TranslateMiss {
  std::uint64_t index = 0;
  Vec2 m;
};

struct TranslateHitReport {
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
  std::vector<TranslateMiss> misses;
  bool pass() const { return misses.empty(); }
};

/// Samples m over `domain` (default: rb.period) and records each m for which
/// K + m is entirely blue. Throws std::invalid_argument if neither is set.
TranslateHitReport check_translate_hits(const RedBlueColoring& rb, const Configuration& config,
                                        std::uint64_t n_samples, std::uint64_t seed,
                                        std::optional<SampleDomain> domain = std::nullopt);

/// Samples n_samples pairs (p, p + u) with p red and u on the unit sphere,
/// recording those with q red as well. Fewer pairs are reported if red
/// anchors are too rare to find within 1000 draws per requested pair.
SamplingReport sample_red_unit_pairs(const RedBlueColoring& rb, const PolygonalNorm& norm,
                                     const SampleDomain& domain, std::uint64_t n_samples,
                                     std::uint64_t seed);

}  // namespace mchroma
