#pragma once

// Certificates and tests that a ColoringScheme is a proper coloring:
// the packing of L' + (C/2 + H), the published separating lines, seeded
// Monte Carlo unit-distance sampling, and constructed boundary pairs.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mchroma/geom.hpp"
#include "mchroma/scheme.hpp"

namespace mchroma {

struct NeighborCheck {
  LatticePoint lattice_vector;  ///< coefficients w.r.t. (v1, v2)
  SeparationResult result;
  bool flat = false;  ///< +-flat_generator
};

struct PackingReport {
  std::string scheme_id;
  double sum_circumradius = 0.0;
  double enumeration_radius = 0.0;
  /// Width of C/2 + H along the flat generator minus |flat_generator|.
  double flat_width_defect = 0.0;
  std::vector<NeighborCheck> neighbors;
  bool pass = false;

  /// Smallest margin among non-flat neighbors (+inf when there are none).
  double min_nonflat_margin() const;
};

/// C/2 + H for the scheme.
ConvexPolygon sum_polygon(const ColoringScheme& scheme);

/// Separates C/2 + H from every translate by v in L' \ {0} with |v| <= radius
/// (default: twice the circumradius of the sum). Flat neighbors may touch,
/// all others must be disjoint by more than kEpsSep.
PackingReport packing_certificate(const ColoringScheme& scheme,
                                  std::optional<double> radius = std::nullopt);

struct LineRegression {
  std::string name;
  Line line;
  LatticePoint neighbor;  ///< the translate checked against the sum, in (v1, v2)
  LineCheck check;
  int on_line_p = 0;  ///< vertices of the sum within kEpsGeom of the line
  int on_line_q = 0;  ///< same for the translate
};

/// The published separating lines for the default n = 12 and n = 22
/// schemes; empty for every other scheme.
std::vector<LineRegression> regression_lines(const ColoringScheme& scheme);

struct Violation {
  std::uint64_t index = 0;
  Vec2 p;
  Vec2 q;
  int color = 0;
};

struct SamplingReport {
  std::string kind;
  std::uint64_t n_samples = 0;
  std::uint64_t seed = 0;
  double elapsed_seconds = 0.0;
  std::vector<Violation> violations;

  bool pass() const { return violations.empty(); }
};

/// Parallelogram origin + u e1 + v e2, (u, v) in [0, 1)^2.
struct SampleDomain {
  Vec2 origin;
  Vec2 e1;
  Vec2 e2;
  Vec2 at(double u, double v) const { return origin + e1 * u + e2 * v; }
};

/// Fundamental parallelogram of the color sublattice.
SampleDomain color_period_domain(const ColoringScheme& scheme);

/// Draws p in `domain`, q = p + boundary_point(s) and records every pair
/// with color(p) == color(q). Sample k uses counter_uniform(seed, k, *).
SamplingReport sample_monochromatic_pairs(const std::function<int(Vec2)>& color,
                                          const PolygonalNorm& norm, const SampleDomain& domain,
                                          std::uint64_t n_samples, std::uint64_t seed,
                                          unsigned threads = 1);

SamplingReport sample_unit_pairs(const ColoringScheme& scheme, std::uint64_t n_samples,
                                 std::uint64_t seed, unsigned threads = 1);

/// A pair is a violation when it is at unit C-distance (within 1e-12) and
/// both points receive the same color.
bool is_violation(const ColoringScheme& scheme, Vec2 p, Vec2 q);

/// Exact-contact pairs: points on the flat contact between same-colored
/// sums, antipodal boundary points of H, and unit-distance pairs among
/// nearby tile vertices.
SamplingReport adversarial_boundary_pairs(const ColoringScheme& scheme);

}  // namespace mchroma
