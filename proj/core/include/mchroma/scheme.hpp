#pragma once

// The lattice-sublattice 6-coloring built from a centrally symmetric hexagon
// inscribed in C/2.
//
// Labels follow the clockwise convention A1..A6: A2A3 and A5A6 are the two
// opposite sides shared with C/2, A1 is the extra point on the upper arc and
// A4 = -A1. The boundary chain A1 (exclusive) -> A2 -> A3 -> A4 (inclusive)
// is removed from the tile, together with the vertex A5, so that translates
// by the tiling lattice partition the plane.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "mchroma/geom.hpp"
#include "mchroma/norm.hpp"

namespace mchroma {

/// Internal circumradius of C; C/2 then has circumradius 1.
inline constexpr double kBallCircumradius = 2.0;
inline constexpr int kColorCount = 6;

enum class HexagonKind { boundary_midpoint, vertex_index, side_split };
const char* to_string(HexagonKind k);
HexagonKind hexagon_kind_from_string(const std::string& s);

/// How the extra vertex A1 is placed on the boundary of C/2.
///
/// Vertex and side indices count counterclockwise from A2 = V[shared_side],
/// so `vertex_index` i means A1 = V[shared_side + i] and `side_split` (j, r)
/// means A1 = V[s + j] + r (V[s + j + 1] - V[s + j]).
struct HexagonChoice {
  HexagonKind kind = HexagonKind::boundary_midpoint;
  int index = 0;
  double ratio = 0.5;
  int shared_side = 0;
  /// Where the choice came from ("published", "search-certified", "user", ...).
  std::string provenance = "user";

  static HexagonChoice midpoint();
  static HexagonChoice vertex(int i);
  static HexagonChoice split(int side, double ratio);
  /// The point at fraction t of the arc from A2 to A6, expressed as a
  /// vertex_index when it lands on a vertex and a side_split otherwise.
  static HexagonChoice at_arc(int n, double t);

  /// Fraction of the arc from A2 to A6 at which A1 sits.
  double arc_position(int n) const;
  /// Same placement, provenance ignored.
  bool same_placement(const HexagonChoice& o) const;
  std::string describe() const;
};

class SchemeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class HalfOpenHexagon {
 public:
  enum class Region { outside, interior, kept_boundary, removed_boundary };

  /// Builds the hexagon A1..A6 from the extra point A1 on the boundary of
  /// `half_ball` (a regular polygon of circumradius 1 centered at the origin).
  /// Throws SchemeError if A1 is off the boundary, coincides with or lies
  /// outside the arc between the shared sides, or the hexagon degenerates.
  static HalfOpenHexagon from_extra_point(const ConvexPolygon& half_ball, int shared_side, Vec2 a1);

  /// A1..A6 in clockwise order.
  const std::array<Vec2, 6>& vertices() const { return a_; }
  /// 1-based vertex label, a(1) == A1.
  Vec2 a(int label) const { return a_[static_cast<std::size_t>(label - 1)]; }
  const ConvexPolygon& polygon() const { return polygon_; }

  Region classify(Vec2 p) const;
  bool contains(Vec2 p) const {
    const Region r = classify(p);
    return r == Region::interior || r == Region::kept_boundary;
  }

  /// Edge k (0-based) runs from A(k+1) to A(k+2).
  static bool edge_kept(int k) { return k >= 3; }
  /// Vertex k (0-based) is A(k+1).
  static bool vertex_kept(int k) { return k == 0 || k == 5; }

 private:
  HalfOpenHexagon(std::array<Vec2, 6> a, ConvexPolygon poly);

  std::array<Vec2, 6> a_;
  std::array<Vec2, 6> inward_;
  std::array<double, 6> offset_;
  ConvexPolygon polygon_;
};

HalfOpenHexagon build_hexagon(const ConvexPolygon& half_ball, const HexagonChoice& choice);

/// Tile of the tiling lattice: center = i * tiling.b1 + j * tiling.b2.
struct TileCell {
  long i = 0;
  long j = 0;
  Vec2 center;
};

/// Raised when a point is claimed by zero or several half-open tiles.
class CellError : public std::runtime_error {
 public:
  CellError(Vec2 p, int claims);
  Vec2 point;
  int claims;
};

bool is_supported_n(int n);
/// The built-in hexagon for a supported n (see README for provenance).
HexagonChoice default_choice(int n);

struct BuildOptions {
  /// Permit even n >= 6 outside {8, ..., 22}.
  bool allow_experimental = false;
};

class ColoringScheme {
 public:
  static ColoringScheme build(int n, std::optional<HexagonChoice> choice = std::nullopt,
                              BuildOptions options = {});

  int n() const { return n_; }
  const HexagonChoice& choice() const { return choice_; }
  const PolygonalNorm& norm() const { return norm_; }
  const ConvexPolygon& half_ball() const { return half_ball_; }
  const HalfOpenHexagon& hexagon() const { return hexagon_; }
  /// Spanned by a1 + a6 and a2 + a3.
  const Lattice2& tiling() const { return tiling_; }
  /// Spanned by v1 = 3 (a1 + a6) and v2 = 2 (a2 + a3); index 6 in tiling().
  const Lattice2& colors() const { return colors_; }
  /// coset_reps()[3 j + i] = j (a2 + a3) + i (a1 + a6).
  const std::array<Vec2, 6>& coset_reps() const { return coset_reps_; }
  /// v2, perpendicular to the shared sides.
  Vec2 flat_generator() const { return colors_.b2(); }
  /// Short human-readable identifier, e.g. "n12-boundary_midpoint".
  std::string id() const;

  /// The unique tile whose half-open hexagon contains p. Throws CellError
  /// if the tolerance bookkeeping ever yields zero or two claims.
  TileCell cell_of(Vec2 p) const;
  int color_of(Vec2 p) const { return color_of_cell(cell_of(p)); }
  static int color_of_cell(const TileCell& c);

 private:
  ColoringScheme(int n, HexagonChoice choice, PolygonalNorm norm, ConvexPolygon half_ball,
                 HalfOpenHexagon hexagon);

  int n_;
  HexagonChoice choice_;
  PolygonalNorm norm_;
  ConvexPolygon half_ball_;
  HalfOpenHexagon hexagon_;
  Lattice2 tiling_;
  Lattice2 colors_;
  std::array<Vec2, 6> coset_reps_;
  Vec2 search_halfwidth_;
};

inline ColoringScheme build_scheme(int n, std::optional<HexagonChoice> choice = std::nullopt,
                                   BuildOptions options = {}) {
  return ColoringScheme::build(n, std::move(choice), options);
}

}  // namespace mchroma
