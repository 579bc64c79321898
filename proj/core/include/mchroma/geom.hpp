#pragma once

// Planar real geometry: vectors, convex polygons, Minkowski sums, convex
// separation with signed margins, and 2D lattices.

#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mchroma {

/// Tolerance for geometric predicates (orientation, on-line, on-boundary).
inline constexpr double kEpsGeom = 1e-9;
/// Tolerance separating "touching" from "disjoint"/"overlapping".
inline constexpr double kEpsSep = 1e-7;

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  constexpr Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr Vec2& operator-=(Vec2 o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }
  constexpr bool operator==(const Vec2&) const = default;

  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
/// Rotates by +90 degrees.
constexpr Vec2 perp(Vec2 a) { return {-a.y, a.x}; }
inline double length(Vec2 a) { return std::hypot(a.x, a.y); }
inline double distance(Vec2 a, Vec2 b) { return length(a - b); }
inline Vec2 normalized(Vec2 a) { return a / length(a); }
constexpr Vec2 lerp(Vec2 a, Vec2 b, double t) { return a + (b - a) * t; }
inline bool approx_equal(Vec2 a, Vec2 b, double tol = kEpsGeom) {
  return std::abs(a.x - b.x) <= tol && std::abs(a.y - b.y) <= tol;
}

/// Euclidean distance from p to the closed segment [a, b].
double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);

/// Oriented line {x : normal . x = offset}; "below" means normal . x <= offset.
/// The normal is always unit length, so signed_distance is Euclidean.
struct Line {
  Vec2 normal{0.0, 1.0};
  double offset = 0.0;

  static Line from_normal_offset(Vec2 normal, double offset);
  /// y = slope * x + intercept; below = {y <= slope * x + intercept}.
  static Line from_slope_intercept(double slope, double intercept);
  /// Line through `point` with the given slope, same orientation as above.
  static Line through(Vec2 point, double slope);

  double signed_distance(Vec2 p) const { return dot(normal, p) - offset; }
};

/// A strictly convex polygon stored as a counterclockwise vertex cycle.
class ConvexPolygon {
 public:
  /// Validates strict convexity. Clockwise input is reversed to CCW.
  /// Throws GeometryError on fewer than 3 vertices, non-finite
  /// coordinates, repeated vertices, or a reflex/collinear turn.
  static ConvexPolygon from_vertices(std::vector<Vec2> vertices);
  /// Convex hull of an arbitrary point cloud (collinear points dropped).
  static ConvexPolygon hull(std::span<const Vec2> points);

  const std::vector<Vec2>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Vec2& operator[](std::size_t i) const { return vertices_[i]; }
  const Vec2& vertex(std::ptrdiff_t i) const;  // cyclic index
  Vec2 edge(std::ptrdiff_t i) const { return vertex(i + 1) - vertex(i); }

  /// Reference center: the vertex centroid on construction (the symmetry
  /// center for centrally symmetric polygons), additive under minkowski_sum.
  Vec2 center() const { return center_; }
  bool centrally_symmetric(double tol = kEpsGeom) const;
  double area() const;
  /// Largest Euclidean distance from center() to a vertex.
  double circumradius() const;
  /// max over the polygon of dot(direction, x).
  double support(Vec2 direction) const;
  /// Inside-or-on test with tolerance `eps` (distance units).
  bool contains(Vec2 p, double eps = kEpsGeom) const;

  ConvexPolygon translated(Vec2 t) const;
  /// Homothety about center().
  ConvexPolygon scaled(double factor) const;

 private:
  friend ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q);
  explicit ConvexPolygon(std::vector<Vec2> ccw);
  std::vector<Vec2> vertices_;
  Vec2 center_;
};

/// {a + b | a in p, b in q} by merging the edge sequences in angular order.
ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q);

enum class Contact { disjoint, touching, overlapping };
const char* to_string(Contact c);

struct SeparationResult {
  Contact verdict = Contact::overlapping;
  /// Euclidean gap when apart, minus the penetration depth when overlapping.
  double margin = 0.0;
  /// Present iff verdict == disjoint: dot(n, p) <= c on the first polygon.
  std::optional<Line> witness;
};

SeparationResult separate(const ConvexPolygon& p, const ConvexPolygon& q);

struct LineCheck {
  bool separates = false;
  double min_margin_p = 0.0;  ///< min over p of (offset - n.x)
  double min_margin_q = 0.0;  ///< min over q of (n.x - offset)
};

/// p must lie on or below `line`, q on or above it.
LineCheck check_separating_line(const ConvexPolygon& p, const ConvexPolygon& q, const Line& line);

/// Integer coefficients plus the lattice vector they produce.
struct LatticePoint {
  long i = 0;
  long j = 0;
  Vec2 v;
};

class Lattice2 {
 public:
  Lattice2(Vec2 b1, Vec2 b2);

  Vec2 b1() const { return b1_; }
  Vec2 b2() const { return b2_; }
  double det() const { return cross(b1_, b2_); }
  Vec2 point(double i, double j) const { return b1_ * i + b2_ * j; }
  /// Real coordinates (alpha, beta) with p = alpha b1 + beta b2.
  Vec2 coords(Vec2 p) const;
  /// Norms of the rows of the inverse basis matrix; |coord_k(p)| <= row_k * |p|.
  Vec2 inverse_row_norms() const;

 private:
  Vec2 b1_, b2_;
  Vec2 inv_row1_, inv_row2_;
};

struct DiskQuery {
  bool closed = false;     ///< include |v| == radius (within kEpsGeom)
  bool punctured = true;   ///< exclude the origin
};

/// All lattice vectors inside the disk of `radius` about the origin,
/// ordered by (length, i, j).
std::vector<LatticePoint> lattice_points_in_disk(const Lattice2& lat, double radius,
                                                 DiskQuery query = {});

struct CellReduction {
  long i = 0;
  long j = 0;
  Vec2 residual;
};

/// p = i b1 + j b2 + residual, residual coordinates in [0, 1).
CellReduction reduce_to_cell(const Lattice2& lat, Vec2 p);

}  // namespace mchroma
