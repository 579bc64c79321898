#pragma once

// Norms whose unit ball is a regular polygon with an even number of vertices.

#include <vector>

#include "mchroma/geom.hpp"

namespace mchroma {

/// Half-plane {x : dot(normal, x) <= offset}, unit normal.
struct Facet {
  Vec2 normal;
  double offset = 0.0;
};

class PolygonalNorm {
 public:
  /// Vertices at circumradius * (cos(2 pi t / n + phase), sin(...)).
  /// Throws GeometryError for odd n, n < 4, or a non-positive radius.
  static PolygonalNorm regular(int n, double circumradius, double phase = 0.0);

  const ConvexPolygon& ball() const { return ball_; }
  const std::vector<Facet>& facets() const { return facets_; }
  int vertex_count() const { return n_; }
  double circumradius() const { return circumradius_; }
  double phase() const { return phase_; }

  /// min { lambda >= 0 : v in lambda * ball }.
  double gauge(Vec2 v) const;
  /// Point at arc-length fraction s of the boundary, starting at vertex 0
  /// and running counterclockwise. s is wrapped into [0, 1).
  Vec2 boundary_point(double s) const;

 private:
  PolygonalNorm(ConvexPolygon ball, std::vector<Facet> facets, int n, double r, double phase);

  ConvexPolygon ball_;
  std::vector<Facet> facets_;
  int n_;
  double circumradius_;
  double phase_;
};

inline PolygonalNorm regular_polygon_norm(int n, double circumradius, double phase = 0.0) {
  return PolygonalNorm::regular(n, circumradius, phase);
}

}  // namespace mchroma
