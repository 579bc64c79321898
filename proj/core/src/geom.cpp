#include "mchroma/geom.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <tuple>

namespace mchroma {

namespace {

double signed_area2(const std::vector<Vec2>& v) {
  double a = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    a += cross(v[i], v[(i + 1) % v.size()]);
  }
  return a;
}

// Sine of the turn angle between consecutive edges.
double turn(Vec2 e1, Vec2 e2) { return cross(e1, e2) / (length(e1) * length(e2)); }

std::size_t lowest_vertex(const std::vector<Vec2>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i].y < v[best].y || (v[i].y == v[best].y && v[i].x < v[best].x)) best = i;
  }
  return best;
}

// Drops repeated and collinear vertices from a CCW cycle.
std::vector<Vec2> drop_collinear(std::vector<Vec2> v) {
  bool changed = true;
  while (changed && v.size() >= 3) {
    changed = false;
    for (std::size_t k = 0; k < v.size() && v.size() >= 3; ++k) {
      const Vec2 prev = v[(k + v.size() - 1) % v.size()];
      const Vec2 next = v[(k + 1) % v.size()];
      const Vec2 e1 = v[k] - prev;
      const Vec2 e2 = next - v[k];
      const double l1 = length(e1);
      const double l2 = length(e2);
      if (l1 <= kEpsGeom || l2 <= kEpsGeom || cross(e1, e2) <= kEpsGeom * l1 * l2) {
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(k));
        changed = true;
        break;
      }
    }
  }
  return v;
}

Vec2 vertex_centroid(const std::vector<Vec2>& v) {
  Vec2 c;
  for (const auto& p : v) c += p;
  return c / static_cast<double>(v.size());
}

}  // namespace

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  double t = len2 > 0.0 ? dot(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, a + ab * t);
}

Line Line::from_normal_offset(Vec2 normal, double offset) {
  const double len = length(normal);
  if (!normal.finite() || !std::isfinite(offset) || len <= 0.0) {
    throw GeometryError("line: normal must be finite and nonzero, offset finite");
  }
  return Line{normal / len, offset / len};
}

Line Line::from_slope_intercept(double slope, double intercept) {
  return from_normal_offset({-slope, 1.0}, intercept);
}

Line Line::through(Vec2 point, double slope) {
  return from_slope_intercept(slope, point.y - slope * point.x);
}

ConvexPolygon::ConvexPolygon(std::vector<Vec2> ccw)
    : vertices_(std::move(ccw)), center_(vertex_centroid(vertices_)) {}

ConvexPolygon ConvexPolygon::from_vertices(std::vector<Vec2> vertices) {
  if (vertices.size() < 3) {
    throw GeometryError("convex polygon needs at least 3 vertices, got " +
                        std::to_string(vertices.size()));
  }
  for (const auto& v : vertices) {
    if (!v.finite()) throw GeometryError("convex polygon has a non-finite vertex");
  }
  if (signed_area2(vertices) < 0.0) std::reverse(vertices.begin(), vertices.end());
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e1 = vertices[(i + 1) % n] - vertices[i];
    const Vec2 e2 = vertices[(i + 2) % n] - vertices[(i + 1) % n];
    if (length(e1) <= kEpsGeom) {
      throw GeometryError("convex polygon has repeated vertex at index " + std::to_string(i));
    }
    if (turn(e1, e2) <= kEpsGeom) {
      throw GeometryError("convex polygon is not strictly convex at vertex " +
                          std::to_string((i + 1) % n));
    }
  }
  return ConvexPolygon(std::move(vertices));
}

ConvexPolygon ConvexPolygon::hull(std::span<const Vec2> points) {
  std::vector<Vec2> pts(points.begin(), points.end());
  for (const auto& v : pts) {
    if (!v.finite()) throw GeometryError("hull: non-finite point");
  }
  std::sort(pts.begin(), pts.end(),
            [](Vec2 a, Vec2 b) { return std::tie(a.x, a.y) < std::tie(b.x, b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) throw GeometryError("hull: fewer than 3 distinct points");
  // Andrew's monotone chain.
  std::vector<Vec2> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 1] - h[k - 2], p - h[k - 2]) <= 0.0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0.0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return from_vertices(drop_collinear(std::move(h)));
}

const Vec2& ConvexPolygon::vertex(std::ptrdiff_t i) const {
  const auto n = static_cast<std::ptrdiff_t>(vertices_.size());
  return vertices_[static_cast<std::size_t>(((i % n) + n) % n)];
}

bool ConvexPolygon::centrally_symmetric(double tol) const {
  const std::size_t n = vertices_.size();
  if (n % 2 != 0) return false;
  const std::size_t m = n / 2;
  for (std::size_t i = 0; i < m; ++i) {
    if (!approx_equal(vertices_[i + m], center_ * 2.0 - vertices_[i], tol)) return false;
  }
  return true;
}

double ConvexPolygon::area() const { return 0.5 * signed_area2(vertices_); }

double ConvexPolygon::circumradius() const {
  double r = 0.0;
  for (const auto& v : vertices_) r = std::max(r, distance(v, center_));
  return r;
}

double ConvexPolygon::support(Vec2 direction) const {
  double s = -std::numeric_limits<double>::infinity();
  for (const auto& v : vertices_) s = std::max(s, dot(direction, v));
  return s;
}

bool ConvexPolygon::contains(Vec2 p, double eps) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const Vec2 e = edge(static_cast<std::ptrdiff_t>(i));
    if (cross(e, p - vertices_[i]) / length(e) < -eps) return false;
  }
  return true;
}

ConvexPolygon ConvexPolygon::translated(Vec2 t) const {
  ConvexPolygon out = *this;
  for (auto& v : out.vertices_) v += t;
  out.center_ += t;
  return out;
}

ConvexPolygon ConvexPolygon::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw GeometryError("scale factor must be positive and finite");
  }
  ConvexPolygon out = *this;
  for (auto& v : out.vertices_) v = center_ + (v - center_) * factor;
  return out;
}

ConvexPolygon minkowski_sum(const ConvexPolygon& p, const ConvexPolygon& q) {
  const auto& a = p.vertices();
  const auto& b = q.vertices();
  if (a.size() < 3 || b.size() < 3) throw GeometryError("minkowski_sum: degenerate input");
  const auto i0 = static_cast<std::ptrdiff_t>(lowest_vertex(a));
  const auto j0 = static_cast<std::ptrdiff_t>(lowest_vertex(b));
  const auto n = static_cast<std::ptrdiff_t>(a.size());
  const auto m = static_cast<std::ptrdiff_t>(b.size());

  std::vector<Vec2> out;
  out.reserve(a.size() + b.size());
  std::ptrdiff_t i = 0;
  std::ptrdiff_t j = 0;
  while (i < n || j < m) {
    out.push_back(p.vertex(i0 + i) + q.vertex(j0 + j));
    if (i == n) {
      ++j;
    } else if (j == m) {
      ++i;
    } else {
      const double c = cross(p.edge(i0 + i), q.edge(j0 + j));
      if (c > 0.0) {
        ++i;
      } else if (c < 0.0) {
        ++j;
      } else {
        ++i;
        ++j;
      }
    }
  }
  ConvexPolygon sum = ConvexPolygon::from_vertices(drop_collinear(std::move(out)));
  // Reference center is additive even when the vertex centroid is not.
  sum.center_ = p.center() + q.center();
  return sum;
}

const char* to_string(Contact c) {
  switch (c) {
    case Contact::disjoint:
      return "disjoint";
    case Contact::touching:
      return "touching";
    case Contact::overlapping:
      return "overlapping";
  }
  return "?";
}

SeparationResult separate(const ConvexPolygon& p, const ConvexPolygon& q) {
  // Signed gap along every edge normal of either polygon, both orientations.
  double best_gap = -std::numeric_limits<double>::infinity();
  Vec2 best_dir;
  double best_pmax = 0.0;
  auto try_axes = [&](const ConvexPolygon& poly) {
    for (std::size_t k = 0; k < poly.size(); ++k) {
      const Vec2 e = poly.edge(static_cast<std::ptrdiff_t>(k));
      const Vec2 nrm = normalized(Vec2{e.y, -e.x});
      for (const Vec2 d : {nrm, -nrm}) {
        double pmax = -std::numeric_limits<double>::infinity();
        double qmin = std::numeric_limits<double>::infinity();
        for (const auto& v : p.vertices()) pmax = std::max(pmax, dot(d, v));
        for (const auto& v : q.vertices()) qmin = std::min(qmin, dot(d, v));
        const double gap = qmin - pmax;
        if (gap > best_gap) {
          best_gap = gap;
          best_dir = d;
          best_pmax = pmax;
        }
      }
    }
  };
  try_axes(p);
  try_axes(q);

  SeparationResult r;
  if (best_gap < 0.0) {
    r.margin = best_gap;
  } else {
    double d = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < q.size(); ++k) {
      const auto e0 = static_cast<std::ptrdiff_t>(k);
      for (const auto& v : p.vertices()) d = std::min(d, point_segment_distance(v, q.vertex(e0), q.vertex(e0 + 1)));
    }
    for (std::size_t k = 0; k < p.size(); ++k) {
      const auto e0 = static_cast<std::ptrdiff_t>(k);
      for (const auto& v : q.vertices()) d = std::min(d, point_segment_distance(v, p.vertex(e0), p.vertex(e0 + 1)));
    }
    r.margin = d;
  }
  if (r.margin > kEpsSep) {
    r.verdict = Contact::disjoint;
    r.witness = Line{best_dir, best_pmax + 0.5 * best_gap};
  } else if (r.margin >= -kEpsSep) {
    r.verdict = Contact::touching;
  } else {
    r.verdict = Contact::overlapping;
  }
  return r;
}

LineCheck check_separating_line(const ConvexPolygon& p, const ConvexPolygon& q, const Line& line) {
  LineCheck r;
  r.min_margin_p = std::numeric_limits<double>::infinity();
  r.min_margin_q = std::numeric_limits<double>::infinity();
  for (const auto& v : p.vertices()) r.min_margin_p = std::min(r.min_margin_p, -line.signed_distance(v));
  for (const auto& v : q.vertices()) r.min_margin_q = std::min(r.min_margin_q, line.signed_distance(v));
  r.separates = r.min_margin_p >= -kEpsGeom && r.min_margin_q >= -kEpsGeom;
  return r;
}

Lattice2::Lattice2(Vec2 b1, Vec2 b2) : b1_(b1), b2_(b2) {
  if (!b1.finite() || !b2.finite()) throw GeometryError("lattice basis must be finite");
  const double d = cross(b1, b2);
  if (!(std::abs(d) > kEpsGeom)) throw GeometryError("lattice basis is degenerate");
  inv_row1_ = Vec2{b2.y, -b2.x} / d;
  inv_row2_ = Vec2{-b1.y, b1.x} / d;
}

Vec2 Lattice2::coords(Vec2 p) const { return {dot(inv_row1_, p), dot(inv_row2_, p)}; }

Vec2 Lattice2::inverse_row_norms() const { return {length(inv_row1_), length(inv_row2_)}; }

std::vector<LatticePoint> lattice_points_in_disk(const Lattice2& lat, double radius, DiskQuery query) {
  if (!std::isfinite(radius) || !(radius > 0.0)) {
    throw GeometryError("lattice_points_in_disk: radius must be positive and finite");
  }
  const Vec2 rows = lat.inverse_row_norms();
  const auto imax = static_cast<long>(std::floor(radius * rows.x)) + 1;
  const auto jmax = static_cast<long>(std::floor(radius * rows.y)) + 1;
  std::vector<std::pair<std::int64_t, LatticePoint>> found;
  for (long i = -imax; i <= imax; ++i) {
    for (long j = -jmax; j <= jmax; ++j) {
      if (query.punctured && i == 0 && j == 0) continue;
      const Vec2 v = lat.point(static_cast<double>(i), static_cast<double>(j));
      const double len = length(v);
      const bool inside = query.closed ? len <= radius + kEpsGeom : len < radius - kEpsGeom;
      if (inside) found.push_back({std::llround(len * 1e8), LatticePoint{i, j, v}});
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first, a.second.i, a.second.j) < std::tie(b.first, b.second.i, b.second.j);
  });
  std::vector<LatticePoint> out;
  out.reserve(found.size());
  for (auto& f : found) out.push_back(f.second);
  return out;
}

CellReduction reduce_to_cell(const Lattice2& lat, Vec2 p) {
  const Vec2 c = lat.coords(p);
  auto snap_floor = [](double x) {
    double f = std::floor(x);
    if (x - f > 1.0 - kEpsGeom) f += 1.0;
    return f;
  };
  const double fi = snap_floor(c.x);
  const double fj = snap_floor(c.y);
  CellReduction r;
  r.i = static_cast<long>(fi);
  r.j = static_cast<long>(fj);
  r.residual = p - lat.point(fi, fj);
  return r;
}

}  // namespace mchroma
