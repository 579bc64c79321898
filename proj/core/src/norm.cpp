#include "mchroma/norm.hpp"

#include <algorithm>
#include <numbers>
#include <string>

namespace mchroma {

PolygonalNorm::PolygonalNorm(ConvexPolygon ball, std::vector<Facet> facets, int n, double r,
                             double phase)
    : ball_(std::move(ball)), facets_(std::move(facets)), n_(n), circumradius_(r), phase_(phase) {}

PolygonalNorm PolygonalNorm::regular(int n, double circumradius, double phase) {
  if (n < 4 || n % 2 != 0) {
    throw GeometryError("regular polygon norm needs an even vertex count >= 4, got " +
                        std::to_string(n));
  }
  if (!(circumradius > 0.0) || !std::isfinite(circumradius) || !std::isfinite(phase)) {
    throw GeometryError("regular polygon norm needs a positive finite circumradius");
  }
  // The second half is the exact negation of the first, so gauge(-v) == gauge(v)
  // bit for bit.
  const int half = n / 2;
  std::vector<Vec2> verts(static_cast<std::size_t>(n));
  for (int t = 0; t < half; ++t) {
    const double a = 2.0 * std::numbers::pi * t / n + phase;
    verts[static_cast<std::size_t>(t)] = {circumradius * std::cos(a), circumradius * std::sin(a)};
    verts[static_cast<std::size_t>(t + half)] = -verts[static_cast<std::size_t>(t)];
  }
  std::vector<Facet> facets(static_cast<std::size_t>(n));
  for (int t = 0; t < half; ++t) {
    const Vec2 a = verts[static_cast<std::size_t>(t)];
    const Vec2 b = verts[static_cast<std::size_t>(t + 1)];
    const Vec2 nrm = normalized(Vec2{b.y - a.y, a.x - b.x});
    const double off = 0.5 * (dot(nrm, a) + dot(nrm, b));
    facets[static_cast<std::size_t>(t)] = {nrm, off};
    facets[static_cast<std::size_t>(t + half)] = {-nrm, off};
  }
  auto ball = ConvexPolygon::from_vertices(verts);
  return PolygonalNorm(std::move(ball), std::move(facets), n, circumradius, phase);
}

double PolygonalNorm::gauge(Vec2 v) const {
  double g = 0.0;
  for (const auto& f : facets_) g = std::max(g, dot(f.normal, v) / f.offset);
  return g;
}

Vec2 PolygonalNorm::boundary_point(double s) const {
  s -= std::floor(s);
  const double pos = s * n_;
  auto edge = static_cast<std::ptrdiff_t>(std::floor(pos));
  double local = pos - static_cast<double>(edge);
  if (edge >= n_) {  // s rounded up to 1
    edge = 0;
    local = 0.0;
  }
  return lerp(ball_.vertex(edge), ball_.vertex(edge + 1), local);
}

}  // namespace mchroma
