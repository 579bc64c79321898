#include "mchroma/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <thread>

#include "mchroma/random.hpp"

namespace mchroma {

namespace {

constexpr double kUnitTol = 1e-12;

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int count_on_line(const ConvexPolygon& poly, const Line& line) {
  int c = 0;
  for (const auto& v : poly.vertices()) {
    if (std::abs(line.signed_distance(v)) <= kEpsGeom) ++c;
  }
  return c;
}

LineRegression run_line(std::string name, const ConvexPolygon& sum, const Lattice2& colors, long i,
                        long j, const Line& line) {
  LineRegression r;
  r.name = std::move(name);
  r.line = line;
  r.neighbor = LatticePoint{i, j, colors.point(static_cast<double>(i), static_cast<double>(j))};
  const ConvexPolygon other = sum.translated(r.neighbor.v);
  r.check = check_separating_line(sum, other, line);
  r.on_line_p = count_on_line(sum, line);
  r.on_line_q = count_on_line(other, line);
  return r;
}

}  // namespace

double PackingReport::min_nonflat_margin() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& nb : neighbors) {
    if (!nb.flat) m = std::min(m, nb.result.margin);
  }
  return m;
}

ConvexPolygon sum_polygon(const ColoringScheme& scheme) {
  return minkowski_sum(scheme.half_ball(), scheme.hexagon().polygon());
}

PackingReport packing_certificate(const ColoringScheme& scheme, std::optional<double> radius) {
  const ConvexPolygon sum = sum_polygon(scheme);
  PackingReport rep;
  rep.scheme_id = scheme.id();
  rep.sum_circumradius = sum.circumradius();
  rep.enumeration_radius = radius.value_or(2.0 * rep.sum_circumradius);

  const Vec2 flat = scheme.flat_generator();
  const Vec2 u = normalized(flat);
  rep.flat_width_defect = (sum.support(u) + sum.support(-u)) - length(flat);

  rep.pass = true;
  for (const auto& lp : lattice_points_in_disk(scheme.colors(), rep.enumeration_radius,
                                               DiskQuery{.closed = true, .punctured = true})) {
    NeighborCheck nb;
    nb.lattice_vector = lp;
    nb.flat = lp.i == 0 && std::abs(lp.j) == 1;
    nb.result = separate(sum, sum.translated(lp.v));
    const bool ok = nb.flat ? nb.result.margin >= -kEpsSep : nb.result.verdict == Contact::disjoint;
    rep.pass = rep.pass && ok;
    rep.neighbors.push_back(std::move(nb));
  }
  return rep;
}

std::vector<LineRegression> regression_lines(const ColoringScheme& scheme) {
  std::vector<LineRegression> out;
  if (!is_supported_n(scheme.n()) || !scheme.choice().same_placement(default_choice(scheme.n()))) {
    return out;
  }
  const ConvexPolygon sum = sum_polygon(scheme);
  const auto& hex = scheme.hexagon();
  if (scheme.n() == 12) {
    const double r3 = std::sqrt(3.0);
    const Line l = Line::from_slope_intercept(-(2.0 + r3) / 3.0, (5.0 + 2.0 * r3) / 3.0);
    out.push_back(run_line("l", sum, scheme.colors(), 1, 1, l));
  } else if (scheme.n() == 22) {
    const double pi = std::numbers::pi;
    auto c = [pi](int k) { return std::cos(k * pi / 22.0); };
    auto s = [pi](int k) { return std::sin(k * pi / 22.0); };
    const Vec2 a1 = hex.a(1);
    const Vec2 a6 = hex.a(6);
    // l1 passes 1/300 above the sum's vertex V(12 pi / 22) + a6 (printed with
    // a6_x in the y term; the vertex has a6_y there).
    const double slope1 = (a6.y - a1.y) / (a6.x - a1.x);
    const Line l1 = Line::through({c(12) + a6.x, s(12) + a6.y + 1.0 / 300.0}, slope1);
    out.push_back(run_line("l1", sum, scheme.colors(), 1, 0, l1));
    const double slope2 = (s(4) - s(2)) / (c(4) - c(2));
    const Line l2 = Line::through({c(4) + a1.x, s(4) + a1.y + 1.0 / 50.0}, slope2);
    out.push_back(run_line("l2", sum, scheme.colors(), 1, 1, l2));
  }
  return out;
}

SampleDomain color_period_domain(const ColoringScheme& scheme) {
  return SampleDomain{{0.0, 0.0}, scheme.colors().b1(), scheme.colors().b2()};
}

SamplingReport sample_monochromatic_pairs(const std::function<int(Vec2)>& color,
                                          const PolygonalNorm& norm, const SampleDomain& domain,
                                          std::uint64_t n_samples, std::uint64_t seed, unsigned threads) {
  const auto t0 = std::chrono::steady_clock::now();
  SamplingReport rep;
  rep.kind = "unit_pairs";
  rep.n_samples = n_samples;
  rep.seed = seed;
  if (n_samples == 0) return rep;

  threads = std::max(1U, threads);
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, n_samples));
  std::vector<std::vector<Violation>> found(threads);
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned w) {
    try {
      const std::uint64_t lo = n_samples * w / threads;
      const std::uint64_t hi = n_samples * (w + 1) / threads;
      for (std::uint64_t k = lo; k < hi; ++k) {
        const Vec2 p = domain.at(counter_uniform(seed, k, 0), counter_uniform(seed, k, 1));
        const Vec2 q = p + norm.boundary_point(counter_uniform(seed, k, 2));
        const int cp = color(p);
        if (cp == color(q)) found[w].push_back(Violation{k, p, q, cp});
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (auto& f : found) rep.violations.insert(rep.violations.end(), f.begin(), f.end());
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

SamplingReport sample_unit_pairs(const ColoringScheme& scheme, std::uint64_t n_samples, std::uint64_t seed,
                                 unsigned threads) {
  return sample_monochromatic_pairs([&scheme](Vec2 p) { return scheme.color_of(p); }, scheme.norm(),
                                    color_period_domain(scheme), n_samples, seed, threads);
}

bool is_violation(const ColoringScheme& scheme, Vec2 p, Vec2 q) {
  if (std::abs(scheme.norm().gauge(q - p) - 1.0) > kUnitTol) return false;
  return scheme.color_of(p) == scheme.color_of(q);
}

SamplingReport adversarial_boundary_pairs(const ColoringScheme& scheme) {
  const auto t0 = std::chrono::steady_clock::now();
  SamplingReport rep;
  rep.kind = "adversarial";
  const auto& hex = scheme.hexagon();
  const Vec2 flat = scheme.flat_generator();

  auto test = [&](Vec2 p, Vec2 q) {
    const std::uint64_t k = rep.n_samples++;
    if (is_violation(scheme, p, q)) rep.violations.push_back(Violation{k, p, q, scheme.color_of(p)});
  };

  // Flat contact: side A2A3 of a tile against side A5A6 of the tile one flat
  // generator away; every such difference lies on a facet of C.
  constexpr int kGrid = 8;
  for (int a = 0; a <= kGrid; ++a) {
    for (int b = 0; b <= kGrid; ++b) {
      const double s = static_cast<double>(a) / kGrid;
      const double t = static_cast<double>(b) / kGrid;
      test(lerp(hex.a(2), hex.a(3), s), flat + lerp(hex.a(5), hex.a(6), t));
      test(lerp(hex.a(5), hex.a(6), s), -flat + lerp(hex.a(2), hex.a(3), t));
    }
  }

  // Antipodal pairs p, -p on the parts of the boundary of H that lie on the
  // boundary of C/2.
  for (int a = 0; a <= kGrid; ++a) {
    const double s = static_cast<double>(a) / kGrid;
    const Vec2 p = lerp(hex.a(5), hex.a(6), s);
    test(p, -p);
  }
  test(hex.a(1), hex.a(4));

  // Unit-distance pairs among vertices of nearby tiles.
  std::vector<Vec2> verts;
  for (const auto& lp : lattice_points_in_disk(scheme.tiling(), 4.0, DiskQuery{.closed = true, .punctured = false})) {
    for (const auto& a : hex.vertices()) {
      const Vec2 v = lp.v + a;
      const bool dup = std::any_of(verts.begin(), verts.end(), [&](Vec2 w) { return approx_equal(v, w); });
      if (!dup) verts.push_back(v);
    }
  }
  for (std::size_t x = 0; x < verts.size(); ++x) {
    for (std::size_t y = x + 1; y < verts.size(); ++y) {
      if (std::abs(scheme.norm().gauge(verts[y] - verts[x]) - 1.0) <= kUnitTol) test(verts[x], verts[y]);
    }
  }
  rep.elapsed_seconds = seconds_since(t0);
  return rep;
}

}  // namespace mchroma
