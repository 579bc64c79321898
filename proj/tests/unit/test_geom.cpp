#include <doctest.h>

#include <cmath>
#include <random>

#include "mchroma/geom.hpp"
#include "mchroma/scheme.hpp"
#include "mchroma/verify.hpp"
#include "oracles.hpp"

using namespace mchroma;

namespace {

ConvexPolygon square(Vec2 c, double h) {
  return ConvexPolygon::from_vertices({c + Vec2{-h, -h}, c + Vec2{h, -h}, c + Vec2{h, h}, c + Vec2{-h, h}});
}

}  // namespace

TEST_SUITE("geom") {
  TEST_CASE("polygon construction validates input") {
    CHECK_THROWS_AS(ConvexPolygon::from_vertices({{0, 0}, {1, 0}}), GeometryError);
    CHECK_THROWS_AS(ConvexPolygon::from_vertices({{0, 0}, {1, 0}, {2, 0}}), GeometryError);
    CHECK_THROWS_AS(ConvexPolygon::from_vertices({{0, 0}, {1, 0}, {1, 0}, {0, 1}}), GeometryError);
    CHECK_THROWS_AS(ConvexPolygon::from_vertices({{0, 0}, {NAN, 0}, {0, 1}}), GeometryError);
    // reflex vertex
    CHECK_THROWS_AS(ConvexPolygon::from_vertices({{0, 0}, {2, 0}, {1, 0.5}, {2, 2}, {0, 2}}), GeometryError);

    const auto cw = ConvexPolygon::from_vertices({{0, 0}, {0, 1}, {1, 1}, {1, 0}});
    CHECK(cw.area() == doctest::Approx(1.0));
    for (std::size_t k = 0; k < cw.size(); ++k) CHECK(cross(cw.edge(k), cw.edge(k + 1)) > 0);
    CHECK(cw.center() == Vec2{0.5, 0.5});
    CHECK(cw.centrally_symmetric());
    CHECK_FALSE(ConvexPolygon::from_vertices({{0, 0}, {1, 0}, {0, 1}}).centrally_symmetric());
  }

  TEST_CASE("sum of a symmetric polygon with itself is its 2-dilate") {
    const auto p = ConvexPolygon::from_vertices({{1, 0}, {0.5, 1}, {-0.5, 1}, {-1, 0}, {-0.5, -1}, {0.5, -1}})
                       .translated({0.3, -0.2});
    const auto pp = minkowski_sum(p, p);
    const auto dil = p.scaled(2.0).translated(p.center());
    CHECK(oracle::same_cycle(pp.vertices(), dil.vertices(), 1e-12));
    CHECK(approx_equal(pp.center(), p.center() * 2.0));
  }

  TEST_CASE("dodecagon scheme sum contains the published vertices") {
    const auto s = build_scheme(12);
    const auto sum = sum_polygon(s);
    const double r3 = std::sqrt(3.0);
    bool b5 = false, b1 = false;
    for (const auto& v : sum.vertices()) {
      b5 = b5 || approx_equal(v, {2.0, 0.0});
      b1 = b1 || approx_equal(v, {0.25, (6.0 + r3) / 4.0});
    }
    CHECK(b5);
    CHECK(b1);
  }

  TEST_CASE("edge-merge sum equals the hull of all vertex sums") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
      const auto p = ConvexPolygon::from_vertices(oracle::random_symmetric(rng, {0.1, 0.2}));
      const auto q = ConvexPolygon::from_vertices(oracle::random_symmetric(rng, {-1.0, 0.5}));
      const auto s = minkowski_sum(p, q);
      CHECK(s.size() <= p.size() + q.size());
      CHECK(oracle::same_cycle(s.vertices(), oracle::sum_hull(p.vertices(), q.vertices()), 1e-9));
      CHECK(approx_equal(s.center(), p.center() + q.center()));
    }
  }

  TEST_CASE("sum is commutative and associative") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
      const auto a = ConvexPolygon::from_vertices(oracle::random_symmetric(rng, {}));
      const auto b = ConvexPolygon::from_vertices(oracle::random_symmetric(rng, {}));
      const auto c = ConvexPolygon::from_vertices(oracle::random_symmetric(rng, {}));
      CHECK(oracle::same_cycle(minkowski_sum(a, b).vertices(), minkowski_sum(b, a).vertices(), 1e-9));
      CHECK(oracle::same_cycle(minkowski_sum(minkowski_sum(a, b), c).vertices(),
                               minkowski_sum(a, minkowski_sum(b, c)).vertices(), 1e-9));
    }
  }

  TEST_CASE("support function is additive") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ang(0.0, 2 * M_PI);
    const auto p = ConvexPolygon::from_vertices(oracle::random_symmetric(rng, {0.5, 0.5}));
    const auto q = ConvexPolygon::from_vertices(oracle::random_symmetric(rng, {-0.2, 1.0}));
    const auto s = minkowski_sum(p, q);
    for (int k = 0; k < 64; ++k) {
      const double t = ang(rng);
      const Vec2 u{std::cos(t), std::sin(t)};
      CHECK(std::abs(s.support(u) - p.support(u) - q.support(u)) <= 1e-9);
    }
  }

  TEST_CASE("separation of squares matches the closed form") {
    const auto a = square({0, 0}, 1.0);
    const auto touch = separate(a, square({2, 0}, 1.0));
    CHECK(touch.verdict == Contact::touching);
    CHECK(std::abs(touch.margin - oracle::square_gap({0, 0}, {2, 0}, 1.0)) <= 1e-12);
    CHECK_FALSE(touch.witness.has_value());

    for (Vec2 c : {Vec2{3, 0}, Vec2{2.5, 3}, Vec2{-4, -4}, Vec2{0, 2.0000001}, Vec2{1.5, 0.2}, Vec2{0.5, -1.9}}) {
      const auto r = separate(a, square(c, 1.0));
      CHECK(r.margin == doctest::Approx(oracle::square_gap({0, 0}, c, 1.0)).epsilon(1e-12));
    }
    const auto self = separate(a, a);
    CHECK(self.verdict == Contact::overlapping);
    CHECK_FALSE(self.witness.has_value());
  }

  TEST_CASE("separate is symmetric and witnesses separate strictly") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> off(-6.0, 6.0);
    int disjoint = 0;
    for (int trial = 0; trial < 300; ++trial) {
      const auto p = ConvexPolygon::from_vertices(oracle::random_symmetric(rng, {}));
      const auto q = ConvexPolygon::from_vertices(oracle::random_symmetric(rng, {off(rng), off(rng)}));
      const auto pq = separate(p, q);
      const auto qp = separate(q, p);
      CHECK(pq.verdict == qp.verdict);
      CHECK(std::abs(pq.margin - qp.margin) <= 1e-12);
      if (pq.verdict == Contact::disjoint) {
        ++disjoint;
        REQUIRE(pq.witness.has_value());
        for (const auto& v : p.vertices()) CHECK(pq.witness->signed_distance(v) < 0);
        for (const auto& v : q.vertices()) CHECK(pq.witness->signed_distance(v) > 0);
      }
    }
    CHECK(disjoint > 50);
  }

  TEST_CASE("separating line checks") {
    const auto a = square({0, 0}, 1.0);
    const auto b = square({3, 0}, 1.0);
    const auto vertical = Line::from_normal_offset({1, 0}, 1.5);
    const auto ok = check_separating_line(a, b, vertical);
    CHECK(ok.separates);
    CHECK(ok.min_margin_p == doctest::Approx(0.5));
    CHECK(ok.min_margin_q == doctest::Approx(0.5));
    CHECK_FALSE(check_separating_line(a, a, Line::from_slope_intercept(0.3, 0.1)).separates);
    // slope-intercept orientation: below = y <= m x + b
    const auto l = Line::from_slope_intercept(2.0, 1.0);
    CHECK(l.signed_distance({0, 0}) < 0);
    CHECK(l.signed_distance({0, 2}) > 0);
  }

  TEST_CASE("lattice disk enumeration") {
    const Lattice2 lat({1.0, 0.2}, {0.3, 1.1});
    CHECK(lattice_points_in_disk(lat, 0.5).empty());
    CHECK_THROWS(lattice_points_in_disk(lat, INFINITY));
    CHECK_THROWS(lattice_points_in_disk(lat, -1.0));
    CHECK_THROWS_AS(Lattice2({1, 1}, {2, 2}), GeometryError);

    const auto pts = lattice_points_in_disk(lat, 5.0);
    // brute force over a generous coefficient box
    std::size_t expect = 0;
    for (long i = -40; i <= 40; ++i) {
      for (long j = -40; j <= 40; ++j) {
        if ((i || j) && length(lat.point(i, j)) < 5.0) ++expect;
      }
    }
    CHECK(pts.size() == expect);
    for (const auto& p : pts) {
      bool neg = false;
      for (const auto& q : pts) neg = neg || (q.i == -p.i && q.j == -p.j);
      CHECK(neg);
    }
    const auto with_origin = lattice_points_in_disk(lat, 5.0, DiskQuery{.closed = false, .punctured = false});
    CHECK(with_origin.size() == expect + 1);
  }

  TEST_CASE("published lattice point counts") {
    CHECK(lattice_points_in_disk(build_scheme(12).colors(), 4.0).size() == 4);
    CHECK(lattice_points_in_disk(build_scheme(22).colors(), 4.0, DiskQuery{.closed = true}).size() == 6);
  }

  TEST_CASE("reduce to cell") {
    const Lattice2 lat({1.3, 0.4}, {-0.2, 0.9});
    const auto b1 = lat.b1(), b2 = lat.b2();
    auto r = reduce_to_cell(lat, b1 + b2);
    CHECK(r.i == 1);
    CHECK(r.j == 1);
    CHECK(approx_equal(r.residual, {0, 0}));
    r = reduce_to_cell(lat, b1 * 0.5);
    CHECK(r.i == 0);
    CHECK(r.j == 0);
    CHECK(approx_equal(r.residual, b1 * 0.5));

    const Vec2 p = b1 * -0.25 + b2 * 1.75;
    const Vec2 c = oracle::solve(b1, b2, p);
    r = reduce_to_cell(lat, p);
    CHECK(r.i == static_cast<long>(std::floor(c.x)));
    CHECK(r.j == static_cast<long>(std::floor(c.y)));
    CHECK(r.i == -1);
    CHECK(r.j == 1);
    CHECK(approx_equal(r.residual, b1 * 0.75 + b2 * 0.75));

    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-50, 50);
    for (int k = 0; k < 1000; ++k) {
      const Vec2 q{u(rng), u(rng)};
      const auto red = reduce_to_cell(lat, q);
      CHECK(approx_equal(lat.point(red.i, red.j) + red.residual, q));
      const Vec2 rc = oracle::solve(b1, b2, red.residual);
      CHECK(rc.x >= -1e-12);
      CHECK(rc.x < 1.0);
      CHECK(rc.y >= -1e-12);
      CHECK(rc.y < 1.0);
    }
  }
}
