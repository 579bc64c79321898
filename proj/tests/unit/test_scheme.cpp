#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "mchroma/scheme.hpp"
#include "oracles.hpp"

using namespace mchroma;

namespace {

const int kSupported[] = {8, 10, 12, 14, 16, 18, 20, 22};

std::vector<Vec2> tile(const ColoringScheme& s, Vec2 center) {
  std::vector<Vec2> out;
  for (const auto& v : s.hexagon().polygon().vertices()) out.push_back(v + center);
  return out;
}

// Tiles (i, j) in a box whose closed hexagon contains p.
std::vector<std::pair<long, long>> closed_owners(const ColoringScheme& s, Vec2 p, double eps) {
  std::vector<std::pair<long, long>> out;
  const Vec2 c = oracle::solve(s.tiling().b1(), s.tiling().b2(), p);
  const auto ci = static_cast<long>(std::floor(c.x));
  const auto cj = static_cast<long>(std::floor(c.y));
  for (long i = ci - 3; i <= ci + 3; ++i) {
    for (long j = cj - 3; j <= cj + 3; ++j) {
      if (oracle::inside(tile(s, s.tiling().point(i, j)), p, eps)) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("scheme") {
  TEST_CASE("dodecagon bases match the published values") {
    const auto s = build_scheme(12);
    const double r3 = std::sqrt(3.0);
    CHECK(approx_equal(s.tiling().b1(), {(1 - 2 * r3) / 4, (4 + r3) / 4}));
    CHECK(approx_equal(s.tiling().b2(), {(2 + r3) / 2, -0.5}));
    CHECK(approx_equal(s.colors().b1(), {(3 - 6 * r3) / 4, (12 + 3 * r3) / 4}));
    CHECK(approx_equal(s.colors().b2(), {2 + r3, -1}));
    CHECK(s.choice().provenance == "published");
  }

  TEST_CASE("22-gon hexagon matches the published ratio formulas") {
    const auto s = build_scheme(22);
    const auto& h = s.hexagon();
    auto c = [](int k) { return std::cos(k * M_PI / 22); };
    auto sn = [](int k) { return std::sin(k * M_PI / 22); };
    CHECK(approx_equal(h.a(1), {0.32 * c(4) + 0.68 * c(6), 0.32 * sn(4) + 0.68 * sn(6)}));
    CHECK(approx_equal(h.a(2), {1, 0}));
    CHECK(approx_equal(h.a(3), {c(2), -sn(2)}));
    CHECK(approx_equal(h.a(5), -h.a(2)));
    CHECK(approx_equal(s.colors().b1(), (h.a(1) + h.a(6)) * 3.0));
    CHECK(approx_equal(s.colors().b2(), (h.a(2) + h.a(3)) * 2.0));
  }

  TEST_CASE("hexagon invariants for every default") {
    for (int n : kSupported) {
      CAPTURE(n);
      const auto s = build_scheme(n);
      const auto& h = s.hexagon();
      for (int k = 1; k <= 3; ++k) CHECK(approx_equal(h.a(k + 3), -h.a(k)));
      for (const auto& a : h.vertices()) CHECK(std::abs(s.norm().gauge(a * 2.0) - 1.0) <= 1e-9);
      // A2A3 and A5A6 are sides of C/2
      const auto& hb = s.half_ball();
      bool side23 = false, side56 = false;
      for (std::size_t k = 0; k < hb.size(); ++k) {
        side23 = side23 || (approx_equal(hb.vertex(k), h.a(3)) && approx_equal(hb.vertex(k + 1), h.a(2)));
        side56 = side56 || (approx_equal(hb.vertex(k), h.a(6)) && approx_equal(hb.vertex(k + 1), h.a(5)));
      }
      CHECK(side23);
      CHECK(side56);
      CHECK(std::abs(std::abs(s.colors().det()) - 6.0 * std::abs(s.tiling().det())) <=
            1e-9 * std::abs(s.colors().det()));
      CHECK(std::abs(dot(s.flat_generator(), h.a(2) - h.a(3))) <= 1e-9);
      // coset reps are pairwise incongruent modulo L'
      for (int i = 0; i < 6; ++i) {
        for (int j = 0; j < i; ++j) {
          const Vec2 d = oracle::solve(s.colors().b1(), s.colors().b2(),
                                       s.coset_reps()[static_cast<std::size_t>(i)] -
                                           s.coset_reps()[static_cast<std::size_t>(j)]);
          const bool integral = std::abs(d.x - std::round(d.x)) < 1e-9 && std::abs(d.y - std::round(d.y)) < 1e-9;
          CHECK_FALSE(integral);
        }
      }
    }
  }

  TEST_CASE("half-open boundary classification") {
    const auto s = build_scheme(12);
    const auto& h = s.hexagon();
    using R = HalfOpenHexagon::Region;
    CHECK(h.classify({0, 0}) == R::interior);
    CHECK(h.classify({5, 5}) == R::outside);
    CHECK(h.classify(h.a(1)) == R::kept_boundary);
    CHECK(h.classify(h.a(6)) == R::kept_boundary);
    for (int k : {2, 3, 4, 5}) CHECK(h.classify(h.a(k)) == R::removed_boundary);
    for (int k = 1; k <= 6; ++k) {
      const Vec2 mid = lerp(h.a(k), h.a(k % 6 + 1), 0.5);
      CHECK(h.classify(mid) == (k >= 4 ? R::kept_boundary : R::removed_boundary));
    }
  }

  TEST_CASE("cell_of on tile vertices") {
    const auto s = build_scheme(12);
    const auto& h = s.hexagon();
    CHECK(s.cell_of({0, 0}).i == 0);
    CHECK(s.cell_of({0, 0}).j == 0);
    CHECK(s.cell_of(h.a(1)).i == 0);
    CHECK(s.cell_of(h.a(1)).j == 0);

    // A4 is removed from tile 0. Among the tiles whose closure contains it,
    // the owner is the one where the point is an A1 or A6 vertex.
    const Vec2 p = h.a(4);
    const auto cands = closed_owners(s, p, 1e-9);
    CHECK(cands.size() == 3);
    std::vector<std::pair<long, long>> owners;
    for (auto [i, j] : cands) {
      const Vec2 c = s.tiling().point(i, j);
      if (approx_equal(c + h.a(1), p) || approx_equal(c + h.a(6), p)) owners.emplace_back(i, j);
    }
    REQUIRE(owners.size() == 1);
    const auto cell = s.cell_of(p);
    CHECK(cell.i == owners[0].first);
    CHECK(cell.j == owners[0].second);
    CHECK(cell.i == -1);
    CHECK(cell.j == 0);
  }

  TEST_CASE("partition of random points") {
    for (int n : kSupported) {
      CAPTURE(n);
      const auto s = build_scheme(n);
      std::mt19937_64 rng(static_cast<unsigned>(n));
      std::uniform_real_distribution<double> u(-1.0, 2.0);
      const int count = n == 12 ? 100000 : 12500;
      for (int k = 0; k < count; ++k) {
        const Vec2 p = s.tiling().point(u(rng), u(rng));
        const auto cell = s.cell_of(p);
        const auto owners = closed_owners(s, p, 0.0);
        REQUIRE(owners.size() == 1);
        CHECK(cell.i == owners[0].first);
        CHECK(cell.j == owners[0].second);
      }
    }
  }

  TEST_CASE("partition of boundary points") {
    for (int n : kSupported) {
      CAPTURE(n);
      const auto s = build_scheme(n);
      const auto& h = s.hexagon();
      std::mt19937_64 rng(77);
      std::uniform_real_distribution<double> t01(0.0, 1.0);
      std::uniform_int_distribution<int> off(-3, 3);
      std::uniform_int_distribution<int> edge(1, 6);
      for (int k = 0; k < 1000; ++k) {
        const Vec2 c = s.tiling().point(off(rng), off(rng));
        const int e = edge(rng);
        const double t = k % 3 == 0 ? 0.0 : (k % 3 == 1 ? 0.5 : t01(rng));
        const Vec2 p = c + lerp(h.a(e), h.a(e % 6 + 1), t);
        TileCell cell;
        REQUIRE_NOTHROW(cell = s.cell_of(p));
        CHECK(oracle::inside(tile(s, cell.center), p, 1e-9));
      }
    }
  }

  TEST_CASE("antipodal rule on the kept chain") {
    for (int n : kSupported) {
      const auto s = build_scheme(n);
      const auto& h = s.hexagon();
      std::mt19937_64 rng(5);
      std::uniform_real_distribution<double> t01(0.0, 1.0);
      for (int k = 0; k < 1000; ++k) {
        const int e = 4 + k % 3;  // edges A4A5, A5A6, A6A1
        const Vec2 p = lerp(h.a(e), h.a(e % 6 + 1), k < 6 ? 0.0 : t01(rng));
        if (!h.contains(p)) continue;  // A4 and A5 endpoints are removed
        CHECK_FALSE(h.contains(-p));
        const auto cell = s.cell_of(-p);
        CHECK((cell.i != 0 || cell.j != 0));
      }
    }
  }

  TEST_CASE("coloring is periodic and regular") {
    for (int n : kSupported) {
      CAPTURE(n);
      const auto s = build_scheme(n);
      CHECK(s.color_of({0, 0}) == 0);
      std::set<int> rep_colors;
      for (const auto& r : s.coset_reps()) rep_colors.insert(s.color_of(r));
      CHECK(rep_colors.size() == 6);

      const auto shifts = lattice_points_in_disk(s.colors(), 8.0, DiskQuery{.closed = true});
      std::mt19937_64 rng(13);
      std::uniform_real_distribution<double> u(-3, 3);
      for (int k = 0; k < 200; ++k) {
        const Vec2 p{u(rng), u(rng)};
        const int c = s.color_of(p);
        for (const auto& v : shifts) CHECK(s.color_of(p + v.v) == c);
        for (int i = 0; i < 6; ++i) {
          CHECK((c == i) == (s.color_of(p - s.coset_reps()[static_cast<std::size_t>(i)]) == 0));
        }
      }
    }
  }

  TEST_CASE("choice validation") {
    CHECK_THROWS_AS(build_scheme(9), SchemeError);
    CHECK_THROWS_AS(build_scheme(24), SchemeError);
    CHECK_NOTHROW(build_scheme(24, std::nullopt, BuildOptions{.allow_experimental = true}));
    CHECK_THROWS_AS(build_scheme(7, std::nullopt, BuildOptions{.allow_experimental = true}), SchemeError);
    CHECK_THROWS_AS(build_scheme(12, HexagonChoice::vertex(0)), SchemeError);
    CHECK_THROWS_AS(build_scheme(12, HexagonChoice::vertex(5)), SchemeError);
    CHECK_NOTHROW(build_scheme(12, HexagonChoice::vertex(4)));
    CHECK_THROWS_AS(build_scheme(12, HexagonChoice::split(2, 0.0)), SchemeError);
    CHECK_THROWS_AS(build_scheme(12, HexagonChoice::split(2, 1.0)), SchemeError);
    CHECK_THROWS_AS(build_scheme(12, HexagonChoice::split(5, 0.5)), SchemeError);

    const auto s = build_scheme(12);
    const auto& hb = s.half_ball();
    CHECK_THROWS_AS(HalfOpenHexagon::from_extra_point(hb, 0, {0.1, 0.1}), SchemeError);
    CHECK_THROWS_AS(HalfOpenHexagon::from_extra_point(hb, 0, hb[0]), SchemeError);
    CHECK_THROWS_AS(HalfOpenHexagon::from_extra_point(hb, 0, hb[5]), SchemeError);
    CHECK_THROWS_AS(HalfOpenHexagon::from_extra_point(hb, 0, lerp(hb[7], hb[8], 0.5)), SchemeError);
    CHECK_NOTHROW(HalfOpenHexagon::from_extra_point(hb, 0, lerp(hb[2], hb[3], 0.5)));
  }

  TEST_CASE("choice helpers") {
    CHECK(HexagonChoice::at_arc(12, 0.5).same_placement(HexagonChoice::split(2, 0.5)));
    CHECK(HexagonChoice::at_arc(14, 2.0 / 6.0).same_placement(HexagonChoice::vertex(2)));
    CHECK(HexagonChoice::midpoint().arc_position(22) == doctest::Approx(0.5));
    CHECK(HexagonChoice::split(2, 0.68).arc_position(22) == doctest::Approx(0.268));
    for (auto k : {HexagonKind::boundary_midpoint, HexagonKind::vertex_index, HexagonKind::side_split}) {
      CHECK(hexagon_kind_from_string(to_string(k)) == k);
    }
    CHECK_THROWS_AS(hexagon_kind_from_string("corner"), SchemeError);
    // midpoint of the arc equals the side split at the same arc position
    for (int n : {8, 10, 12}) {
      const auto a = build_scheme(n).hexagon().a(1);
      const auto b = build_scheme(n, HexagonChoice::at_arc(n, 0.5)).hexagon().a(1);
      CHECK(approx_equal(a, b));
    }
  }

  TEST_CASE("defaults and provenance") {
    for (int n : kSupported) CHECK(is_supported_n(n));
    CHECK_FALSE(is_supported_n(6));
    CHECK_FALSE(is_supported_n(24));
    CHECK_FALSE(is_supported_n(13));
    CHECK(default_choice(22).same_placement(HexagonChoice::split(2, 0.68)));
    CHECK(default_choice(22).provenance == "published");
    for (int n : {14, 16, 18, 20}) CHECK(default_choice(n).provenance == "search-certified");
    CHECK(default_choice(14).kind == HexagonKind::vertex_index);
    CHECK(default_choice(16).kind == HexagonKind::vertex_index);
    CHECK(default_choice(20).kind == HexagonKind::side_split);
    CHECK(default_choice(20).ratio == 0.5);
  }
}
