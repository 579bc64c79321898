#include <doctest.h>

#include "mchroma/red_blue.hpp"

using namespace mchroma;

TEST_SUITE("red_blue") {
  TEST_CASE("configuration validation") {
    CHECK_THROWS_AS(Configuration({}), std::invalid_argument);
    CHECK_THROWS_AS(Configuration({{0, 0}, {1, 1}, {0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Configuration({{NAN, 0}}), std::invalid_argument);
    CHECK(Configuration({{0, 0}, {1, 0}}).size() == 2);
  }

  TEST_CASE("red-blue pair from a scheme") {
    const auto s = build_scheme(12);
    const auto pair = to_red_blue(s);
    REQUIRE(pair.config.size() == 6);
    bool has_origin = false;
    for (std::size_t k = 0; k < 6; ++k) {
      CHECK(approx_equal(pair.config.points()[k], -s.coset_reps()[k]));
      has_origin = has_origin || approx_equal(pair.config.points()[k], {0, 0});
    }
    CHECK(has_origin);
    CHECK(pair.coloring.is_red({0, 0}));
    CHECK(pair.coloring.is_red(s.colors().b1()));
    CHECK_FALSE(pair.coloring.is_red(s.tiling().b1()));
    REQUIRE(pair.coloring.period.has_value());
  }

  TEST_CASE("coloring from a red-blue pair") {
    const auto s = build_scheme(12);
    const auto pair = to_red_blue(s);
    const auto color = from_red_blue(pair.coloring, pair.config);
    CHECK(color({0, 0}) == 1);  // a_1 = 0 and the origin is red
    // the derived coloring is the scheme's own up to relabeling
    for (const auto& r : s.coset_reps()) CHECK(color(r) == s.color_of(r) + 1);

    const RedBlueColoring all_red{[](Vec2) { return true; }, "all red", std::nullopt};
    const auto constant = from_red_blue(all_red, Configuration({{0, 0}}));
    CHECK(constant({3.5, -2}) == 1);

    const RedBlueColoring none{[](Vec2) { return false; }, "all blue", std::nullopt};
    const auto broken = from_red_blue(none, Configuration({{0, 0}}));
    try {
      broken({1.5, 2.5});
      FAIL("expected a hypothesis violation");
    } catch (const HypothesisViolation& e) {
      CHECK(e.x == Vec2{1.5, 2.5});
    }
  }

  TEST_CASE("translate hits") {
    const SampleDomain box{{0, 0}, {1, 0}, {0, 1}};
    const RedBlueColoring all_red{[](Vec2) { return true; }, "all red", std::nullopt};
    const RedBlueColoring none{[](Vec2) { return false; }, "all blue", std::nullopt};
    const Configuration k0({{0, 0}});
    CHECK(check_translate_hits(all_red, k0, 500, 1, box).misses.empty());
    CHECK(check_translate_hits(none, k0, 500, 1, box).misses.size() == 500);
    CHECK_THROWS_AS(check_translate_hits(none, k0, 10, 1), std::invalid_argument);

    for (int n : {8, 12, 22}) {
      const auto pair = to_red_blue(build_scheme(n));
      CHECK(check_translate_hits(pair.coloring, pair.config, 20000, 3).pass());
    }
  }

  TEST_CASE("red class avoids unit distance and round trip is proper") {
    for (int n : {10, 16, 22}) {
      CAPTURE(n);
      const auto s = build_scheme(n);
      const auto pair = to_red_blue(s);
      const auto red = sample_red_unit_pairs(pair.coloring, s.norm(), *pair.coloring.period, 20000, 5);
      CHECK(red.n_samples == 20000);
      CHECK(red.pass());
      const auto rt = sample_monochromatic_pairs(from_red_blue(pair.coloring, pair.config), s.norm(),
                                                 *pair.coloring.period, 20000, 5);
      CHECK(rt.pass());
    }
  }

  TEST_CASE("rare red anchors are reported honestly") {
    const RedBlueColoring none{[](Vec2) { return false; }, "all blue", std::nullopt};
    const SampleDomain box{{0, 0}, {1, 0}, {0, 1}};
    const auto rep = sample_red_unit_pairs(none, regular_polygon_norm(8, 1.0), box, 10, 1);
    CHECK(rep.n_samples == 0);
    CHECK(rep.pass());
  }
}
