#include "mchroma/red_blue.hpp"

#include <chrono>
#include <memory>

#include "mchroma/random.hpp"

namespace mchroma {

Configuration::Configuration(std::vector<Vec2> points) : points_(std::move(points)) {
  if (points_.empty()) throw std::invalid_argument("configuration must be nonempty");
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!points_[i].finite()) throw std::invalid_argument("configuration point is not finite");
    for (std::size_t j = 0; j < i; ++j) {
      if (approx_equal(points_[i], points_[j])) {
        throw std::invalid_argument("configuration points must be pairwise distinct");
      }
    }
  }
}

RedBluePair to_red_blue(const ColoringScheme& scheme) {
  auto shared = std::make_shared<const ColoringScheme>(scheme);
  RedBlueColoring rb;
  rb.is_red = [shared](Vec2 p) { return shared->color_of(p) == 0; };
  rb.description = "color class 0 of " + scheme.id();
  rb.period = color_period_domain(scheme);
  std::vector<Vec2> k;
  for (const auto& r : scheme.coset_reps()) k.push_back(-r);
  return RedBluePair{std::move(rb), Configuration(std::move(k))};
}

HypothesisViolation::HypothesisViolation(Vec2 x_)
    : std::runtime_error("hypothesis violated at x = (" + std::to_string(x_.x) + ", " +
                         std::to_string(x_.y) + "): every point of K + x is blue"),
      x(x_) {}

std::function<int(Vec2)> from_red_blue(RedBlueColoring rb, Configuration config) {
  return [rb = std::move(rb), config = std::move(config)](Vec2 x) {
    const auto& pts = config.points();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (rb.is_red(x + pts[i])) return static_cast<int>(i) + 1;
    }
    throw HypothesisViolation(x);
  };
}

TranslateHitReport check_translate_hits(const RedBlueColoring& rb, const Configuration& config,
                                        std::uint64_t n_samples, std::uint64_t seed,
                                        std::optional<SampleDomain> domain) {
  if (!domain) domain = rb.period;
  if (!domain) throw std::invalid_argument("check_translate_hits: no sampling domain for this coloring");
  TranslateHitReport rep;
  rep.n_samples = n_samples;
  rep.seed = seed;
  for (std::uint64_t k = 0; k < n_samples; ++k) {
    const Vec2 m = domain->at(counter_uniform(seed, k, 0), counter_uniform(seed, k, 1));
    bool hit = false;
    for (const auto& a : config.points()) {
      if (rb.is_red(a + m)) {
        hit = true;
        break;
      }
    }
    if (!hit) rep.misses.push_back(TranslateMiss{k, m});
  }
  return rep;
}

SamplingReport sample_red_unit_pairs(const RedBlueColoring& rb, const PolygonalNorm& norm,
                                     const SampleDomain& domain, std::uint64_t n_samples,
                                     std::uint64_t seed) {
  const auto t0 = std::chrono::steady_clock::now();
  SamplingReport rep;
  rep.kind = "red_unit_pairs";
  rep.n_samples = n_samples;
  rep.seed = seed;
  // Rejection-sample red anchors; n_samples counts accepted pairs.
  const std::uint64_t max_draws = 1000 * n_samples + 1000;
  std::uint64_t accepted = 0;
  for (std::uint64_t k = 0; k < max_draws && accepted < n_samples; ++k) {
    const Vec2 p = domain.at(counter_uniform(seed, k, 0), counter_uniform(seed, k, 1));
    if (!rb.is_red(p)) continue;
    ++accepted;
    const Vec2 q = p + norm.boundary_point(counter_uniform(seed, k, 2));
    if (rb.is_red(q)) rep.violations.push_back(Violation{k, p, q, 0});
  }
  rep.n_samples = accepted;
  rep.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace mchroma
