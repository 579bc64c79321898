#include <benchmark/benchmark.h>

#include "mchroma/search.hpp"
#include "mchroma/verify.hpp"

using namespace mchroma;

static void BM_ColorOf(benchmark::State& state) {
  const auto s = build_scheme(static_cast<int>(state.range(0)));
  const auto d = color_period_domain(s);
  std::uint64_t k = 0;
  for (auto _ : state) {
    const Vec2 p = d.at((k % 1000) / 1000.0, (k / 1000 % 1000) / 1000.0);
    benchmark::DoNotOptimize(s.color_of(p));
    ++k;
  }
}
BENCHMARK(BM_ColorOf)->Arg(12)->Arg(22);

static void BM_MinkowskiSum(benchmark::State& state) {
  const auto s = build_scheme(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(minkowski_sum(s.half_ball(), s.hexagon().polygon()));
}
BENCHMARK(BM_MinkowskiSum)->Arg(12)->Arg(22);

static void BM_PackingCertificate(benchmark::State& state) {
  const auto s = build_scheme(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(packing_certificate(s));
}
BENCHMARK(BM_PackingCertificate)->Arg(12)->Arg(22);

static void BM_Clearance(benchmark::State& state) {
  const auto choice = HexagonChoice::split(2, 0.68);
  for (auto _ : state) benchmark::DoNotOptimize(clearance(22, choice));
}
BENCHMARK(BM_Clearance);

static void BM_SampleUnitPairs(benchmark::State& state) {
  const auto s = build_scheme(22);
  for (auto _ : state) benchmark::DoNotOptimize(sample_unit_pairs(s, 10000, 42));
  state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_SampleUnitPairs);

BENCHMARK_MAIN();
