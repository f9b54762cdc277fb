#include <benchmark/benchmark.h>

#include <random>

#include "okb/filtration.hpp"
#include "okb/golden.hpp"
#include "okb/integrals.hpp"
#include "okb/okounkov_function.hpp"
#include "okb/scenario.hpp"

using namespace okb;

namespace {

void BM_SeriesBuild(benchmark::State& state) {
  const SeriesFamily family(GeometrySpec::blowup({GeometrySpec::default_p1(), GeometrySpec::generic_p2()}), {2, {1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(family.level(state.range(0)).dim());
}
BENCHMARK(BM_SeriesBuild)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_OkounkovBody(benchmark::State& state) {
  const Scenario s = builtin_scenario("blowup2-collinear");
  for (auto _ : state) benchmark::DoNotOptimize(okounkov_body(*s.family, state.range(0)).body.vertices().size());
}
BENCHMARK(BM_OkounkovBody)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);

void BM_Hull(benchmark::State& state) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(0, 1000);
  std::vector<Point> pts;
  for (long i = 0; i < state.range(0); ++i) pts.push_back(make_point({Rational(d(rng), 37), Rational(d(rng), 41)}));
  for (auto _ : state) benchmark::DoNotOptimize(Polytope::hull(pts, 2).volume());
}
BENCHMARK(BM_Hull)->RangeMultiplier(4)->Range(16, 1024);

void BM_Envelope(benchmark::State& state) {
  const Scenario s = builtin_scenario("blowup1-function");
  for (auto _ : state)
    benchmark::DoNotOptimize(okounkov_function_envelope(*s.family, *s.valuation, state.range(0)).samples.size());
}
BENCHMARK(BM_Envelope)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_JumpingNumbers(benchmark::State& state) {
  const SeriesFamily plane(GeometrySpec::p2(), {1, {}});
  const LinearSeries v = plane.level(state.range(0));
  const auto val = ValuationSpec::at_point(GeometrySpec::default_p1());
  for (auto _ : state) benchmark::DoNotOptimize(jumping_numbers(v, val).mass);
}
BENCHMARK(BM_JumpingNumbers)->RangeMultiplier(2)->Range(4, 32)->Unit(benchmark::kMillisecond);

void BM_FamilyScan(benchmark::State& state) {
  const std::vector<Rational> grid = {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  for (auto _ : state) benchmark::DoNotOptimize(family_scan(golden::blowup_family(), grid, state.range(0)).size());
}
BENCHMARK(BM_FamilyScan)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
