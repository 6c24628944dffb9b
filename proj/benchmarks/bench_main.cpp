#include <cmath>
#include <numbers>
#include <vector>

#include <benchmark/benchmark.h>

#include "interpen/algebra.hpp"
#include "interpen/geometry.hpp"
#include "interpen/harmonic.hpp"
#include "interpen/lewy.hpp"
#include "interpen/rkc.hpp"
#include "interpen/synthesis.hpp"

namespace {

using namespace interpen;

std::vector<Vec2> ellipse(int n) {
  std::vector<Vec2> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double t = 2.0 * std::numbers::pi * i / n;
    out.push_back({2.0 * std::cos(t), std::sin(t)});
  }
  return out;
}

void BM_IsSimpleClosed(benchmark::State& state) {
  const ClosedPolyline poly(ellipse(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(is_simple_closed(poly));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IsSimpleClosed)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

void BM_IsConvex(benchmark::State& state) {
  const ClosedPolyline poly(ellipse(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(is_convex(poly));
}
BENCHMARK(BM_IsConvex)->Arg(4096);

void BM_StrongConvexity(benchmark::State& state) {
  const auto s = lame(1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(strong_convexity(s));
}
BENCHMARK(BM_StrongConvexity);

void BM_SynthesizeQuadratic(benchmark::State& state) {
  const auto s = lame(1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(synthesize_quadratic(s));
}
BENCHMARK(BM_SynthesizeQuadratic);

void BM_SynthesizeCubic(benchmark::State& state) {
  const auto s = lame(1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(synthesize_cubic(s));
}
BENCHMARK(BM_SynthesizeCubic);

void BM_BuildRkc(benchmark::State& state) {
  const auto s = lame(1.0, 1.0);
  const double k = 2.0 * (1.0 + std::sqrt(10.0));
  for (auto _ : state) benchmark::DoNotOptimize(build_rkc_counterexample(s, k));
}
BENCHMARK(BM_BuildRkc)->Unit(benchmark::kMillisecond);

void BM_BuildLewy(benchmark::State& state) {
  const auto s = lame(1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(build_lewy_counterexample(s));
}
BENCHMARK(BM_BuildLewy)->Unit(benchmark::kMillisecond);

void BM_PoissonExtend(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto b = BoundaryMap::polygon({{1.0, 0.0}, {0.2, 0.9}, {-1.0, 0.3}, {-0.3, -0.8}}, n);
  for (auto _ : state) benchmark::DoNotOptimize(poisson_extend(b, {0.3, -0.2}, n));
  state.SetComplexityN(n);
}
BENCHMARK(BM_PoissonExtend)->RangeMultiplier(4)->Range(256, 16384)->Complexity();

}  // namespace

BENCHMARK_MAIN();
