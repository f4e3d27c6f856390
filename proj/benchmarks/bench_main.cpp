#include "supconv/cover.hpp"
#include "supconv/envelope.hpp"
#include "supconv/generators.hpp"
#include "supconv/subdivision.hpp"
#include "supconv/sup_convolution.hpp"

#include <benchmark/benchmark.h>

using namespace supconv;

static void BM_SupConvolveN(benchmark::State& state) {
  const auto k = static_cast<int>(state.range(0));
  const auto resolution = static_cast<int>(state.range(1));
  const auto n = static_cast<int>(state.range(2));
  const SampledFunction f = make_random(k, resolution, 7, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(sup_convolve_n(f, n));
}
BENCHMARK(BM_SupConvolveN)->Args({1, 24, 3})->Args({2, 12, 2})->Args({2, 12, 3})->Args({3, 6, 3})->Unit(benchmark::kMillisecond);

static void BM_SupConvolvePair(benchmark::State& state) {
  const auto k = static_cast<int>(state.range(0));
  const auto resolution = static_cast<int>(state.range(1));
  const SampledFunction f = make_random(k, resolution, 7, 0.5);
  const SampledFunction g = make_random(k, resolution, 8, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(sup_convolve_pair(f, g));
}
BENCHMARK(BM_SupConvolvePair)->Args({2, 12})->Args({3, 8})->Unit(benchmark::kMillisecond);

static void BM_ConcaveEnvelope(benchmark::State& state) {
  const auto k = static_cast<int>(state.range(0));
  const auto resolution = static_cast<int>(state.range(1));
  const SampledFunction f = make_random(k, resolution, 7, 0.5);
  for (auto _ : state) benchmark::DoNotOptimize(concave_envelope(f));
}
BENCHMARK(BM_ConcaveEnvelope)->Args({1, 48})->Args({2, 12})->Args({2, 20})->Args({3, 8})->Unit(benchmark::kMillisecond);

static void BM_Subdivide(benchmark::State& state) {
  const auto k = static_cast<int>(state.range(0));
  const auto n = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(subdivide(k, n));
}
BENCHMARK(BM_Subdivide)->Args({2, 16})->Args({3, 8})->Args({4, 6})->Unit(benchmark::kMillisecond);

static void BM_CoverSearch(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(search_cover(2, 2, 2));
}
BENCHMARK(BM_CoverSearch)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
