#include <benchmark/benchmark.h>

#include <random>

#include "tsc/distances.hpp"
#include "tsc/shapelet.hpp"
#include "tsc/stats.hpp"

namespace {

std::vector<double> series(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d;
  std::vector<double> x(n);
  for (auto& v : x) v = d(rng);
  return x;
}

void BM_Dtw(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const double w = static_cast<double>(state.range(1)) / 100.0;
  const auto a = series(n, 1), b = series(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(tsc::dtw_distance(a, b, w));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Dtw)->ArgsProduct({{64, 256, 1024}, {10, 100}});

void BM_Measure(benchmark::State& state, tsc::DistanceSpec spec) {
  const auto a = series(256, 3), b = series(256, 4);
  for (auto _ : state) benchmark::DoNotOptimize(tsc::distance(spec, a, b));
}
BENCHMARK_CAPTURE(BM_Measure, euclidean, tsc::DistanceSpec{tsc::Measure::Euclidean, {}});
BENCHMARK_CAPTURE(BM_Measure, wdtw, tsc::DistanceSpec{tsc::Measure::Wdtw, {.g = 0.05}});
BENCHMARK_CAPTURE(BM_Measure, lcss, tsc::DistanceSpec{tsc::Measure::Lcss, {.epsilon = 0.2, .delta = 25}});
BENCHMARK_CAPTURE(BM_Measure, erp, tsc::DistanceSpec{tsc::Measure::Erp, {.w = 0.1, .g = 0.5}});
BENCHMARK_CAPTURE(BM_Measure, msm, tsc::DistanceSpec{tsc::Measure::Msm, {.c = 1.0}});
BENCHMARK_CAPTURE(BM_Measure, twed, tsc::DistanceSpec{tsc::Measure::Twed, {.nu = 0.001, .lambda = 1.0}});

// Early abandoning against a tight cutoff, as inside a 1NN search.
void BM_DtwAbandon(benchmark::State& state) {
  const auto a = series(512, 5), b = series(512, 6);
  const double cutoff = tsc::dtw_distance(a, b, 1.0) * 0.1;
  for (auto _ : state) benchmark::DoNotOptimize(tsc::dtw_distance(a, b, 1.0, cutoff));
}
BENCHMARK(BM_DtwAbandon);

void BM_SubsequenceDistance(benchmark::State& state) {
  const auto s = tsc::znormalize(series(static_cast<std::size_t>(state.range(0)), 7));
  const auto x = series(256, 8);
  for (auto _ : state) benchmark::DoNotOptimize(tsc::subsequence_distance(s, x));
}
BENCHMARK(BM_SubsequenceDistance)->Arg(8)->Arg(32)->Arg(128);

}  // namespace
