#include <benchmark/benchmark.h>

#include "tsc/boss.hpp"
#include "tsc/interval.hpp"
#include "tsc/synthetic.hpp"
#include "tsc/tree.hpp"

namespace {

void BM_TsfFit(benchmark::State& state) {
  const auto problem = tsc::random_problem(1, 40, 1, 128, 2);
  tsc::TsfConfig config;
  config.n_trees = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tsc::tsf_fit(problem.train, config));
}
BENCHMARK(BM_TsfFit)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_RiseFit(benchmark::State& state) {
  const auto problem = tsc::spectral_problem(1);
  tsc::RiseConfig config;
  for (auto _ : state) benchmark::DoNotOptimize(tsc::rise_fit(problem.train, config));
}
BENCHMARK(BM_RiseFit)->Unit(benchmark::kMillisecond);

void BM_DecisionTree(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  tsc::FeatureMatrix X(n, 20);
  std::vector<std::size_t> y(n);
  tsc::Rng rng{3};
  for (std::size_t i = 0; i < n; ++i) {
    y[i] = i % 3;
    for (std::size_t j = 0; j < 20; ++j) X(i, j) = tsc::uniform_real(rng, 0.0, 1.0) + 0.1 * static_cast<double>(y[i]);
  }
  for (auto _ : state) benchmark::DoNotOptimize(tsc::fit_decision_tree(X, y, 3, {}));
}
BENCHMARK(BM_DecisionTree)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_BossIndividual(benchmark::State& state) {
  const auto problem = tsc::random_problem(2, 100, 1, 150, 2);
  const tsc::SfaParams params{static_cast<std::size_t>(state.range(0)), 8, 4, true};
  for (auto _ : state) benchmark::DoNotOptimize(tsc::boss_individual_fit(problem.train, params));
}
BENCHMARK(BM_BossIndividual)->Arg(10)->Arg(50)->Arg(150)->Unit(benchmark::kMillisecond);

void BM_BossEnsemble(benchmark::State& state) {
  const auto problem = tsc::random_problem(2, 100, 1, 150, 2);
  for (auto _ : state) benchmark::DoNotOptimize(tsc::boss_ensemble_fit(problem.train, {}));
}
BENCHMARK(BM_BossEnsemble)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
