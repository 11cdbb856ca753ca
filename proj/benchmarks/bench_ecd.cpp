#include <benchmark/benchmark.h>

#include "ecdkit/ecd.hpp"
#include "ecdkit/experiments.hpp"
#include "ecdkit/setmeasures.hpp"

using namespace ecdkit;

namespace {

FeatureSet points(std::size_t count, std::size_t dim, std::uint64_t seed) {
  return sample({DistributionKind::gaussian, dim, 1.0}, count, seed);
}

void BM_PairwiseDistances(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = points(n / 2, 100, 1), b = points(n / 2, 100, 2);
  for (auto _ : state) benchmark::DoNotOptimize(pairwise_distances(a, b));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PairwiseDistances)->RangeMultiplier(2)->Range(250, 2000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_Kmst(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto d = pairwise_distances(points(n / 2, 10, 1), points(n / 2, 10, 2));
  const int k = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(kmst_neutral_ties(d, k));
}
BENCHMARK(BM_Kmst)
    ->ArgsProduct({{250, 500, 1000, 2000}, {1, 10}})
    ->Unit(benchmark::kMillisecond);

void BM_EcdPipeline(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = points(n / 2, 100, 1), b = points(n / 2, 100, 2);
  for (auto _ : state) benchmark::DoNotOptimize(ecd(a, b, 10).statistic);
}
BENCHMARK(BM_EcdPipeline)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_Frechet(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const auto p = fit_gaussian(points(1000, dim, 1)), q = fit_gaussian(points(1000, dim, 2));
  for (auto _ : state) benchmark::DoNotOptimize(frechet_gaussian(p, q));
}
BENCHMARK(BM_Frechet)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
