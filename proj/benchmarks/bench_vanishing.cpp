#include <benchmark/benchmark.h>

#include <random>

#include "tworoot/vanishing.hpp"

namespace {

void BM_EnumerateMinimal(benchmark::State& state) {
  const int weight = static_cast<int>(state.range(0));
  const int order = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(tworoot::enumerate_minimal_vanishing(weight, order));
}
BENCHMARK(BM_EnumerateMinimal)->Args({4, 60})->Args({6, 30})->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  std::mt19937_64 rng(7);
  std::vector<tworoot::RootSum> sums;
  for (int i = 0; i < 64; ++i) sums.push_back(tworoot::random_two_prime_vanishing_sum(rng, 10));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(tworoot::decompose(sums[i++ % sums.size()]));
}
BENCHMARK(BM_Decompose);

void BM_IsMinimal(benchmark::State& state) {
  const tworoot::RootSum s = tworoot::RootSum::parse("E(6), E(6)^5, E(5), E(5)^2, E(5)^3, E(5)^4");
  for (auto _ : state) benchmark::DoNotOptimize(tworoot::is_minimal_vanishing(s));
}
BENCHMARK(BM_IsMinimal);

}  // namespace
