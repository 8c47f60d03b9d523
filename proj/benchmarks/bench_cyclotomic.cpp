#include <benchmark/benchmark.h>

#include "tworoot/cyclotomic.hpp"

namespace {

using tworoot::Cyclotomic;

Cyclotomic sample(int n) {
  Cyclotomic v;
  for (int k = 0; k < n; k += 3) v += tworoot::zeta(n, k) * tworoot::Rational(k % 5 - 2);
  return v;
}

void BM_Multiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Cyclotomic a = sample(n), b = sample(n).conjugate();
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_Multiply)->Arg(12)->Arg(60)->Arg(210);

void BM_MixedOrderSum(benchmark::State& state) {
  const Cyclotomic a = sample(15), b = sample(28);
  for (auto _ : state) benchmark::DoNotOptimize(a + b);
}
BENCHMARK(BM_MixedOrderSum);

void BM_TwoRootDecomposition(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Cyclotomic v = tworoot::zeta(n, 1) + tworoot::zeta(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(tworoot::two_root_decomposition(v));
}
BENCHMARK(BM_TwoRootDecomposition)->Arg(7)->Arg(15)->Arg(24);

void BM_TwoRootRejection(benchmark::State& state) {
  const Cyclotomic v = tworoot::zeta(21, 1) + tworoot::zeta(21, 2) + tworoot::zeta(21, 5);
  for (auto _ : state) benchmark::DoNotOptimize(tworoot::two_root_decomposition(v));
}
BENCHMARK(BM_TwoRootRejection);

}  // namespace
