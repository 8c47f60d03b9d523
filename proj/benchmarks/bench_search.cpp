#include <benchmark/benchmark.h>

#include "tworoot/search.hpp"

namespace {

const char* const kGroups[] = {"7", "2x4", "12", "15", "2x2x4", "21", "2x12"};

void BM_SearchTwoRoot(benchmark::State& state) {
  const auto group = tworoot::AbelianGroup::parse(kGroups[state.range(0)]);
  state.SetLabel(group.to_string());
  std::size_t solutions = 0;
  for (auto _ : state) solutions = tworoot::search_two_root(group).solutions.size();
  state.counters["solutions"] = static_cast<double>(solutions);
}
BENCHMARK(BM_SearchTwoRoot)->DenseRange(0, 6)->Unit(benchmark::kMillisecond);

void BM_AdmissibleTriples(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tworoot::admissible_count_triples(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_AdmissibleTriples)->Arg(12)->Arg(24);

void BM_Classify(benchmark::State& state) {
  const auto group = tworoot::AbelianGroup::parse("12");
  const tworoot::GeneralizedCharacter chi(group, {1, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0});
  for (auto _ : state) benchmark::DoNotOptimize(tworoot::classify(chi));
}
BENCHMARK(BM_Classify);

}  // namespace
