#include <benchmark/benchmark.h>

#include "lazyfinger/lazyfinger.hpp"

namespace {

using namespace lazyfinger;

SearchStats markov_stats(std::size_t n) {
  return frequencies_from_sequence(generate({SequenceKind::kMarkov, n, 20 * n, 42}));
}

void BM_LazyNaive(benchmark::State& state) {
  const SearchStats s = markov_stats(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(optimal_lazy_naive(s).cost);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LazyNaive)->RangeMultiplier(2)->Range(8, 32)->Complexity();

void BM_LazyDp(benchmark::State& state) {
  const SearchStats s = markov_stats(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(optimal_lazy_dp(s).cost);
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LazyDp)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNCubed);

void BM_RootDp(benchmark::State& state) {
  const SearchStats s = markov_stats(static_cast<std::size_t>(state.range(0)));
  const auto method = state.range(1) ? RootDpMethod::kKnuth : RootDpMethod::kCubic;
  for (auto _ : state) benchmark::DoNotOptimize(optimal_root_dp(s, method).cost);
}
BENCHMARK(BM_RootDp)->ArgsProduct({{64, 256, 1024}, {0, 1}});

void BM_Mehlhorn(benchmark::State& state) {
  const WeightVector w = weights_from_tree(build_balanced(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(mehlhorn_build(w).root());
}
BENCHMARK(BM_Mehlhorn)->Range(64, 1 << 16);

void BM_Treap(benchmark::State& state) {
  const WeightVector w = weights_from_tree(build_balanced(static_cast<std::size_t>(state.range(0))));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(treap_build(w, seed++).root());
}
BENCHMARK(BM_Treap)->Range(64, 4096);

}  // namespace
