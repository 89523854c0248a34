#include <benchmark/benchmark.h>

#include "lazyfinger/lazyfinger.hpp"

namespace {

using namespace lazyfinger;

void BM_LazyFinger(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const StaticTree t = build_balanced(n);
  const SearchSequence x = generate({SequenceKind::kUniform, n, 100000, 1});
  for (auto _ : state) benchmark::DoNotOptimize(run_lazy_finger(t, x).transition_cost);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(x.size()));
}
BENCHMARK(BM_LazyFinger)->Range(64, 1 << 16);

void BM_CostFromFrequencies(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const StaticTree t = build_balanced(n);
  const SearchStats s = frequencies_from_sequence(generate({SequenceKind::kMarkov, n, 20 * n, 1}));
  for (auto _ : state) benchmark::DoNotOptimize(cost_from_frequencies(t, s));
}
BENCHMARK(BM_CostFromFrequencies)->Range(16, 256);

void BM_MultiTree(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto d = static_cast<std::size_t>(state.range(1));
  const SearchSequence x = generate({SequenceKind::kMarkov, n, 100000, 3});
  const MultiTree mt = build_multitree(frequencies_from_sequence(x), d);
  for (auto _ : state) benchmark::DoNotOptimize(run_multitree(mt, x));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(x.size()));
}
BENCHMARK(BM_MultiTree)->Args({64, 4})->Args({64, 16})->Args({64, 64})->Args({256, 4})->Args({256, 16})->Args({256, 256});

void BM_DfBound(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const WeightVector w = weights_from_tree(build_balanced(n));
  const SearchSequence x = generate({SequenceKind::kUniform, n, 100000, 5});
  for (auto _ : state) benchmark::DoNotOptimize(df_bound(w, x));
}
BENCHMARK(BM_DfBound)->Range(64, 4096);

}  // namespace
BENCHMARK_MAIN();
