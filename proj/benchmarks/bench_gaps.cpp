#include <benchmark/benchmark.h>

#include "dgap/gaps.hpp"
#include "dgap/generator.hpp"
#include "dgap/object.hpp"

namespace {

dgap::DigitalObject sample(int n, int extent, std::uint64_t seed) {
  dgap::ShapeSpec spec;
  spec.kind = dgap::ShapeKind::Random;
  spec.n = n;
  spec.extents.assign(static_cast<std::size_t>(n), extent);
  spec.seed = seed;
  return dgap::generate(spec);
}

void BM_Census(benchmark::State& state) {
  const auto d = sample(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(dgap::census(d));
  state.counters["voxels"] = static_cast<double>(d.size());
}

void BM_GapsFormula(benchmark::State& state) {
  const auto d = sample(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(dgap::count_gaps_formula(d));
}

void BM_GapsOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto d = sample(n, static_cast<int>(state.range(1)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(dgap::count_gaps_oracle(d, n - 2));
}

void BM_Classify(benchmark::State& state) {
  const auto d = sample(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(dgap::classification_histogram(d));
}

}  // namespace

BENCHMARK(BM_Census)->Args({3, 6})->Args({4, 5});
BENCHMARK(BM_GapsFormula)->Args({3, 6})->Args({4, 5});
BENCHMARK(BM_GapsOracle)->Args({3, 6})->Args({4, 5});
BENCHMARK(BM_Classify)->Args({3, 6})->Args({4, 5});

BENCHMARK_MAIN();
