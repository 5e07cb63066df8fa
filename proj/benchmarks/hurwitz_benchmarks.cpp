#include <benchmark/benchmark.h>

#include "hurwitz/bridge.hpp"
#include "hurwitz/factorize.hpp"
#include "hurwitz/tropical.hpp"
#include "hurwitz/zigzag.hpp"

using namespace hurwitz;

namespace {

Partition ones(int n) { return Partition(std::vector<int>(n, 1)); }

void BM_CountComplex(benchmark::State& state) {
  const FactorizationSpec spec{0, ones(state.range(0)), ones(state.range(0)), Variant::complex, {}, 0};
  for (auto _ : state) benchmark::DoNotOptimize(count(spec));
}
BENCHMARK(BM_CountComplex)->DenseRange(3, 4);

void BM_CountRealMonotone(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const FactorizationSpec spec{0, ones(d), ones(d), Variant::real_monotone,
                               SignSequence::simple(2 * d - 2, d - 1), 0};
  for (auto _ : state) benchmark::DoNotOptimize(count(spec));
}
BENCHMARK(BM_CountRealMonotone)->DenseRange(3, 4);

void BM_EnumerateCovers(benchmark::State& state) {
  const auto lambda = Partition::parse("2,1,1");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_covers(0, lambda, lambda));
}
BENCHMARK(BM_EnumerateCovers);

void BM_Classify(benchmark::State& state) {
  const auto c = build_standard_universal(static_cast<int>(state.range(0)), 0);
  for (auto _ : state) benchmark::DoNotOptimize(classify(c));
}
BENCHMARK(BM_Classify)->DenseRange(1, 2);

void BM_FibreCount(benchmark::State& state) {
  const auto c = build_standard_universal(1, 0);
  const RealTropicalCover rc{c, unique_colouring(c, SignSequence::simple(c.r, 2))};
  for (auto _ : state) benchmark::DoNotOptimize(fibre_count(rc, 0, Variant::real_monotone));
}
BENCHMARK(BM_FibreCount);

void BM_NNumbers(benchmark::State& state) {
  const auto c = build_standard_universal(1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(n_numbers(c, 0, SplittingRange::per_simple_s));
}
BENCHMARK(BM_NNumbers);

}  // namespace

BENCHMARK_MAIN();
