// Fast transform against the O(4^n) definition, plus the main pipelines.

#include <benchmark/benchmark.h>

#include "bfw/constructions.hpp"
#include "bfw/expsums.hpp"
#include "bfw/kloosterman.hpp"

using namespace bfw;

static void BM_WhtFast(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto F = BinaryField::quadratic(m);
  const auto f = build_f(F, 1);
  for (auto _ : state) benchmark::DoNotOptimize(wht_fast(f));
  state.counters["n"] = 2 * m;
}
BENCHMARK(BM_WhtFast)->DenseRange(3, 10)->Unit(benchmark::kMillisecond);

// Every field point by the direct sum: 2^n points times 2^n terms.
static void BM_WalshNaive(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto F = BinaryField::quadratic(m);
  const auto f = build_f(F, 1);
  for (auto _ : state)
    for (Elem a = 0; a < F.size(); ++a) benchmark::DoNotOptimize(walsh_naive_at(F, f, a));
  state.counters["n"] = 2 * m;
}
BENCHMARK(BM_WalshNaive)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_BuildF(benchmark::State& state) {
  const auto F = BinaryField::quadratic(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_f(F, 1));
}
BENCHMARK(BM_BuildF)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

// build, transform, distribution, nonlinearity, degree.
static void BM_FPipeline(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const auto F = BinaryField::quadratic(m);
  for (auto _ : state) {
    const auto f = build_f(F, 1);
    const auto d = distribution(wht_fast(f));
    benchmark::DoNotOptimize(nonlinearity(d, 2 * m));
    benchmark::DoNotOptimize(algebraic_degree(f));
  }
}
BENCHMARK(BM_FPipeline)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

static void BM_KloostermanScan(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(scan(m));
}
BENCHMARK(BM_KloostermanScan)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_CharacterSumIdentity(benchmark::State& state) {
  const auto F = BinaryField::quadratic(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(theorem35_check(F, 1));
}
BENCHMARK(BM_CharacterSumIdentity)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
