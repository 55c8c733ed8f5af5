#include <benchmark/benchmark.h>

#include "symshuffle/series.hpp"
#include "symshuffle/cycle_index.hpp"
#include "symshuffle/shuffle.hpp"

using namespace symshuffle;

namespace {

const ShuffleSpec& bench_spec() {
  static const ShuffleSpec spec = ShuffleSpec::abg(ParamVector{{Rational(1, 3)}, {Rational(1, 4)}, Rational(5, 12)});
  return spec;
}

void BM_EnumerateSerial(benchmark::State& state) {
  const auto alphabet = model_alphabet(bench_spec());
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_word_distribution_serial(alphabet, n, WordScheme::abg));
}

void BM_EnumerateParallel(benchmark::State& state) {
  const auto alphabet = model_alphabet(bench_spec());
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_word_distribution(alphabet, n, WordScheme::abg));
}

void BM_ConvolveSerial(benchmark::State& state) {
  const auto d = exact_distribution(bench_spec(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(convolve_serial(d, d));
}

void BM_ConvolveParallel(benchmark::State& state) {
  const auto d = exact_distribution(bench_spec(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(convolve(d, d));
}

TruncatedSeries bench_series(int order) { return cycle_index_exponent(ShuffleSpec::riffle(3, true), order); }

void BM_SeriesMulSerial(benchmark::State& state) {
  const auto s = bench_series(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(series_mul_serial(s, s));
}

void BM_SeriesMulParallel(benchmark::State& state) {
  const auto s = bench_series(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(series_mul(s, s));
}

void BM_CycleIndexSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cycle_index_serial(bench_spec(), static_cast<int>(state.range(0))));
}

void BM_CycleIndexParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cycle_index(bench_spec(), static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvolveSerial)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConvolveParallel)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SeriesMulSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SeriesMulParallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CycleIndexSerial)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CycleIndexParallel)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
