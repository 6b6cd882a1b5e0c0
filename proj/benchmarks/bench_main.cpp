#include <benchmark/benchmark.h>

#include "tcnet/airy.hpp"
#include "tcnet/asymptotics.hpp"
#include "tcnet/canonical.hpp"
#include "tcnet/enumerate.hpp"
#include "tcnet/exact_counts.hpp"
#include "tcnet/words.hpp"

using namespace tcnet;

static void BM_OtcCount(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(counts::otc_count({3, n, n / 2}));
}
BENCHMARK(BM_OtcCount)->Arg(50)->Arg(500)->Arg(5000);

static void BM_CSequence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(words::c_sequence(2, n));
}
BENCHMARK(BM_CSequence)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_Canonicalize(benchmark::State& state) {
  const auto nets = networks::enumerate_tc(3, 4, 3);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(networks::canonical_key(nets[i]));
    i = (i + 1) % nets.size();
  }
}
BENCHMARK(BM_Canonicalize);

static void BM_CountOtc(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(networks::count_otc(2, 4, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_CountOtc)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_LogAiry(benchmark::State& state) {
  double x = -2.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(asymptotics::log_airy_ai(x));
    x = x > 40.0 ? -2.0 : x + 0.37;
  }
}
BENCHMARK(BM_LogAiry);

static void BM_EDiagonal(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(asymptotics::e_diagonal(2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EDiagonal)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
