#include <benchmark/benchmark.h>

#include "thickmix/returnsets.hpp"
#include "thickmix/zsets.hpp"

using namespace thickmix;

static void BM_ReturnSetBruteForce(benchmark::State& state) {
  const auto depth = static_cast<unsigned>(state.range(0));
  const returnsets::CylinderSet b1{words::chacon_block(1), 0};
  const auto reach = returnsets::window_reach(depth) - 4;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        returnsets::return_set_bruteforce(b1, b1, depth, zsets::Interval{-reach, reach}));
}
BENCHMARK(BM_ReturnSetBruteForce)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

static void BM_TruncatedHSum(benchmark::State& state) {
  const auto trunc = static_cast<unsigned>(state.range(0));
  const auto r = zsets::h_sum_certified_radius(1, trunc);
  for (auto _ : state)
    benchmark::DoNotOptimize(zsets::truncated_h_sum(1, trunc, zsets::Interval::symmetric(r)));
}
BENCHMARK(BM_TruncatedHSum)->DenseRange(3, 8)->Unit(benchmark::kMicrosecond);

static void BM_ThickChacon(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(returnsets::build_thick_n_chacon(3, 6));
}
BENCHMARK(BM_ThickChacon)->Unit(benchmark::kMillisecond);
