#include <benchmark/benchmark.h>

#include "thickmix/torus.hpp"

using namespace thickmix;
using namespace thickmix::torus;

static void BM_IntersectionWitness(benchmark::State& state) {
  const Rational f(1, 5);
  const Rect u(3 * f, 4 * f, 3 * f, 4 * f), v(f, 2 * f, f, 2 * f);
  const Mat2Int m = Mat2Int::horizontal_shear(state.range(0)) * Mat2Int::vertical_shear(3);
  for (auto _ : state) benchmark::DoNotOptimize(intersection_witness(m, u, v));
}
BENCHMARK(BM_IntersectionWitness)->Arg(1)->Arg(100)->Arg(10000);

static void BM_TransitivityFourPairs(benchmark::State& state) {
  const Rational q(1, 20);
  const std::vector<std::pair<Rect, Rect>> pairs{
      {{q, 2 * q, q, 2 * q}, {5 * q, 6 * q, 7 * q, 8 * q}},
      {{10 * q, 11 * q, 3 * q, 4 * q}, {2 * q, 3 * q, 15 * q, 16 * q}},
      {{17 * q, 18 * q, 12 * q, 13 * q}, {9 * q, 10 * q, 9 * q, 10 * q}},
      {{4 * q, 5 * q, 18 * q, 19 * q}, {13 * q, 14 * q, 3 * q, 4 * q}}};
  for (auto _ : state) benchmark::DoNotOptimize(transitivity_witness(pairs, 100000));
}
BENCHMARK(BM_TransitivityFourPairs)->Unit(benchmark::kMillisecond);
