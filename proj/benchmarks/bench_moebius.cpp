#include <benchmark/benchmark.h>

#include "thickmix/moebius.hpp"

using namespace thickmix;
using namespace thickmix::moebius;

static void BM_BoundCheck(benchmark::State& state) {
  const Rational eps(1, 100);
  for (auto _ : state)
    benchmark::DoNotOptimize(bound_check(eps, eps, static_cast<std::uint64_t>(state.range(0)), 42));
}
BENCHMARK(BM_BoundCheck)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_SolveThreeTransitive(benchmark::State& state) {
  const Triple zs{CP1Point::finite(1), CP1Point::finite(GQ(2, 1)), CP1Point::infinity()};
  const Triple ws{CP1Point::finite(GQ(0, 1)), CP1Point::finite(Rational(1, 3)), CP1Point::finite(-4)};
  for (auto _ : state) benchmark::DoNotOptimize(solve_three_transitive(zs, ws));
}
BENCHMARK(BM_SolveThreeTransitive);
