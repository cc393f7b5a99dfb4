#include <benchmark/benchmark.h>

#include <vector>

#include "permprod/chains.hpp"
#include "permprod/classes.hpp"
#include "permprod/realize.hpp"
#include "permprod/oracle.hpp"
#include "permprod/solver.hpp"

using namespace permprod;

static void BM_ComposeDegree64(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto p = random_class_element(uniform_cycle_type(64, 5), rng);
  const auto q = random_class_element(uniform_cycle_type(64, 7), rng);
  for (auto _ : state) benchmark::DoNotOptimize(compose(p, q));
}
BENCHMARK(BM_ComposeDegree64);

static void BM_RealizeMinimalIndexSum(benchmark::State& state) {
  // The rigid boundary case: transposition-heavy classes against a 60-cycle.
  std::vector<int> lambda(29, 2);
  lambda.insert(lambda.end(), {1, 1});
  const std::vector<int> mu(30, 2);
  const RealizationRequest req{ClassSpec(60, CycleType(lambda, 60)),
                               ClassSpec(60, CycleType(mu, 60)),
                               RealizeVariant::FullCycle, 1, 0};
  for (auto _ : state) benchmark::DoNotOptimize(realize_full_cycle(req));
}
BENCHMARK(BM_RealizeMinimalIndexSum);

static void BM_RealizeLargeSurplus(benchmark::State& state) {
  // Nineteen 3-cycles against a single 59-cycle: twenty merge moves.
  const RealizationRequest req{ClassSpec(59, uniform_cycle_type(59, 3)),
                               ClassSpec(59, uniform_cycle_type(59, 29)),
                               RealizeVariant::FullCycle, 1, 0};
  for (auto _ : state) benchmark::DoNotOptimize(realize_full_cycle(req));
}
BENCHMARK(BM_RealizeLargeSurplus);

static void BM_SolveTriple(benchmark::State& state) {
  const int c = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int b = 2; b <= c; b += 7)
      for (int a = 2; a <= b; a += 5) benchmark::DoNotOptimize(solve(a, b, c));
  }
}
BENCHMARK(BM_SolveTriple)->Arg(12)->Arg(30)->Arg(60);

static void BM_ExtendChain(benchmark::State& state) {
  const std::vector<int> orders{7, 2, 9, 3, 24, 2, 5, 11};
  for (auto _ : state) benchmark::DoNotOptimize(extend(orders));
}
BENCHMARK(BM_ExtendChain);

static void BM_OracleMinDegree334(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(min_degree(3, 3, 4));
}
BENCHMARK(BM_OracleMinDegree334);

static void BM_Survey(benchmark::State& state) {
  const int max_n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(survey(max_n));
}
BENCHMARK(BM_Survey)->Arg(12)->Arg(25);

BENCHMARK_MAIN();
