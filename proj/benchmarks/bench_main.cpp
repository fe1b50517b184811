#include <benchmark/benchmark.h>

#include "pricedq/boolfn.hpp"
#include "pricedq/influence.hpp"
#include "pricedq/oracle.hpp"
#include "pricedq/strategy.hpp"

using namespace pricedq;

namespace {

void BM_influence_profile(benchmark::State& state) {
  BoolFn f = BoolFn::tribes(3, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    InfluenceProfile p = influence_profile_exact(f);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_influence_profile)->Arg(2)->Arg(3)->Arg(4);

void BM_compact_table(benchmark::State& state) {
  BoolFn f = BoolFn::tribes(3, 4).restrict(0, 1).restrict(5, 0);
  for (auto _ : state) {
    FnTable t = f.compact_table();
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_compact_table);

void BM_influence_estimate(benchmark::State& state) {
  BoolFn f = BoolFn::tribes(3, 4);
  uint64_t seed = 0;
  for (auto _ : state) {
    double v = influence_estimate(f, 0, 0.05, 0.05, ++seed);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_influence_estimate);

void BM_s_diamond_stats(benchmark::State& state) {
  BoolFn f = BoolFn::tribes(2, 3);
  CostVector c({3, 1, 4, 1, 5, 2});
  for (auto _ : state) {
    SDiamondStrategy s(f, c, Rational(1, 20));
    ExactStats st = strategy_stats_exact(s, f, c);
    benchmark::DoNotOptimize(st);
  }
}
BENCHMARK(BM_s_diamond_stats);

void BM_s_star_stats(benchmark::State& state) {
  BoolFn f = BoolFn::tribes(2, 3);
  CostVector c({3, 1, 4, 1, 5, 2});
  Rational budget(c.total() / 2);
  for (auto _ : state) {
    SStarStrategy s(f, c, budget);
    ExactStats st = strategy_stats_exact(s, f, c);
    benchmark::DoNotOptimize(st);
  }
}
BENCHMARK(BM_s_star_stats);

void BM_run_strategy(benchmark::State& state) {
  BoolFn f = BoolFn::tribes(2, 3);
  CostVector c = CostVector::unit(6);
  SStarStrategy s(f, c, Rational(4));
  uint64_t x = 0;
  for (auto _ : state) {
    Transcript tr = run_strategy(s, c, x++ & 63, x);
    benchmark::DoNotOptimize(tr);
  }
}
BENCHMARK(BM_run_strategy);

void BM_opt_expected(benchmark::State& state) {
  int count = static_cast<int>(state.range(0));
  BoolFn f = BoolFn::tribes(2, count);
  CostVector c = CostVector::unit(2 * count);
  for (auto _ : state) {
    OptResult r = opt_expected(f, c, 0);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_opt_expected)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_opt_expected_with_errors(benchmark::State& state) {
  BoolFn f = BoolFn::tribes(2, 4);
  CostVector c = CostVector::unit(8);
  for (auto _ : state) {
    OptResult r = opt_expected(f, c, 2);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_opt_expected_with_errors)->Unit(benchmark::kMillisecond);

void BM_find_budget(benchmark::State& state) {
  BoolFn f = BoolFn::parity(2);
  CostVector c = CostVector::unit(2);
  uint64_t seed = 0;
  for (auto _ : state) {
    BudgetSearchResult r = find_budget(f, c, Rational(1, 10), 500, 0.05, ++seed);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_find_budget)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
