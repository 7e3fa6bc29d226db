#include <benchmark/benchmark.h>

#include "jetres/catalog.hpp"
#include "jetres/jets.hpp"
#include "jetres/newton.hpp"

namespace {

using namespace jetres;

void BM_ExploreE60(benchmark::State& state) {
  auto f = catalog::equation(catalog::make_instance("E60", {}));
  auto center = jets::Center::parse("yz");
  const auto level = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jets::explore(f, center, level));
}
BENCHMARK(BM_ExploreE60)->Arg(6)->Arg(12)->Arg(18)->Unit(benchmark::kMillisecond);

void BM_ExploreBOdd(benchmark::State& state) {
  auto inst = catalog::make_instance("B_odd", {static_cast<int>(state.range(0)), 2, 0, 0});
  auto f = catalog::equation(inst);
  auto level = catalog::default_max_level(inst);
  auto center = jets::Center::parse("yz");
  for (auto _ : state) benchmark::DoNotOptimize(jets::explore(f, center, level));
}
BENCHMARK(BM_ExploreBOdd)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_SubdivisionAeq(benchmark::State& state) {
  auto k = static_cast<int>(state.range(0));
  auto inst = catalog::make_instance("A_eq", {k, k, 6, 0});
  for (auto _ : state) benchmark::DoNotOptimize(catalog::theorem_subdivision(inst));
}
BENCHMARK(BM_SubdivisionAeq)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_SubdivisionBOddBig(benchmark::State& state) {
  auto inst = catalog::make_instance("B_odd", {5, 3, 0, 0});
  for (auto _ : state) benchmark::DoNotOptimize(catalog::theorem_subdivision(inst));
}
BENCHMARK(BM_SubdivisionBOddBig)->Unit(benchmark::kMillisecond);

void BM_Nondegenerate(benchmark::State& state) {
  auto f = catalog::equation(catalog::make_instance("B_even", {5, 4, 0, 0}));
  for (auto _ : state) benchmark::DoNotOptimize(newton::is_nondegenerate(f));
}
BENCHMARK(BM_Nondegenerate)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
