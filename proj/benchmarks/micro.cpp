#include <benchmark/benchmark.h>

#include "chromadist/distance.hpp"
#include "chromadist/exact_solver.hpp"
#include "chromadist/extremal/certificates.hpp"
#include "chromadist/generators.hpp"
#include "chromadist/lll/asymptotic.hpp"
#include "chromadist/lll/dense.hpp"
#include "chromadist/verify.hpp"
#include "chromadist/vizing.hpp"

using namespace chromadist;

static void BM_Vizing(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const Graph g = gen_classic(ClassicKind::RandomRegular, 400, d, 1);
  for (auto _ : state) benchmark::DoNotOptimize(vizing_colour(g, ColourBlock::range(1, d + 1)));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.edge_count()));
}
BENCHMARK(BM_Vizing)->Arg(8)->Arg(32)->Arg(120);

static void BM_Verify(benchmark::State& state) {
  const auto r = static_cast<std::uint32_t>(state.range(0));
  const Graph g = gen_classic(ClassicKind::RandomRegular, 400, 8, 2);
  const auto c = vizing_colour(g, ColourBlock::range(1, 9));
  for (auto _ : state) benchmark::DoNotOptimize(verify_distinguishing(g, c, r));
}
BENCHMARK(BM_Verify)->Arg(1)->Arg(2)->Arg(3);

static void BM_RAdjacentPairs(benchmark::State& state) {
  const Graph g = gen_classic(ClassicKind::RandomRegular, 1000, 10, 3);
  for (auto _ : state) benchmark::DoNotOptimize(r_adjacent_pairs(g, static_cast<std::uint32_t>(state.range(0))));
}
BENCHMARK(BM_RAdjacentPairs)->Arg(1)->Arg(2);

static void BM_ExactSolverCycle(benchmark::State& state) {
  const Graph g = gen_classic(ClassicKind::Cycle, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(chi_exact(g, 1));
}
BENCHMARK(BM_ExactSolverCycle)->Arg(5)->Arg(7)->Arg(9);

static void BM_ConstructDense(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const Graph g = gen_classic(ClassicKind::RandomRegular, 200, d, 4);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(lll::construct_dense(g, 1, lll::Epsilon::of(1, 1), ++seed));
}
BENCHMARK(BM_ConstructDense)->Arg(8)->Arg(12)->Arg(120)->Unit(benchmark::kMillisecond);

static void BM_ConstructAsymptotic(benchmark::State& state) {
  const Graph g = gen_classic(ClassicKind::PathPower, 200, static_cast<std::size_t>(state.range(0)));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(lll::construct_asymptotic(g, 1, ++seed));
}
BENCHMARK(BM_ConstructAsymptotic)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_PaletteThreshold(benchmark::State& state) {
  const auto r = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(extremal::find_palette_threshold(r, 300, 2000));
}
BENCHMARK(BM_PaletteThreshold)->Arg(7)->Arg(9)->Unit(benchmark::kMillisecond);

static void BM_Observation2(benchmark::State& state) {
  const extremal::Rational eps(1, 10);
  for (auto _ : state) benchmark::DoNotOptimize(extremal::observation2_check(eps, 10));
}
BENCHMARK(BM_Observation2)->Unit(benchmark::kMicrosecond);
BENCHMARK_MAIN();
