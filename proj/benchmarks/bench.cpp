#include <benchmark/benchmark.h>

#include "balflip/catalog.hpp"
#include "balflip/coloring.hpp"
#include "balflip/diamond.hpp"
#include "balflip/manifold.hpp"
#include "balflip/moves.hpp"
#include "balflip/shelling.hpp"
#include "balflip_cli/commands.hpp"

using namespace balflip;

namespace {

IndexSet full_index(int d) {
  IndexSet I;
  for (int i = 0; i <= d + 1; ++i) I.push_back(i);
  return I;
}

void BM_ClosedForm(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const IndexSet I{0, d};
  for (auto _ : state) benchmark::DoNotOptimize(diamond_closed_form(d, I));
}
BENCHMARK(BM_ClosedForm)->DenseRange(2, 6);

void BM_Recursion(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto g = gamma(d, {0, d});
  for (auto _ : state) benchmark::DoNotOptimize(diamond(g, d));
}
BENCHMARK(BM_Recursion)->DenseRange(2, 5);

void BM_AbsoluteShelling(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto I = full_index(d);
  for (auto _ : state) benchmark::DoNotOptimize(absolute_shelling_order(d, I));
}
BENCHMARK(BM_AbsoluteShelling)->DenseRange(2, 5);

void BM_VerifyShelling(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto cp = cross_polytope(d);
  const auto order = absolute_shelling_order(d, full_index(d)).order;
  for (auto _ : state) benchmark::DoNotOptimize(is_shelling(cp, order));
}
BENCHMARK(BM_VerifyShelling)->DenseRange(2, 5);

void BM_FindShelling(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const auto cp = cross_polytope(d);
  for (auto _ : state) benchmark::DoNotOptimize(find_shelling(cp, 16));
}
BENCHMARK(BM_FindShelling)->DenseRange(1, 3);

Complex walked(int steps) {
  cli::WalkConfig cfg;
  cfg.steps = steps;
  cfg.seed = 3;
  return cli::run_walk(cfg).final_complex.complex;
}

void BM_SiteScan(benchmark::State& state) {
  const auto c = walked(static_cast<int>(state.range(0)));
  const auto kappa = *find_balanced_coloring(c);
  std::vector<IndexSet> classes;
  for (const auto& fc : enumerate_basic_flips(2)) classes.push_back(fc.canonical_index);
  for (auto _ : state) benchmark::DoNotOptimize(find_cross_flip_sites(c, kappa, classes));
  state.counters["facets"] = static_cast<double>(c.num_facets());
}
BENCHMARK(BM_SiteScan)->Arg(0)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_ManifoldCheck(benchmark::State& state) {
  const auto c = walked(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_combinatorial_manifold(c));
  state.counters["facets"] = static_cast<double>(c.num_facets());
}
BENCHMARK(BM_ManifoldCheck)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_WalkSteps(benchmark::State& state) {
  cli::WalkConfig cfg;
  cfg.steps = static_cast<int>(state.range(0));
  cfg.seed = 5;
  for (auto _ : state) benchmark::DoNotOptimize(cli::run_walk(cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_WalkSteps)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
