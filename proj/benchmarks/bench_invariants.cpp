#include <benchmark/benchmark.h>

#include "graphweight/colorings.hpp"
#include "graphweight/gf2.hpp"
#include "graphweight/invariants.hpp"
#include "graphweight/random_graph.hpp"

using namespace graphweight;

namespace {

Graph sample(int n, std::uint64_t num, std::uint64_t den) {
  return random_graph(n, Probability{num, den}, 0xB0BA);
}

void BM_Chi3(benchmark::State& state) {
  const Graph g = sample(static_cast<int>(state.range(0)), 1, 4);
  for (auto _ : state) benchmark::DoNotOptimize(chi3_rows(g.adjacency()));
}
BENCHMARK(BM_Chi3)->DenseRange(8, 20, 4);

void BM_Rank(benchmark::State& state) {
  const Graph g = sample(static_cast<int>(state.range(0)), 1, 2);
  const Gf2Matrix a = adjacency_matrix(g, g.all_vertices());
  for (auto _ : state) benchmark::DoNotOptimize(rank(a));
}
BENCHMARK(BM_Rank)->Arg(8)->Arg(16)->Arg(32)->Arg(62);

void BM_PhiDefinition(benchmark::State& state) {
  // Sparse enough that |E| stays within the default edge budget.
  const Graph g = sample(static_cast<int>(state.range(0)), 2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(phi_definition(g));
  state.counters["edges"] = g.size();
}
BENCHMARK(BM_PhiDefinition)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_PhiEulerian(benchmark::State& state) {
  const Graph g = sample(static_cast<int>(state.range(0)), 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(phi_eulerian(g));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) << state.range(0));
}
BENCHMARK(BM_PhiEulerian)->DenseRange(10, 22, 4)->Unit(benchmark::kMillisecond);

void BM_PsiCorank(benchmark::State& state) {
  const Graph g = sample(static_cast<int>(state.range(0)), 1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(psi_corank(g));
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) << state.range(0));
}
BENCHMARK(BM_PsiCorank)->DenseRange(10, 18, 4)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
