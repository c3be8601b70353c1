#include <benchmark/benchmark.h>

#include "hyperclust/builders.hpp"
#include "hyperclust/corpus.hpp"
#include "hyperclust/families.hpp"
#include "hyperclust/line_graph.hpp"
#include "hyperclust/motif.hpp"
#include "hyperclust/scheme.hpp"

using namespace hyperclust;

static void BM_CountTriangles(benchmark::State& state) {
  const auto g = random_degenerate_graph(static_cast<std::size_t>(state.range(0)), 3, 7);
  const auto k3 = complete_graph(3);
  for (auto _ : state) benchmark::DoNotOptimize(count_embeddings(k3, g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CountTriangles)->RangeMultiplier(2)->Range(128, 4096)->Complexity();

static void BM_CountPaths(benchmark::State& state) {
  const auto g = random_degenerate_graph(static_cast<std::size_t>(state.range(0)), 3, 7);
  const auto p3 = path_graph(3);
  for (auto _ : state) benchmark::DoNotOptimize(count_embeddings(p3, g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CountPaths)->RangeMultiplier(2)->Range(128, 4096)->Complexity();

static void BM_CountC4OnGrid(benchmark::State& state) {
  const auto g = grid_graph(static_cast<std::size_t>(state.range(0)));
  const auto c4 = cycle_graph(4);
  for (auto _ : state) benchmark::DoNotOptimize(count_embeddings(c4, g));
}
BENCHMARK(BM_CountC4OnGrid)->Arg(400)->Arg(1600);

static void BM_HyperedgeMotif(benchmark::State& state) {
  const auto g = corner_glue(default_sigma_motif());
  const auto d = default_sigma_motif();
  for (auto _ : state) benchmark::DoNotOptimize(count_embeddings(d, g));
}
BENCHMARK(BM_HyperedgeMotif);

static void BM_ClusterScandalous(benchmark::State& state) {
  const auto g = scandalous_g();
  const auto s = parse_scheme("representable:E*,k=2");
  for (auto _ : state) benchmark::DoNotOptimize(cluster(s, g));
}
BENCHMARK(BM_ClusterScandalous);

static void BM_SmallCorpus(benchmark::State& state) {
  CorpusBounds b;
  b.max_vertices = 4;
  b.simple_max_n = 5;
  for (auto _ : state) benchmark::DoNotOptimize(generate_corpus(b).morphisms.size());
}
BENCHMARK(BM_SmallCorpus)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
