// Serial reference vs OpenMP for the three parallel loops in the library.
// Set OMP_NUM_THREADS to vary the thread count.
#include <benchmark/benchmark.h>

#include <array>
#include <vector>

#include "clusteredit/bench.hpp"
#include "clusteredit/clustering.hpp"
#include "clusteredit/dp.hpp"
#include "clusteredit/graph.hpp"
#include "clusteredit/heuristics.hpp"
#include "clusteredit/ordering.hpp"
#include "clusteredit/pipeline.hpp"

using namespace clusteredit;

namespace {

std::vector<Read> reads_for(std::size_t n) {
  SimConfig cfg;
  cfg.n = n;
  cfg.seed = 7;
  // about 15 reads deep
  cfg.genome_length = static_cast<double>(n) * 2.0 * 112.0 / 15.0;
  return simulate_reads(cfg, {}, AlignParams{}).reads;
}

template <bool Parallel>
void BM_BuildGraph(benchmark::State& st) {
  const auto reads = reads_for(static_cast<std::size_t>(st.range(0)));
  const AlignParams p;
  for (auto _ : st) {
    auto g = Parallel ? build_alignment_graph(reads, p) : build_alignment_graph_serial(reads, p);
    benchmark::DoNotOptimize(g);
  }
  st.SetItemsProcessed(st.iterations() * st.range(0));
}

template <bool Parallel>
void BM_ClusteringCost(benchmark::State& st) {
  const auto reads = reads_for(static_cast<std::size_t>(st.range(0)));
  const auto g = build_alignment_graph(reads, AlignParams{});
  const auto c = adaptive_cluster_edit(g, 0).clustering;
  for (auto _ : st) {
    double x = Parallel ? clustering_cost(g, c) : clustering_cost_serial(g, c);
    benchmark::DoNotOptimize(x);
  }
}

template <bool Parallel>
void BM_BenchTables(benchmark::State& st) {
  const std::array<double, 2> ls{0.1, 0.01};
  const auto n = static_cast<std::size_t>(st.range(0));
  for (auto _ : st) {
    auto r = Parallel ? bench_tables(n, ls, 8, 1) : bench_tables_serial(n, ls, 8, 1);
    benchmark::DoNotOptimize(r);
  }
}

}  // namespace

BENCHMARK(BM_BuildGraph<false>)->Arg(20000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildGraph<true>)->Arg(20000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClusteringCost<false>)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClusteringCost<true>)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BenchTables<false>)->Arg(1000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BenchTables<true>)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
