#include "clusteredit/bench.hpp"

#include "clusteredit/dp.hpp"
#include "clusteredit/error.hpp"
#include "clusteredit/heuristics.hpp"
#include "clusteredit/point_graph.hpp"

namespace clusteredit {

namespace {

BenchReport summarize(std::size_t n, std::span<const double> ls,
                      std::size_t runs, std::uint64_t seed,
                      std::vector<BenchRun> all) {
  BenchReport report{n, seed, {}, std::move(all)};
  for (std::size_t li = 0; li < ls.size(); ++li) {
    BenchRow row;
    row.l = ls[li];
    row.runs = runs;
    for (std::size_t r = 0; r < runs; ++r) {
      const auto& run = report.runs[li * runs + r];
      row.mean_clusters += static_cast<double>(run.exact_clusters);
      row.exact.cost += run.exact_cost;
      row.h2.cost += run.h2_cost;
      row.h1.cost += run.h1_cost;
      row.exact.opcount += static_cast<double>(run.exact_ops);
      row.h2.opcount += static_cast<double>(run.h2_ops);
      row.h1.opcount += static_cast<double>(run.h1_ops);
    }
    const auto k = static_cast<double>(runs);
    row.mean_clusters /= k;
    for (auto* m : {&row.exact, &row.h2, &row.h1}) {
      m->cost /= k;
      m->opcount /= k;
    }
    row.mean_cluster_size =
        row.mean_clusters > 0.0 ? static_cast<double>(n) / row.mean_clusters : 0.0;
    report.rows.push_back(row);
  }
  return report;
}

void check_args(std::span<const double> ls, std::size_t runs) {
  if (runs == 0) throw InputError("bench needs at least one run");
  if (ls.empty()) throw InputError("bench needs at least one l value");
}

}  // namespace

BenchRun bench_instance(std::size_t n, double l, std::uint64_t seed,
                        std::size_t run) {
  const auto g = generate_point_graph({n, l, seed + run});
  // Serial cost evaluation keeps every instance bit-identical no matter how
  // many threads the caller runs.
  BenchRun out;
  out.l = l;
  out.run = run;
  const auto exact = exact_dp_weighted(g);
  out.exact_cost = exact.cost;
  out.exact_ops = exact.opcount;
  out.exact_clusters = exact.clustering.size();
  const auto h2 = heuristic_dp(g, HeuristicVariant::frontier_or_positive_edge);
  out.h2_cost = clustering_cost_serial(g, h2.clustering);
  out.h2_ops = h2.opcount;
  const auto h1 = heuristic_dp(g, HeuristicVariant::frontier_plus_one);
  out.h1_cost = clustering_cost_serial(g, h1.clustering);
  out.h1_ops = h1.opcount;
  return out;
}

BenchReport bench_tables(std::size_t n, std::span<const double> ls,
                         std::size_t runs, std::uint64_t seed) {
  check_args(ls, runs);
  std::vector<BenchRun> all(ls.size() * runs);
  const auto total = static_cast<std::ptrdiff_t>(all.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t t = 0; t < total; ++t) {
    const auto li = static_cast<std::size_t>(t) / runs;
    const auto r = static_cast<std::size_t>(t) % runs;
    all[t] = bench_instance(n, ls[li], seed, r);
  }
  return summarize(n, ls, runs, seed, std::move(all));
}

BenchReport bench_tables_serial(std::size_t n, std::span<const double> ls,
                                std::size_t runs, std::uint64_t seed) {
  check_args(ls, runs);
  std::vector<BenchRun> all;
  all.reserve(ls.size() * runs);
  for (const double l : ls) {
    for (std::size_t r = 0; r < runs; ++r) {
      all.push_back(bench_instance(n, l, seed, r));
    }
  }
  return summarize(n, ls, runs, seed, std::move(all));
}

}  // namespace clusteredit
