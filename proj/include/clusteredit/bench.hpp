#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace clusteredit {

// One random point graph solved by the exact DP and both heuristics.
struct BenchRun {
  double l = 0.0;
  std::size_t run = 0;
  double exact_cost = 0.0;
  double h2_cost = 0.0;
  double h1_cost = 0.0;
  std::uint64_t exact_ops = 0;
  std::uint64_t h2_ops = 0;
  std::uint64_t h1_ops = 0;
  std::size_t exact_clusters = 0;

  friend bool operator==(const BenchRun&, const BenchRun&) = default;
};

struct AlgoMeans {
  double cost = 0.0;
  double opcount = 0.0;
};

struct BenchRow {
  double l = 0.0;
  std::size_t runs = 0;
  double mean_clusters = 0.0;      // of the exact solution
  double mean_cluster_size = 0.0;  // n / mean_clusters
  AlgoMeans exact, h2, h1;
};

struct BenchReport {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::vector<BenchRow> rows;  // one per l, in input order
  std::vector<BenchRun> runs;  // every instance, grouped by l
};

BenchRun bench_instance(std::size_t n, double l, std::uint64_t seed,
                        std::size_t run);

// Run r of every l uses the points drawn from seed + r. Instances are solved
// in parallel; the means are accumulated in run order afterwards, so the
// report does not depend on the thread count.
BenchReport bench_tables(std::size_t n, std::span<const double> ls,
                         std::size_t runs, std::uint64_t seed);

BenchReport bench_tables_serial(std::size_t n, std::span<const double> ls,
                                std::size_t runs, std::uint64_t seed);

}  // namespace clusteredit
