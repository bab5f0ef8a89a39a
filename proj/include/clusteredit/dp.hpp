#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "clusteredit/clustering.hpp"
#include "clusteredit/graph.hpp"
#include "clusteredit/weight.hpp"

namespace clusteredit {

// Dynamic programs over consecutive clusterings of a vertex order.
//
// opt'(j, i) is the best cost of clustering ranks 0..j when the last cluster
// is ranks j-i..j. Only two rows of opt' are alive at a time; `size(j)` keeps
// the argmin of row j, which is all the cluster extraction needs.

struct DpRun {
  Clustering clustering;
  std::vector<std::uint32_t> size;   // argmin of opt'(j, .), smallest on ties
  std::vector<std::uint32_t> bound;  // largest i evaluated at step j
  std::uint64_t opcount = 0;         // opt'(j, i) evaluations with i >= 1
  std::size_t peak_live_entries = 0; // max opt' slots allocated at once
};

struct ExactDpResult : DpRun {
  double cost = 0.0;
};

class DpFrontier {
 public:
  explicit DpFrontier(std::size_t n) : n_(n), opt_(n), size_(n) {}

  // Makes the current row the previous one and opens row j with `len`
  // entries, i = 0 .. len - 1.
  std::span<double> start_row(std::size_t len) {
    std::swap(prev_, cur_);
    if (len > cur_.capacity()) {
      cur_.reserve(std::min(n_, std::max(len, 2 * cur_.capacity())));
    }
    cur_.resize(len);
    peak_ = std::max(peak_, prev_.capacity() + cur_.capacity());
    return cur_;
  }

  std::span<const double> previous_row() const noexcept { return prev_; }

  // Records opt(j) and size(j) from the current row.
  void finish_row(std::size_t j) {
    const auto it = std::min_element(cur_.begin(), cur_.end());
    opt_[j] = *it;
    size_[j] = static_cast<std::uint32_t>(it - cur_.begin());
  }

  double opt(std::size_t j) const noexcept { return opt_[j]; }
  std::uint32_t size(std::size_t j) const noexcept { return size_[j]; }
  std::size_t peak_live_entries() const noexcept { return peak_; }
  std::vector<std::uint32_t> take_sizes() { return std::move(size_); }

 private:
  std::size_t n_;
  std::vector<double> prev_;
  std::vector<double> cur_;
  std::vector<double> opt_;
  std::vector<std::uint32_t> size_;
  std::size_t peak_ = 0;
};

std::vector<Vertex> identity_order(std::size_t n);

// Throws InputError unless `order` is a permutation of 0..n-1.
std::vector<std::uint32_t> order_ranks(std::span<const Vertex> order,
                                       std::size_t n);

// Walks back from the last rank: the cluster ending at rank j is ranks
// j - size(j) .. j. Clusters come out in rank order, members in rank order.
Clustering extract_clusters(std::span<const std::uint32_t> size,
                            std::span<const Vertex> order);

// Unit-weight point graph over points sorted left to right (identity order):
// an edge is w >= 0. Uses the degree form of the recurrence,
// opt'(j, i) = opt'(j-1, i-1) + |i - deg(j)| with deg(j) the number of edges
// from j to earlier points.
ExactDpResult exact_dp_unweighted(const WeightedGraph& g);

// Best clustering whose clusters are contiguous in `order`. The running sum
// starts at sum_k w+(j, k) over earlier ranks, so `cost` is the true
// cluster-editing cost. On a 1D point graph in coordinate order this is the
// global optimum.
template <WeightOracle G>
ExactDpResult exact_dp_weighted(const G& g, std::span<const Vertex> order) {
  const std::size_t n = g.vertex_count();
  const auto rank = order_ranks(order, n);
  ExactDpResult result;
  if (n == 0) return result;

  const double wmax = g.wmax();
  DpFrontier frontier(n);
  result.bound.assign(n, 0);
  frontier.start_row(1)[0] = 0.0;
  frontier.finish_row(0);

  std::vector<double> back(n);
  for (std::size_t j = 1; j < n; ++j) {
    const Vertex v = order[j];
    double x = 0.0;
    g.for_each_neighbour(v, [&](Vertex u, double w) {
      if (rank[u] < j) x += positive_part(w);
    });
    for (std::size_t i = 1; i <= j; ++i) {
      back[i] = floor_weight(g.weight(v, order[j - i]), wmax);
    }
    const double best_prev = frontier.opt(j - 1);
    const auto cur = frontier.start_row(j + 1);
    const auto prev = frontier.previous_row();
    cur[0] = x + best_prev;
    for (std::size_t i = 1; i <= j; ++i) {
      x -= back[i];
      cur[i] = x + prev[i - 1];
    }
    result.opcount += j;
    result.bound[j] = static_cast<std::uint32_t>(j);
    frontier.finish_row(j);
  }
  result.cost = frontier.opt(n - 1);
  result.peak_live_entries = frontier.peak_live_entries();
  result.size = frontier.take_sizes();
  result.clustering = extract_clusters(result.size, order);
  return result;
}

template <WeightOracle G>
ExactDpResult exact_dp_weighted(const G& g) {
  const auto order = identity_order(g.vertex_count());
  return exact_dp_weighted(g, std::span<const Vertex>(order));
}

}  // namespace clusteredit
