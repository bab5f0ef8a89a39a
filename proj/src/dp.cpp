#include "clusteredit/dp.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "clusteredit/error.hpp"

namespace clusteredit {

std::vector<Vertex> identity_order(std::size_t n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  return order;
}

std::vector<std::uint32_t> order_ranks(std::span<const Vertex> order,
                                       std::size_t n) {
  constexpr auto kUnset = std::numeric_limits<std::uint32_t>::max();
  if (order.size() != n) {
    throw InputError("order has " + std::to_string(order.size()) +
                     " entries for " + std::to_string(n) + " vertices");
  }
  std::vector<std::uint32_t> rank(n, kUnset);
  for (std::size_t r = 0; r < n; ++r) {
    const Vertex v = order[r];
    if (v >= n || rank[v] != kUnset) {
      throw InputError("order is not a permutation (vertex " +
                       std::to_string(v) + ")");
    }
    rank[v] = static_cast<std::uint32_t>(r);
  }
  return rank;
}

Clustering extract_clusters(std::span<const std::uint32_t> size,
                            std::span<const Vertex> order) {
  if (size.size() != order.size()) {
    throw InputError("size array and order differ in length");
  }
  for (std::size_t j = 0; j < size.size(); ++j) {
    if (size[j] > j) {
      throw InputError("size(" + std::to_string(j) + ") = " +
                       std::to_string(size[j]) + " exceeds its rank");
    }
  }
  Clustering c;
  // Signed walk so that the cluster holding rank 0 is emitted too.
  for (auto j = static_cast<std::ptrdiff_t>(size.size()) - 1; j >= 0;) {
    const auto first = j - static_cast<std::ptrdiff_t>(size[j]);
    c.clusters.emplace_back(order.begin() + first, order.begin() + j + 1);
    j = first - 1;
  }
  std::reverse(c.clusters.begin(), c.clusters.end());
  return c;
}

ExactDpResult exact_dp_unweighted(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  ExactDpResult result;
  if (n == 0) return result;

  DpFrontier frontier(n);
  result.bound.assign(n, 0);
  frontier.start_row(1)[0] = 0.0;
  frontier.finish_row(0);
  for (std::size_t j = 1; j < n; ++j) {
    const auto deg = static_cast<double>(
        earlier_edge_degree(g, static_cast<Vertex>(j)));
    const double best_prev = frontier.opt(j - 1);
    const auto cur = frontier.start_row(j + 1);
    const auto prev = frontier.previous_row();
    cur[0] = best_prev + deg;
    for (std::size_t i = 1; i <= j; ++i) {
      cur[i] = prev[i - 1] + std::fabs(static_cast<double>(i) - deg);
    }
    result.opcount += j;
    result.bound[j] = static_cast<std::uint32_t>(j);
    frontier.finish_row(j);
  }
  result.cost = frontier.opt(n - 1);
  result.peak_live_entries = frontier.peak_live_entries();
  result.size = frontier.take_sizes();
  const auto order = identity_order(n);
  result.clustering = extract_clusters(result.size, order);
  return result;
}

}  // namespace clusteredit
