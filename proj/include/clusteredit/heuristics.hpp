#pragma once

#include <algorithm>
#include <span>
#include <string_view>

#include "clusteredit/clustering.hpp"
#include "clusteredit/dp.hpp"
#include "clusteredit/graph.hpp"

namespace clusteredit {

enum class HeuristicVariant {
  // Step j explores i <= size(j-1) + 1.
  frontier_plus_one,
  // Also reaches back to the farthest earlier rank sharing a positive edge
  // with rank j.
  frontier_or_positive_edge,
};

std::string_view to_string(HeuristicVariant v) noexcept;

// Frontier-bounded version of the weighted DP. The running sum starts at 0,
// which shifts every row by a constant and leaves the argmins, hence the
// clustering, unchanged; the opt' values are therefore not costs. Entries of
// the previous row beyond its frontier count as wmax.
template <WeightOracle G>
DpRun heuristic_dp(const G& g, std::span<const Vertex> order,
                   HeuristicVariant variant) {
  const std::size_t n = g.vertex_count();
  const auto rank = order_ranks(order, n);
  DpRun result;
  if (n == 0) return result;

  const double wmax = g.wmax();
  DpFrontier frontier(n);
  result.bound.assign(n, 0);
  frontier.start_row(1)[0] = 0.0;
  frontier.finish_row(0);

  for (std::size_t j = 1; j < n; ++j) {
    const Vertex v = order[j];
    std::size_t reach = frontier.size(j - 1) + 1;
    if (variant == HeuristicVariant::frontier_or_positive_edge) {
      g.for_each_neighbour(v, [&](Vertex u, double w) {
        if (w > 0.0 && rank[u] < j) reach = std::max<std::size_t>(reach, j - rank[u]);
      });
    }
    reach = std::min(reach, j);

    const double best_prev = frontier.opt(j - 1);
    const auto cur = frontier.start_row(reach + 1);
    const auto prev = frontier.previous_row();
    cur[0] = best_prev;
    double x = 0.0;
    for (std::size_t i = 1; i <= reach; ++i) {
      x -= floor_weight(g.weight(v, order[j - i]), wmax);
      cur[i] = x + (i - 1 < prev.size() ? prev[i - 1] : wmax);
    }
    result.opcount += reach;
    result.bound[j] = static_cast<std::uint32_t>(reach);
    frontier.finish_row(j);
  }
  result.peak_live_entries = frontier.peak_live_entries();
  result.size = frontier.take_sizes();
  result.clustering = extract_clusters(result.size, order);
  return result;
}

template <WeightOracle G>
DpRun heuristic_dp(const G& g, HeuristicVariant variant) {
  const auto order = identity_order(g.vertex_count());
  return heuristic_dp(g, std::span<const Vertex>(order), variant);
}

// The solve paths never compute the cost of what they return; this is the
// separate O(n k + sum |C|^2) evaluation used for reporting.
template <WeightOracle G>
double heuristic_cost_report(const G& g, const Clustering& c) {
  return clustering_cost(g, c);
}

}  // namespace clusteredit
