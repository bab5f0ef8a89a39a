#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "clusteredit/clustering.hpp"
#include "clusteredit/error.hpp"
#include "clusteredit/graph.hpp"
#include "clusteredit/read.hpp"

namespace clusteredit {

inline constexpr std::size_t kBruteForceMaxVertices = 12;

struct BruteForceResult {
  Clustering clustering;
  double cost = 0.0;
};

// Exhaustive search over every set partition, as restricted-growth strings in
// lexicographic order; the first minimum found wins. Bell(12) = 4,213,597.
template <WeightOracle G>
BruteForceResult brute_force_cluster_edit(const G& g) {
  const std::size_t n = g.vertex_count();
  if (n > kBruteForceMaxVertices) {
    throw InputError("brute force is limited to " +
                     std::to_string(kBruteForceMaxVertices) + " vertices, got " +
                     std::to_string(n));
  }
  if (n == 0) return {};

  const double wmax = g.wmax();
  std::vector<double> join(n * n), cut(n * n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (a == b) continue;
      const double w = g.weight(a, b);
      join[a * n + b] = negative_part(w, wmax);
      cut[a * n + b] = positive_part(w);
    }
  }

  std::vector<std::uint32_t> rgs(n, 0), best(n, 0);
  double best_cost = std::numeric_limits<double>::infinity();
  // cost[v] is the cost of the pairs among vertices 0..v-1.
  std::vector<double> cost(n + 1, 0.0);

  auto recurse = [&](auto&& self, std::size_t v, std::uint32_t blocks) -> void {
    if (cost[v] >= best_cost) return;
    if (v == n) {
      best_cost = cost[v];
      best = rgs;
      return;
    }
    for (std::uint32_t b = 0; b <= blocks; ++b) {
      rgs[v] = b;
      double delta = 0.0;
      for (std::size_t u = 0; u < v; ++u) {
        delta += rgs[u] == b ? join[u * n + v] : cut[u * n + v];
      }
      cost[v + 1] = cost[v] + delta;
      self(self, v + 1, b == blocks ? blocks + 1 : blocks);
    }
  };
  recurse(recurse, 0, 0);

  Clustering c;
  for (Vertex v = 0; v < n; ++v) {
    if (best[v] == c.clusters.size()) c.clusters.emplace_back();
    c.clusters[best[v]].push_back(v);
  }
  const double exact = clustering_cost_serial(g, c);
  return {std::move(c), exact};
}

struct CliqueSet {
  std::vector<std::vector<Vertex>> cliques;  // each sorted
};

// Sweep over the 2n read endpoints keeping the maximal cliques among reads
// whose span is open. Edges are pairs with w >= 0; vertex i is reads[i]. A
// clique is emitted when one of its members closes, unless it is contained
// in one already emitted. Exact whenever every edge joins overlapping reads.
// Throws InputError when more than `max_active` cliques would be open.
CliqueSet enumerate_maximal_cliques(std::span<const Read> reads,
                                    const WeightedGraph& g,
                                    std::size_t max_active = 1u << 16);

}  // namespace clusteredit
