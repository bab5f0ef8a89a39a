#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "clusteredit/graph.hpp"
#include "clusteredit/weight.hpp"

namespace clusteredit {

struct Clustering {
  std::vector<std::vector<Vertex>> clusters;

  std::size_t size() const noexcept { return clusters.size(); }

  friend bool operator==(const Clustering&, const Clustering&) = default;
};

// Cluster index of every vertex. Throws InputError unless `c` is a partition
// of {0, ..., n-1} into non-empty clusters.
std::vector<std::uint32_t> cluster_labels(const Clustering& c, std::size_t n);

// Members sorted, clusters ordered by their smallest member.
Clustering canonical(Clustering c);

namespace detail {

struct ClusterIndex {
  std::vector<std::uint32_t> label;
  std::vector<std::uint32_t> slot;  // position of the vertex in its cluster
};

ClusterIndex index_clusters(const Clustering& c, std::size_t n);

template <WeightOracle G>
double within_cost_from(const G& g, const Clustering& c, Vertex v,
                        const ClusterIndex& idx) {
  const auto& members = c.clusters[idx.label[v]];
  const double wmax = g.wmax();
  double sum = 0.0;
  for (std::size_t k = idx.slot[v] + 1; k < members.size(); ++k) {
    sum += negative_part(g.weight(v, members[k]), wmax);
  }
  return sum;
}

template <WeightOracle G>
double cut_cost_from(const G& g, Vertex v, const ClusterIndex& idx) {
  double sum = 0.0;
  g.for_each_neighbour(v, [&](Vertex u, double w) {
    if (u > v && idx.label[u] != idx.label[v]) sum += positive_part(w);
  });
  return sum;
}

}  // namespace detail

// Sum of w- over pairs inside a cluster plus w+ over pairs split between
// clusters. A -inf pair inside a cluster costs wmax. Each vertex's share is
// independent, so the vertices are summed in parallel.
template <WeightOracle G>
double clustering_cost(const G& g, const Clustering& c) {
  const std::size_t n = g.vertex_count();
  const auto idx = detail::index_clusters(c, n);
  const auto count = static_cast<std::ptrdiff_t>(n);
  double total = 0.0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : total)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto v = static_cast<Vertex>(i);
    total += detail::within_cost_from(g, c, v, idx) +
             detail::cut_cost_from(g, v, idx);
  }
  return total;
}

template <WeightOracle G>
double clustering_cost_serial(const G& g, const Clustering& c) {
  const std::size_t n = g.vertex_count();
  const auto idx = detail::index_clusters(c, n);
  double within = 0.0, cut = 0.0;
  for (Vertex v = 0; v < n; ++v) {
    within += detail::within_cost_from(g, c, v, idx);
    cut += detail::cut_cost_from(g, v, idx);
  }
  return within + cut;
}

}  // namespace clusteredit
