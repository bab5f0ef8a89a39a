#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <span>
#include <vector>

#include "clusteredit/read.hpp"
#include "clusteredit/weight.hpp"

namespace clusteredit {

// What the solvers need from a graph. `for_each_neighbour(v, f)` calls
// f(u, w(v, u)) for every u != v that may carry a positive weight; pairs it
// skips must have weight <= 0. `weight(a, b)` is defined for every pair.
template <class G>
concept WeightOracle = requires(const G& g, Vertex a, Vertex b) {
  { g.vertex_count() } -> std::convertible_to<std::size_t>;
  { g.weight(a, b) } -> std::convertible_to<double>;
  { g.wmax() } -> std::convertible_to<double>;
  g.for_each_neighbour(a, [](Vertex, double) {});
};

// Sparse weighted graph in CSR form. Each row is sorted by target, so pair
// lookup is a binary search over at most k entries. Absent pairs weigh -inf.
class WeightedGraph {
 public:
  struct Edge {
    Vertex a;
    Vertex b;
    double weight;

    friend bool operator==(const Edge&, const Edge&) = default;
  };

  WeightedGraph() = default;

  // Each unordered pair at most once, no self-pairs, no NaN. -inf entries are
  // dropped, values above wmax are capped.
  static WeightedGraph from_edges(std::size_t n, std::vector<Edge> edges,
                                  double wmax = kDefaultWMax);

  std::size_t vertex_count() const noexcept { return offsets_.size() - 1; }
  std::size_t pair_count() const noexcept { return targets_.size() / 2; }
  double wmax() const noexcept { return wmax_; }

  std::span<const Vertex> neighbours(Vertex v) const noexcept {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::span<const double> neighbour_weights(Vertex v) const noexcept {
    return {weights_.data() + offsets_[v], weights_.data() + offsets_[v + 1]};
  }

  double weight(Vertex a, Vertex b) const noexcept {
    const auto row = neighbours(a);
    const auto it = std::lower_bound(row.begin(), row.end(), b);
    if (it == row.end() || *it != b) return kNegInf;
    return weights_[offsets_[a] + static_cast<std::size_t>(it - row.begin())];
  }

  template <class F>
  void for_each_neighbour(Vertex v, F&& f) const {
    for (std::size_t e = offsets_[v]; e < offsets_[v + 1]; ++e) {
      f(targets_[e], weights_[e]);
    }
  }

  // Every stored pair once, a < b, sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

 private:
  friend WeightedGraph build_alignment_graph(std::span<const Read>,
                                             const AlignParams&);

  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
  std::vector<double> weights_;
  double wmax_ = kDefaultWMax;
};

static_assert(WeightOracle<WeightedGraph>);

// Vertex i is reads[i]. Stores exactly the positionally overlapping pairs.
// Scores the forward window of each read in parallel, then assembles CSR.
WeightedGraph build_alignment_graph(std::span<const Read> reads,
                                    const AlignParams& p);

// Single-threaded sweep, kept as the reference for the parallel builder.
WeightedGraph build_alignment_graph_serial(std::span<const Read> reads,
                                           const AlignParams& p);

// Number of neighbours u of v that come before v and carry an edge (w >= 0).
// In a unit-weight point graph these are the deg(v) points left of v.
template <WeightOracle G>
std::size_t earlier_edge_degree(const G& g, Vertex v) {
  std::size_t d = 0;
  g.for_each_neighbour(v, [&](Vertex u, double w) {
    if (u < v && is_edge(w)) ++d;
  });
  return d;
}

}  // namespace clusteredit
