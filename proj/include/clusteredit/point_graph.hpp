#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "clusteredit/graph.hpp"
#include "clusteredit/weight.hpp"

namespace clusteredit {

// (l^2 - a^2) / (l a): +inf at 0 (capped at wmax), 0 at a = l, -> -inf.
inline double f_l_weight(double a, double l, double wmax = kDefaultWMax) {
  if (a <= 0.0) return wmax;
  return cap_weight((l * l - a * a) / (l * a), wmax);
}

struct PointGraphParams {
  std::size_t n = 0;
  double l = 0.01;
  std::uint64_t seed = 0;
  double wmax = kDefaultWMax;
  // Pairs weighing less than `floor` are not listed as neighbours. Their
  // weight is still computed on demand, so lookups are unaffected. Must be
  // <= 0 so that every positive pair is listed.
  double floor = 0.0;
};

// Complete weighted graph over sorted points on a line with w = f_l(|x_a - x_b|).
// Weights are evaluated on demand rather than stored.
class PointGraph {
 public:
  PointGraph() = default;
  PointGraph(std::vector<double> sorted_positions, double l,
             double wmax = kDefaultWMax, double floor = 0.0);

  std::size_t vertex_count() const noexcept { return positions_.size(); }
  double wmax() const noexcept { return wmax_; }
  double l() const noexcept { return l_; }
  const std::vector<double>& positions() const noexcept { return positions_; }

  double weight(Vertex a, Vertex b) const noexcept {
    return f_l_weight(std::fabs(positions_[a] - positions_[b]), l_, wmax_);
  }

  // Neighbours are the points within `reach` of v, in index order.
  template <class F>
  void for_each_neighbour(Vertex v, F&& f) const {
    const double x = positions_[v];
    auto lo = std::lower_bound(positions_.begin(), positions_.end(), x - reach_);
    auto hi = std::upper_bound(positions_.begin(), positions_.end(), x + reach_);
    for (auto it = lo; it != hi; ++it) {
      const auto u = static_cast<Vertex>(it - positions_.begin());
      if (u != v) f(u, weight(v, u));
    }
  }

  double reach() const noexcept { return reach_; }

  // Every pair stored explicitly; meant for small n.
  WeightedGraph materialize() const;

 private:
  std::vector<double> positions_;
  double l_ = 1.0;
  double wmax_ = kDefaultWMax;
  double reach_ = 1.0;
};

static_assert(WeightOracle<PointGraph>);

// n i.i.d. uniform points on [0, 1], sorted. Deterministic per seed.
PointGraph generate_point_graph(const PointGraphParams& p);

std::vector<double> uniform_positions(std::size_t n, std::uint64_t seed);

}  // namespace clusteredit
