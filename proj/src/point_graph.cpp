#include "clusteredit/point_graph.hpp"

#include <limits>
#include <random>
#include <string>

#include "clusteredit/error.hpp"

namespace clusteredit {

PointGraph::PointGraph(std::vector<double> sorted_positions, double l,
                       double wmax, double floor)
    : positions_(std::move(sorted_positions)), l_(l), wmax_(wmax) {
  if (!(l > 0.0) || !std::isfinite(l)) {
    throw InputError("threshold distance l must be positive, got " +
                     std::to_string(l));
  }
  if (!(floor <= 0.0)) throw InputError("neighbour floor must be <= 0");
  if (!std::is_sorted(positions_.begin(), positions_.end())) {
    throw InputError("point positions must be sorted");
  }
  // f_l(a) = floor  <=>  a^2 + floor l a - l^2 = 0.
  if (std::isinf(floor)) {
    reach_ = std::numeric_limits<double>::infinity();
  } else {
    reach_ = 0.5 * (-floor * l + std::sqrt(floor * floor * l * l + 4.0 * l * l));
  }
}

WeightedGraph PointGraph::materialize() const {
  std::vector<WeightedGraph::Edge> edges;
  const auto n = static_cast<Vertex>(vertex_count());
  edges.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b, weight(a, b)});
  }
  return WeightedGraph::from_edges(n, std::move(edges), wmax_);
}

std::vector<double> uniform_positions(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> xs(n);
  for (auto& x : xs) x = unit(rng);
  std::sort(xs.begin(), xs.end());
  return xs;
}

PointGraph generate_point_graph(const PointGraphParams& p) {
  return PointGraph(uniform_positions(p.n, p.seed), p.l, p.wmax, p.floor);
}

}  // namespace clusteredit
