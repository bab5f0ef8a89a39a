#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "clusteredit/point_graph.hpp"

namespace testsupport {

using clusteredit::kNegInf;

namespace {

long double density(long double t) {
  constexpr long double kInvSqrt2Pi = 0.398942280401432677939946059934381868L;
  return kInvSqrt2Pi * std::exp(-0.5L * t * t);
}

// Integral of the density over [a, b] with an even number of panels of width
// at most 1e-3.
long double simpson(long double a, long double b) {
  if (b <= a) return 0.0L;
  auto panels = static_cast<long>(std::ceil((b - a) / 1e-3L));
  if (panels % 2) ++panels;
  const long double h = (b - a) / panels;
  long double sum = density(a) + density(b);
  for (long k = 1; k < panels; ++k) {
    sum += (k % 2 ? 4.0L : 2.0L) * density(a + k * h);
  }
  return sum * h / 3.0L;
}

}  // namespace

double quadrature_sf(double x) {
  // Mass beyond 40 is below 1e-300.
  if (x >= 0.0) return static_cast<double>(simpson(x, 40.0L));
  return static_cast<double>(0.5L + simpson(x, 0.0L));
}

double brute_cost(const WeightedGraph& g, const Clustering& c) {
  const std::size_t n = g.vertex_count();
  std::vector<int> label(n, -1);
  for (std::size_t k = 0; k < c.clusters.size(); ++k) {
    for (const Vertex v : c.clusters[k]) label[v] = static_cast<int>(k);
  }
  double total = 0.0;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      const double w = g.weight(a, b);
      if (label[a] == label[b]) {
        if (w < 0) total += std::isinf(w) ? g.wmax() : -w;
      } else if (w > 0) {
        total += w;
      }
    }
  }
  return total;
}

WeightedGraph all_pairs_alignment_graph(std::span<const Read> reads,
                                        const clusteredit::AlignParams& p) {
  std::vector<WeightedGraph::Edge> edges;
  for (Vertex a = 0; a < reads.size(); ++a) {
    for (Vertex b = a + 1; b < reads.size(); ++b) {
      edges.push_back({a, b, clusteredit::pair_weight(reads[a], reads[b], p)});
    }
  }
  return WeightedGraph::from_edges(reads.size(), std::move(edges), p.wmax);
}

std::vector<std::vector<Vertex>> bron_kerbosch(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::set<Vertex>> adj(n);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (a != b && g.weight(a, b) >= 0) adj[a].insert(b);
    }
  }
  std::vector<std::vector<Vertex>> out;
  auto rec = [&](auto&& self, std::vector<Vertex> r, std::set<Vertex> p,
                 std::set<Vertex> x) -> void {
    if (p.empty() && x.empty()) {
      std::sort(r.begin(), r.end());
      out.push_back(r);
      return;
    }
    Vertex pivot = p.empty() ? *x.begin() : *p.begin();
    std::size_t best = 0;
    for (const auto* s : {&p, &x}) {
      for (const Vertex u : *s) {
        std::size_t c = 0;
        for (const Vertex v : p) c += adj[u].count(v);
        if (c >= best) {
          best = c;
          pivot = u;
        }
      }
    }
    std::vector<Vertex> todo;
    for (const Vertex v : p) {
      if (!adj[pivot].count(v)) todo.push_back(v);
    }
    for (const Vertex v : todo) {
      std::set<Vertex> p2, x2;
      for (const Vertex u : p) {
        if (adj[v].count(u)) p2.insert(u);
      }
      for (const Vertex u : x) {
        if (adj[v].count(u)) x2.insert(u);
      }
      auto r2 = r;
      r2.push_back(v);
      self(self, r2, p2, x2);
      p.erase(v);
      x.insert(v);
    }
  };
  std::set<Vertex> all;
  for (Vertex v = 0; v < n; ++v) all.insert(v);
  rec(rec, {}, all, {});
  return sorted_family(std::move(out));
}

std::size_t exhaustive_bh_count(std::vector<double> pvalues, double rate,
                                std::size_t total) {
  std::sort(pvalues.begin(), pvalues.end());
  std::size_t best = 0;
  for (std::size_t m = 1; m <= pvalues.size(); ++m) {
    if (pvalues[m - 1] <= rate * static_cast<double>(m) / static_cast<double>(total)) {
      best = m;
    }
  }
  return best;
}

double dyadic(double w) {
  if (std::isinf(w) && w < 0) return w;
  constexpr double kScale = 65536.0;
  const double clamped = std::clamp(w, -4096.0, 4096.0);
  return std::round(clamped * kScale) / kScale;
}

DyadicPointGraph dyadic_point_graph(std::size_t n, std::mt19937_64& rng,
                                    bool with_cutoff) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  DyadicPointGraph out;
  out.positions.resize(n);
  for (auto& x : out.positions) x = unit(rng);
  std::sort(out.positions.begin(), out.positions.end());
  const double l = 0.02 + 0.5 * unit(rng);
  const double cutoff = with_cutoff ? l * (1.0 + 2.0 * unit(rng))
                                    : std::numeric_limits<double>::infinity();
  std::vector<WeightedGraph::Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      const double d = out.positions[b] - out.positions[a];
      const double w = d > cutoff ? kNegInf
                                  : dyadic(clusteredit::f_l_weight(d, l, 4096.0));
      edges.push_back({a, b, w});
    }
  }
  out.graph = WeightedGraph::from_edges(n, std::move(edges), kDyadicWMax);
  return out;
}

WeightedGraph random_dyadic_graph(std::size_t n, std::mt19937_64& rng,
                                  double missing) {
  std::uniform_int_distribution<int> grid(-64, 64);
  std::bernoulli_distribution drop(missing);
  std::vector<WeightedGraph::Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (drop(rng)) continue;
      edges.push_back({a, b, grid(rng) / 16.0});
    }
  }
  return WeightedGraph::from_edges(n, std::move(edges), kDyadicWMax);
}

WeightedGraph unit_graph(std::size_t n,
                         std::span<const std::pair<int, int>> one_based_edges) {
  std::set<std::pair<Vertex, Vertex>> on;
  for (const auto& [a, b] : one_based_edges) {
    on.insert({static_cast<Vertex>(std::min(a, b) - 1),
               static_cast<Vertex>(std::max(a, b) - 1)});
  }
  std::vector<WeightedGraph::Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      edges.push_back({a, b, on.count({a, b}) ? 1.0 : -1.0});
    }
  }
  return WeightedGraph::from_edges(n, std::move(edges));
}

WeightedGraph example_one_graph() {
  const std::pair<int, int> e[] = {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4},
                                   {4, 5}, {5, 6}, {5, 7}, {6, 7}};
  return unit_graph(7, e);
}

namespace {

struct Point {
  double x, y;
};

template <class F>
WeightedGraph complete_from_points(std::span<const Point> pts, F&& weight_of) {
  std::vector<WeightedGraph::Edge> edges;
  for (Vertex a = 0; a < pts.size(); ++a) {
    for (Vertex b = a + 1; b < pts.size(); ++b) {
      const double dx = pts[a].x - pts[b].x;
      const double dy = pts[a].y - pts[b].y;
      edges.push_back({a, b, weight_of(dx * dx + dy * dy)});
    }
  }
  return WeightedGraph::from_edges(pts.size(), std::move(edges));
}

}  // namespace

WeightedGraph figure_three_graph() {
  // (position, insert size) read off the figure; size axis stretched by 3.
  const Point raw[] = {{1.1, 0.7}, {2.0, 1.0}, {3.5, 0.5}, {4.2, 0.8},
                       {5.1, 1.1}, {0.6, 3.5}, {1.5, 4.0}, {2.7, 3.7},
                       {3.8, 3.6}, {4.8, 3.7}};
  std::vector<Point> pts;
  for (const auto& p : raw) pts.push_back({p.x, 3.0 * p.y});
  return complete_from_points(pts, [](double d2) { return 5.0 - std::sqrt(d2); });
}

WeightedGraph figure_four_graph() {
  const Point pts[] = {{0.8, 1.8}, {1.6, 1.5}, {2.6, 1.8}, {3.0, 2.0}, {3.2, 1.2},
                       {3.2, 2.4}, {3.8, 2.0}, {4.2, 2.2}, {5.2, 1.6}};
  return complete_from_points(pts, [](double d2) { return 1.5 - d2; });
}

IntervalInstance random_interval_instance(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> pos(0.0, 100.0);
  std::uniform_real_distribution<double> len(5.0, 40.0);
  std::bernoulli_distribution keep(0.75);
  IntervalInstance out;
  for (std::size_t i = 0; i < n; ++i) out.reads.push_back({0, pos(rng), len(rng)});
  std::sort(out.reads.begin(), out.reads.end(),
            [](const Read& a, const Read& b) { return a.left < b.left; });
  for (std::size_t i = 0; i < n; ++i) out.reads[i].id = static_cast<std::int64_t>(i);
  std::vector<WeightedGraph::Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (clusteredit::overlap(out.reads[a], out.reads[b]) <= 0) continue;
      edges.push_back({a, b, keep(rng) ? 1.0 : -1.0});
    }
  }
  out.graph = WeightedGraph::from_edges(n, std::move(edges));
  return out;
}

std::vector<std::vector<Vertex>> sorted_family(std::vector<std::vector<Vertex>> f) {
  for (auto& s : f) std::sort(s.begin(), s.end());
  std::sort(f.begin(), f.end());
  return f;
}

bool is_permutation_of_n(std::span<const Vertex> order, std::size_t n) {
  if (order.size() != n) return false;
  std::vector<Vertex> sorted(order.begin(), order.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n; ++i) {
    if (sorted[i] != i) return false;
  }
  return true;
}

}  // namespace testsupport
