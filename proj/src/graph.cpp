#include "clusteredit/graph.hpp"

#include <cmath>
#include <string>

#include "clusteredit/error.hpp"

namespace clusteredit {

WeightedGraph WeightedGraph::from_edges(std::size_t n, std::vector<Edge> edges,
                                        double wmax) {
  WeightedGraph g;
  g.wmax_ = wmax;
  g.offsets_.assign(n + 1, 0);

  std::erase_if(edges, [](const Edge& e) { return e.weight == kNegInf; });
  for (auto& e : edges) {
    if (e.a >= n || e.b >= n) {
      throw InputError("edge (" + std::to_string(e.a) + "," +
                       std::to_string(e.b) + ") out of range for " +
                       std::to_string(n) + " vertices");
    }
    if (e.a == e.b) throw InputError("self-pair on vertex " + std::to_string(e.a));
    if (std::isnan(e.weight)) throw InputError("NaN edge weight");
    if (e.a > e.b) std::swap(e.a, e.b);
    e.weight = cap_weight(e.weight, wmax);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    return x.a != y.a ? x.a < y.a : x.b < y.b;
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].a == edges[i - 1].a && edges[i].b == edges[i - 1].b) {
      throw InputError("duplicate pair (" + std::to_string(edges[i].a) + "," +
                       std::to_string(edges[i].b) + ")");
    }
  }

  for (const auto& e : edges) {
    ++g.offsets_[e.a + 1];
    ++g.offsets_[e.b + 1];
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.targets_.resize(2 * edges.size());
  g.weights_.resize(2 * edges.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // With edges sorted by (a, b), row v first receives every x < v (as the b
  // side of (x, v)) and then every b > v, so each row comes out sorted.
  for (const auto& e : edges) {
    g.targets_[cursor[e.a]] = e.b;
    g.weights_[cursor[e.a]++] = e.weight;
    g.targets_[cursor[e.b]] = e.a;
    g.weights_[cursor[e.b]++] = e.weight;
  }
  return g;
}

std::vector<WeightedGraph::Edge> WeightedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(pair_count());
  for (Vertex a = 0; a < vertex_count(); ++a) {
    for (std::size_t e = offsets_[a]; e < offsets_[a + 1]; ++e) {
      if (targets_[e] > a) out.push_back({a, targets_[e], weights_[e]});
    }
  }
  return out;
}

WeightedGraph build_alignment_graph_serial(std::span<const Read> reads,
                                           const AlignParams& p) {
  p.validate();
  validate_reads(reads);
  std::vector<WeightedGraph::Edge> edges;
  for (std::size_t i = 0; i < reads.size(); ++i) {
    for (std::size_t j = i + 1;
         j < reads.size() && reads[j].left < reads[i].right(); ++j) {
      if (overlap(reads[i], reads[j]) <= 0.0) continue;
      edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j),
                       detail::pair_weight_unchecked(reads[i], reads[j], p)});
    }
  }
  return WeightedGraph::from_edges(reads.size(), std::move(edges), p.wmax);
}

WeightedGraph build_alignment_graph(std::span<const Read> reads,
                                    const AlignParams& p) {
  p.validate();
  validate_reads(reads);
  const std::size_t n = reads.size();
  const auto count = static_cast<std::ptrdiff_t>(n);

  // Forward window of read i: reads i+1 .. end_i - 1 start before i ends.
  std::vector<std::size_t> forward_begin(n + 1, 0);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const double right = reads[i].right();
    const auto end = std::lower_bound(
        reads.begin() + i + 1, reads.end(), right,
        [](const Read& r, double x) { return r.left < x; });
    forward_begin[i + 1] = static_cast<std::size_t>(end - reads.begin()) - i - 1;
  }
  for (std::size_t i = 0; i < n; ++i) forward_begin[i + 1] += forward_begin[i];

  std::vector<double> forward_weight(forward_begin[n]);
#pragma omp parallel for schedule(dynamic, 1024)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const std::size_t base = forward_begin[i];
    const std::size_t len = forward_begin[i + 1] - base;
    for (std::size_t k = 0; k < len; ++k) {
      const Read& other = reads[i + 1 + k];
      forward_weight[base + k] =
          overlap(reads[i], other) > 0.0
              ? detail::pair_weight_unchecked(reads[i], other, p)
              : kNegInf;
    }
  }

  // A zero-length intersection (same left, touching) can leave -inf entries
  // in a window; they are not neighbours.
  WeightedGraph g;
  g.wmax_ = p.wmax;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t base = forward_begin[i];
    for (std::size_t k = 0; k < forward_begin[i + 1] - base; ++k) {
      if (forward_weight[base + k] == kNegInf) continue;
      ++g.offsets_[i + 1];
      ++g.offsets_[i + 2 + k];
    }
  }
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.targets_.resize(g.offsets_[n]);
  g.weights_.resize(g.offsets_[n]);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Visiting sources in increasing order fills every row sorted: the
  // backward entries (smaller sources) land before the forward window.
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t base = forward_begin[i];
    for (std::size_t k = 0; k < forward_begin[i + 1] - base; ++k) {
      const double w = forward_weight[base + k];
      if (w == kNegInf) continue;
      const std::size_t j = i + 1 + k;
      g.targets_[cursor[j]] = static_cast<Vertex>(i);
      g.weights_[cursor[j]++] = w;
      g.targets_[cursor[i]] = static_cast<Vertex>(j);
      g.weights_[cursor[i]++] = w;
    }
  }
  return g;
}

}  // namespace clusteredit
