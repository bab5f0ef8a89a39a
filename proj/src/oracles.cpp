#include "clusteredit/oracles.hpp"

#include <algorithm>
#include <iterator>
#include <tuple>

namespace clusteredit {

namespace {

using VertexSet = std::vector<Vertex>;

bool contains(const VertexSet& set, Vertex v) {
  return std::binary_search(set.begin(), set.end(), v);
}

bool is_subset(const VertexSet& small, const VertexSet& big) {
  return small.size() <= big.size() &&
         std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Drops duplicates and sets contained in another set of the family.
void keep_maximal(std::vector<VertexSet>& family) {
  std::sort(family.begin(), family.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() > y.size() : x < y;
  });
  std::vector<VertexSet> kept;
  kept.reserve(family.size());
  for (auto& s : family) {
    const bool dominated = std::any_of(
        kept.begin(), kept.end(), [&](const auto& k) { return is_subset(s, k); });
    if (!dominated) kept.push_back(std::move(s));
  }
  family = std::move(kept);
}

VertexSet with_vertex(VertexSet s, Vertex v) {
  s.insert(std::upper_bound(s.begin(), s.end(), v), v);
  return s;
}

}  // namespace

CliqueSet enumerate_maximal_cliques(std::span<const Read> reads,
                                    const WeightedGraph& g,
                                    std::size_t max_active) {
  validate_reads(reads);
  if (g.vertex_count() != reads.size()) {
    throw InputError("graph has " + std::to_string(g.vertex_count()) +
                     " vertices for " + std::to_string(reads.size()) + " reads");
  }

  struct Endpoint {
    double coord;
    int kind;  // 0 = left, 1 = right
    std::int64_t id;
    Vertex v;
  };
  std::vector<Endpoint> sweep;
  sweep.reserve(2 * reads.size());
  for (std::size_t i = 0; i < reads.size(); ++i) {
    const auto v = static_cast<Vertex>(i);
    sweep.push_back({reads[i].left, 0, reads[i].id, v});
    sweep.push_back({reads[i].right(), 1, reads[i].id, v});
  }
  std::sort(sweep.begin(), sweep.end(), [](const auto& x, const auto& y) {
    return std::tie(x.coord, x.kind, x.id) < std::tie(y.coord, y.kind, y.id);
  });

  CliqueSet out;
  std::vector<std::vector<std::size_t>> emitted_with(reads.size());
  auto emit = [&](const VertexSet& c) {
    for (const std::size_t k : emitted_with[c.front()]) {
      if (is_subset(c, out.cliques[k])) return;
    }
    const std::size_t k = out.cliques.size();
    out.cliques.push_back(c);
    for (const Vertex v : c) emitted_with[v].push_back(k);
  };

  std::vector<VertexSet> active;
  std::vector<VertexSet> next;
  VertexSet adjacent;
  for (const auto& e : sweep) {
    next.clear();
    if (e.kind == 0) {
      adjacent.clear();
      const auto row = g.neighbours(e.v);
      const auto ws = g.neighbour_weights(e.v);
      for (std::size_t k = 0; k < row.size(); ++k) {
        if (is_edge(ws[k])) adjacent.push_back(row[k]);
      }
      bool touched = false;
      for (auto& c : active) {
        VertexSet common;
        std::set_intersection(c.begin(), c.end(), adjacent.begin(),
                              adjacent.end(), std::back_inserter(common));
        if (common.size() == c.size()) {
          next.push_back(with_vertex(std::move(c), e.v));
          touched = true;
          continue;
        }
        if (!common.empty()) {
          next.push_back(with_vertex(std::move(common), e.v));
          touched = true;
        }
        next.push_back(std::move(c));
      }
      if (!touched) next.push_back({e.v});
    } else {
      for (auto& c : active) {
        if (!contains(c, e.v)) {
          next.push_back(std::move(c));
          continue;
        }
        emit(c);
        c.erase(std::lower_bound(c.begin(), c.end(), e.v));
        if (!c.empty()) next.push_back(std::move(c));
      }
    }
    keep_maximal(next);
    if (next.size() > max_active) {
      throw InputError("clique sweep exceeded " + std::to_string(max_active) +
                       " active cliques at read " + std::to_string(e.id));
    }
    std::swap(active, next);
  }
  return out;
}

}  // namespace clusteredit
