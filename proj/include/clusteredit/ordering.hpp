#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clusteredit/clustering.hpp"
#include "clusteredit/dp.hpp"
#include "clusteredit/error.hpp"
#include "clusteredit/graph.hpp"

namespace clusteredit {

// A growing vertex order. `any_vertex` hands out the lowest unassigned vertex
// and resumes its scan where it stopped, so all calls together cost O(n).
class OrderState {
 public:
  explicit OrderState(std::size_t n) : assigned_(n, false) { order_.reserve(n); }

  bool assigned(Vertex v) const noexcept { return assigned_[v]; }
  bool complete() const noexcept { return order_.size() == assigned_.size(); }
  std::size_t placed() const noexcept { return order_.size(); }
  const std::vector<Vertex>& order() const noexcept { return order_; }
  Vertex at(std::size_t rank) const noexcept { return order_[rank]; }

  void assign(Vertex v) {
    assigned_[v] = true;
    order_.push_back(v);
  }

  Vertex any_vertex() {
    while (assigned_[cursor_]) ++cursor_;
    return static_cast<Vertex>(cursor_);
  }

  std::vector<Vertex> take_order() { return std::move(order_); }

 private:
  std::vector<bool> assigned_;
  std::vector<Vertex> order_;
  std::size_t cursor_ = 0;
};

namespace detail {

inline void check_start(std::size_t n, Vertex start) {
  if (start >= n) {
    throw InputError("start vertex " + std::to_string(start) +
                     " out of range for " + std::to_string(n) + " vertices");
  }
}

// Unassigned neighbour of the last placed vertex maximising the summed weight
// to the last `window` placed vertices. -inf summands saturate; ties go to
// the smaller id. Empty when every neighbour is placed.
template <WeightOracle G>
std::optional<Vertex> best_candidate(const G& g, const OrderState& state,
                                     std::size_t window) {
  const std::size_t last = state.placed() - 1;
  window = std::min(window, state.placed());
  std::optional<Vertex> best;
  double best_score = 0.0;
  g.for_each_neighbour(state.at(last), [&](Vertex u, double w_last) {
    if (state.assigned(u)) return;
    double score = w_last;
    for (std::size_t k = 1; k < window; ++k) {
      score += g.weight(u, state.at(last - k));
    }
    if (!best || score > best_score || (score == best_score && u < *best)) {
      best = u;
      best_score = score;
    }
  });
  return best;
}

}  // namespace detail

// Greedy chain: each next vertex is the unassigned neighbour with the largest
// summed weight to the last h placed vertices; a fresh start (lowest
// unassigned vertex) when the previous vertex has none. O(h k n).
template <WeightOracle G>
std::vector<Vertex> lookahead_order(const G& g, std::size_t h, Vertex start) {
  const std::size_t n = g.vertex_count();
  if (h == 0) throw InputError("lookahead h must be at least 1");
  if (n == 0) return {};
  detail::check_start(n, start);
  OrderState state(n);
  state.assign(start);
  while (!state.complete()) {
    const auto next = detail::best_candidate(g, state, h);
    state.assign(next ? *next : state.any_vertex());
  }
  return state.take_order();
}

template <WeightOracle G>
std::vector<Vertex> nearest_neighbor_order(const G& g, Vertex start) {
  return lookahead_order(g, 1, start);
}

struct AdaptiveResult {
  Clustering clustering;
  std::vector<Vertex> order;
  std::vector<std::uint32_t> size;
  std::uint64_t opcount = 0;
  std::size_t peak_live_entries = 0;
};

// Builds the order and runs the frontier DP in lockstep. The lookahead for
// rank j covers the size(j-1) + 1 members of the current last cluster, so a
// vertex that just closed a singleton lets the chain restart from it alone.
// O(n k^2) time, O(n) space.
template <WeightOracle G>
AdaptiveResult adaptive_cluster_edit(const G& g, Vertex start = 0) {
  const std::size_t n = g.vertex_count();
  AdaptiveResult result;
  if (n == 0) return result;
  detail::check_start(n, start);

  const double wmax = g.wmax();
  OrderState state(n);
  DpFrontier frontier(n);
  state.assign(start);
  frontier.start_row(1)[0] = 0.0;
  frontier.finish_row(0);

  for (std::size_t j = 1; j < n; ++j) {
    const std::size_t last_cluster = frontier.size(j - 1) + 1;
    const auto next = detail::best_candidate(g, state, last_cluster);
    const Vertex v = next ? *next : state.any_vertex();
    state.assign(v);

    const double best_prev = frontier.opt(j - 1);
    const std::size_t reach = std::min(last_cluster, j);
    const auto cur = frontier.start_row(reach + 1);
    const auto prev = frontier.previous_row();
    cur[0] = best_prev;
    double x = 0.0;
    for (std::size_t i = 1; i <= reach; ++i) {
      x -= floor_weight(g.weight(v, state.at(j - i)), wmax);
      cur[i] = x + (i - 1 < prev.size() ? prev[i - 1] : wmax);
    }
    result.opcount += reach;
    frontier.finish_row(j);
  }
  result.peak_live_entries = frontier.peak_live_entries();
  result.size = frontier.take_sizes();
  result.order = state.take_order();
  result.clustering = extract_clusters(result.size, result.order);
  return result;
}

}  // namespace clusteredit
