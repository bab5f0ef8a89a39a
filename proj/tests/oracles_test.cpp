#include <gtest/gtest.h>

#include <random>

#include "clusteredit/dp.hpp"
#include "clusteredit/error.hpp"
#include "clusteredit/heuristics.hpp"
#include "clusteredit/oracles.hpp"
#include "clusteredit/ordering.hpp"
#include "support.hpp"

using namespace clusteredit;
using E = WeightedGraph::Edge;

TEST(BruteForce, ExampleOne) {
  const auto g = testsupport::example_one_graph();
  const auto r = brute_force_cluster_edit(g);
  EXPECT_EQ(r.cost, 2.0);
  EXPECT_EQ(testsupport::brute_cost(g, r.clustering), 2.0);
}

TEST(BruteForce, Trivial) {
  const auto edgeless = WeightedGraph::from_edges(5, {});
  const auto a = brute_force_cluster_edit(edgeless);
  EXPECT_EQ(a.cost, 0.0);
  EXPECT_EQ(a.clustering.size(), 5u);

  std::vector<E> edges;
  for (Vertex x = 0; x < 6; ++x) {
    for (Vertex y = x + 1; y < 6; ++y) edges.push_back({x, y, 1.0 + x + y});
  }
  const auto b = brute_force_cluster_edit(WeightedGraph::from_edges(6, edges));
  EXPECT_EQ(b.cost, 0.0);
  EXPECT_EQ(b.clustering, (Clustering{{{0, 1, 2, 3, 4, 5}}}));
  EXPECT_TRUE(brute_force_cluster_edit(WeightedGraph::from_edges(0, {})).clustering.clusters.empty());
}

TEST(BruteForce, RejectsLargeGraphs) {
  EXPECT_THROW(brute_force_cluster_edit(WeightedGraph::from_edges(13, {})), InputError);
}

TEST(BruteForce, LexicographicTieBreak) {
  // Cost 1 for {0,1,2} (rgs 000), {0,1},{2} (001) and {0},{1,2} (011).
  const auto g = WeightedGraph::from_edges(3, {E{0, 1, 1}, E{1, 2, 1}, E{0, 2, -1}});
  EXPECT_EQ(brute_force_cluster_edit(g).clustering, (Clustering{{{0, 1, 2}}}));
  // Without the all-in-one option, 001 beats 011.
  const auto h = WeightedGraph::from_edges(3, {E{0, 1, 1}, E{1, 2, 1}, E{0, 2, -3}});
  EXPECT_EQ(brute_force_cluster_edit(h).clustering, (Clustering{{{0, 1}, {2}}}));
}

TEST(BruteForce, MatchesExhaustiveScoring) {
  // Scores every restricted-growth string independently.
  std::mt19937_64 rng(19);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 7;
    const auto g = testsupport::random_dyadic_graph(n, rng, 0.3);
    std::vector<std::uint32_t> rgs(n, 0);
    double best = std::numeric_limits<double>::infinity();
    auto walk = [&](auto&& self, std::size_t v, std::uint32_t blocks) -> void {
      if (v == n) {
        Clustering c;
        c.clusters.resize(blocks);
        for (Vertex u = 0; u < n; ++u) c.clusters[rgs[u]].push_back(u);
        best = std::min(best, testsupport::brute_cost(g, c));
        return;
      }
      for (std::uint32_t b = 0; b <= blocks; ++b) {
        rgs[v] = b;
        self(self, v + 1, b == blocks ? blocks + 1 : blocks);
      }
    };
    walk(walk, 0, 0);
    EXPECT_EQ(brute_force_cluster_edit(g).cost, best);
  }
}

TEST(BruteForce, LowerBoundsEveryModule) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 9;
    const auto g = testsupport::random_dyadic_graph(n, rng, 0.3);
    const double best = brute_force_cluster_edit(g).cost;
    auto order = identity_order(n);
    std::shuffle(order.begin(), order.end(), rng);
    const std::span<const Vertex> o(order);
    EXPECT_GE(exact_dp_weighted(g, o).cost, best);
    EXPECT_GE(clustering_cost(g, heuristic_dp(g, o, HeuristicVariant::frontier_plus_one).clustering), best);
    EXPECT_GE(clustering_cost(g, heuristic_dp(g, o, HeuristicVariant::frontier_or_positive_edge).clustering), best);
    EXPECT_GE(clustering_cost(g, adaptive_cluster_edit(g, order[0]).clustering), best);
  }
}

TEST(BruteForce, EqualsDpOnPointGraphs) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 2 + rng() % 8;
    const auto pg = testsupport::dyadic_point_graph(n, rng, t % 3 == 0);
    EXPECT_EQ(exact_dp_weighted(pg.graph).cost, brute_force_cluster_edit(pg.graph).cost);
  }
}

namespace {

std::vector<Read> reads_from(std::initializer_list<std::pair<double, double>> spans) {
  std::vector<Read> out;
  std::int64_t id = 0;
  for (const auto& [left, length] : spans) out.push_back({id++, left, length});
  return out;
}

}  // namespace

TEST(Cliques, Examples) {
  const auto one = reads_from({{0, 100}});
  EXPECT_EQ(enumerate_maximal_cliques(one, WeightedGraph::from_edges(1, {})).cliques,
            (std::vector<std::vector<Vertex>>{{0}}));

  const auto two = reads_from({{0, 100}, {10, 100}});
  EXPECT_EQ(enumerate_maximal_cliques(two, WeightedGraph::from_edges(2, {E{0, 1, 1.0}})).cliques,
            (std::vector<std::vector<Vertex>>{{0, 1}}));

  const auto chain = reads_from({{0, 100}, {50, 100}, {120, 100}});
  const auto g = WeightedGraph::from_edges(3, {E{0, 1, 1.0}, E{1, 2, 1.0}});
  EXPECT_EQ(testsupport::sorted_family(enumerate_maximal_cliques(chain, g).cliques),
            (std::vector<std::vector<Vertex>>{{0, 1}, {1, 2}}));
}

TEST(Cliques, NegativeOverlapsAreNotEdges) {
  const auto reads = reads_from({{0, 100}, {10, 100}, {20, 100}});
  const auto g = WeightedGraph::from_edges(3, {E{0, 1, 1.0}, E{1, 2, 1.0}, E{0, 2, -0.5}});
  EXPECT_EQ(testsupport::sorted_family(enumerate_maximal_cliques(reads, g).cliques),
            (std::vector<std::vector<Vertex>>{{0, 1}, {1, 2}}));
}

TEST(Cliques, RejectsBadInput) {
  const auto unsorted = reads_from({{50, 100}, {0, 100}});
  EXPECT_THROW(enumerate_maximal_cliques(unsorted, WeightedGraph::from_edges(2, {})), InputError);
  const auto ok = reads_from({{0, 100}, {50, 100}});
  EXPECT_THROW(enumerate_maximal_cliques(ok, WeightedGraph::from_edges(3, {})), InputError);
}

TEST(Cliques, ActiveCapAborts) {
  // Many reads open at once with a sparse edge set: the open cliques
  // multiply.
  std::vector<Read> reads;
  std::vector<E> edges;
  const std::size_t n = 20;
  for (std::size_t i = 0; i < n; ++i) reads.push_back({static_cast<std::int64_t>(i), double(i), 1000.0});
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if ((a / 2) != (b / 2)) edges.push_back({a, b, 1.0});
    }
  }
  const auto g = WeightedGraph::from_edges(n, edges);
  // 10 disjoint non-edges: 2^10 maximal cliques.
  EXPECT_THROW(enumerate_maximal_cliques(reads, g, 500), InputError);
  EXPECT_EQ(enumerate_maximal_cliques(reads, g, 1u << 11).cliques.size(), 1024u);
}

TEST(Cliques, MatchBronKerbosch) {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng() % 15;
    const auto inst = testsupport::random_interval_instance(n, rng);
    const auto got = enumerate_maximal_cliques(inst.reads, inst.graph);
    EXPECT_EQ(testsupport::sorted_family(got.cliques),
              testsupport::bron_kerbosch(inst.graph));
    // No output clique contains another.
    for (std::size_t a = 0; a < got.cliques.size(); ++a) {
      for (std::size_t b = 0; b < got.cliques.size(); ++b) {
        if (a == b) continue;
        EXPECT_FALSE(std::includes(got.cliques[b].begin(), got.cliques[b].end(),
                                   got.cliques[a].begin(), got.cliques[a].end()));
      }
    }
  }
}
