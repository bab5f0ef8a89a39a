#pragma once

// Independent oracles and fixtures shared by the unit tests and the
// acceptance runner. Nothing here calls into the code under test except to
// build inputs.

#include <cstdint>
#include <random>
#include <set>
#include <span>
#include <vector>

#include "clusteredit/clustering.hpp"
#include "clusteredit/graph.hpp"
#include "clusteredit/read.hpp"

namespace testsupport {

using clusteredit::Clustering;
using clusteredit::Read;
using clusteredit::Vertex;
using clusteredit::WeightedGraph;

// P(X >= x) by composite Simpson on the Gaussian density in long double.
double quadrature_sf(double x);

// O(n^2) double loop over every pair, no neighbour lists.
double brute_cost(const WeightedGraph& g, const Clustering& c);

// Every pair scored with pair_weight, no sweep.
WeightedGraph all_pairs_alignment_graph(std::span<const Read> reads,
                                        const clusteredit::AlignParams& p);

// Bron-Kerbosch with pivoting over the w >= 0 edges; each clique sorted, the
// family sorted.
std::vector<std::vector<Vertex>> bron_kerbosch(const WeightedGraph& g);

// Largest m with sorted p_(m) <= rate m / total, by trying every m.
std::size_t exhaustive_bh_count(std::vector<double> pvalues, double rate,
                                std::size_t total);

// Weights with a short binary expansion, so that sums in any order are exact.
// |w| <= 2^12 at a resolution of 2^-16, graph wmax 2^24.
inline constexpr double kDyadicWMax = 16777216.0;
double dyadic(double w);

// 1D point graph over sorted uniform points with rounded f_l weights and,
// when `with_cutoff`, -inf beyond a random distance >= l.
struct DyadicPointGraph {
  std::vector<double> positions;
  WeightedGraph graph;
};
DyadicPointGraph dyadic_point_graph(std::size_t n, std::mt19937_64& rng,
                                    bool with_cutoff);

// Symmetric random weights in [-4, 4] on a 1/16 grid; each pair dropped to
// -inf with probability `missing`.
WeightedGraph random_dyadic_graph(std::size_t n, std::mt19937_64& rng,
                                  double missing = 0.0);

// +1 for listed pairs, -1 for every other pair. Vertices 1..n as given are
// mapped to 0..n-1.
WeightedGraph unit_graph(std::size_t n,
                         std::span<const std::pair<int, int>> one_based_edges);

// The seven-vertex graph of the introductory example, edges
// 12 13 23 24 34 45 56 57 67, as vertices 0..6.
WeightedGraph example_one_graph();

// Two alleles of five reads each, interleaved along the genome; reads 1-5
// short, 6-10 long. Vertex v is read v+1. Weights 5 - distance in the
// (position, 3 x size) plane; every within-allele pair positive, every
// cross pair negative.
WeightedGraph figure_three_graph();

// A chain 1-2-3-4-6-7-8-9 with vertex 5 hanging below 4 and 6. Vertex v is
// point v+1; weights 1.5 - squared distance.
WeightedGraph figure_four_graph();

// Sweep-ready random intervals (sorted, ids 0..n-1) and a graph whose edges
// are a random subset of the overlapping pairs.
struct IntervalInstance {
  std::vector<Read> reads;
  WeightedGraph graph;
};
IntervalInstance random_interval_instance(std::size_t n, std::mt19937_64& rng);

std::vector<std::vector<Vertex>> sorted_family(std::vector<std::vector<Vertex>> f);

// Multiset check: every vertex exactly once.
bool is_permutation_of_n(std::span<const Vertex> order, std::size_t n);

}  // namespace testsupport
