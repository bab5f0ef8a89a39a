#pragma once

// Tab-separated text formats, LF line endings. Readers accept an optional
// header line (first field not numeric) and skip blank and `#` lines; malformed
// records raise InputError naming the line.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "clusteredit/bench.hpp"
#include "clusteredit/clustering.hpp"
#include "clusteredit/graph.hpp"
#include "clusteredit/oracles.hpp"
#include "clusteredit/pipeline.hpp"
#include "clusteredit/read.hpp"

namespace clusteredit::io {

// Shortest decimal that parses back to the same double; "-inf" for -inf.
std::string format_double(double x);
double parse_double(std::string_view field, std::size_t line);

// id <TAB> left <TAB> length
std::vector<Read> read_reads(std::istream& in);
void write_reads(std::ostream& out, std::span<const Read> reads);

// Sorts by left, ties by id.
void sort_reads(std::vector<Read>& reads);

// idA <TAB> idB <TAB> weight, one line per stored pair, -inf pairs omitted.
// `ids[v]` names vertex v; empty means vertex indices.
void write_graph_dump(std::ostream& out, const WeightedGraph& g,
                      std::span<const std::int64_t> ids = {});

// Vertex ids must be the integers 0 .. n-1. `vertices` of 0 takes
// n = max id + 1.
WeightedGraph read_graph_dump(std::istream& in, std::size_t vertices = 0,
                              double wmax = kDefaultWMax);

// cluster_id <TAB> comma-separated vertex ids; clusters ordered by their
// first vertex, members ascending.
void write_clustering(std::ostream& out, const Clustering& c,
                      std::span<const std::int64_t> ids = {});
// Returns clusters of the ids as written.
std::vector<std::vector<std::int64_t>> read_clustering(std::istream& in);

// One vertex id per line.
void write_order(std::ostream& out, std::span<const Vertex> order);
std::vector<Vertex> read_order(std::istream& in);

// clique_id <TAB> comma-separated vertex ids.
void write_cliques(std::ostream& out, const CliqueSet& cliques,
                   std::span<const std::int64_t> ids = {});

// position <TAB> kind <TAB> length
std::vector<SimEvent> read_events(std::istream& in);
void write_events(std::ostream& out, std::span<const SimEvent> events);

// One p-value per line.
std::vector<double> read_pvalues(std::istream& in);

// start <TAB> end <TAB> kind <TAB> p_value <TAB> support <TAB> deviation
void write_predictions(std::ostream& out, std::span<const Prediction> preds);
std::vector<Prediction> read_predictions(std::istream& in);

// The three result tables, one line per (l, algorithm).
void write_bench_report(std::ostream& out, const BenchReport& report);
// variant <TAB> n <TAB> l <TAB> cost <TAB> opcount, one line per instance
// and algorithm.
void write_instrumentation(std::ostream& out, const BenchReport& report);

}  // namespace clusteredit::io
