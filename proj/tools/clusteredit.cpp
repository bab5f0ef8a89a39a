#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "CLI11.hpp"
#include "clusteredit/bench.hpp"
#include "clusteredit/dp.hpp"
#include "clusteredit/error.hpp"
#include "clusteredit/graph.hpp"
#include "clusteredit/heuristics.hpp"
#include "clusteredit/io.hpp"
#include "clusteredit/oracles.hpp"
#include "clusteredit/ordering.hpp"
#include "clusteredit/pipeline.hpp"

namespace ce = clusteredit;

namespace {

constexpr int kInputFailure = 2;

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ce::InputError("cannot open '" + path + "'");
  return in;
}

// "-" or empty means stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw ce::InputError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

template <class F>
auto with_input(const std::string& path, F&& f) {
  if (path == "-") return f(std::cin);
  auto in = open_in(path);
  return f(in);
}

// A graph plus the external names of its vertices.
struct Loaded {
  std::vector<ce::Read> reads;  // empty for graph dumps
  ce::WeightedGraph graph;
  std::vector<std::int64_t> ids;  // empty: the vertex index is the name

  ce::Vertex vertex_of(std::int64_t name) const {
    if (ids.empty()) {
      if (name < 0 || static_cast<std::size_t>(name) >= graph.vertex_count()) {
        throw ce::InputError("vertex " + std::to_string(name) + " out of range");
      }
      return static_cast<ce::Vertex>(name);
    }
    if (index.empty()) {
      for (std::size_t v = 0; v < ids.size(); ++v) index.emplace(ids[v], static_cast<ce::Vertex>(v));
    }
    const auto it = index.find(name);
    if (it == index.end()) throw ce::InputError("unknown read id " + std::to_string(name));
    return it->second;
  }

  mutable std::unordered_map<std::int64_t, ce::Vertex> index;
};

std::vector<ce::Read> load_reads(const std::string& path) {
  auto reads = with_input(path, [](std::istream& in) { return ce::io::read_reads(in); });
  ce::io::sort_reads(reads);
  ce::validate_reads(reads);
  return reads;
}

Loaded load_from_reads(const std::string& path, const ce::AlignParams& p) {
  Loaded l;
  l.reads = load_reads(path);
  l.graph = ce::build_alignment_graph(l.reads, p);
  for (const auto& r : l.reads) l.ids.push_back(r.id);
  return l;
}

Loaded load(const std::string& reads, const std::string& graph, std::size_t vertices,
            const ce::AlignParams& p) {
  if (reads.empty() == graph.empty()) {
    throw ce::InputError("give exactly one of --reads and --graph");
  }
  if (!reads.empty()) return load_from_reads(reads, p);
  Loaded l;
  l.graph = with_input(graph, [&](std::istream& in) {
    return ce::io::read_graph_dump(in, vertices, p.wmax);
  });
  return l;
}

std::vector<ce::Vertex> load_order(const std::string& path, const Loaded& l) {
  const auto names = with_input(path, [](std::istream& in) { return ce::io::read_order(in); });
  std::vector<ce::Vertex> order;
  order.reserve(names.size());
  for (const auto name : names) order.push_back(l.vertex_of(name));
  ce::order_ranks(order, l.graph.vertex_count());
  return order;
}

void print_stats(const char* algo, std::size_t n, std::size_t clusters, double cost,
                 std::uint64_t opcount) {
  std::fprintf(stderr, "algo\t%s\nn\t%zu\nclusters\t%zu\ncost\t%s\nopcount\t%llu\n", algo,
               n, clusters, ce::io::format_double(cost).c_str(),
               static_cast<unsigned long long>(opcount));
}

struct ClusterRun {
  ce::Clustering clustering;
  double cost;
  std::uint64_t opcount;
};

ClusterRun run_algorithm(const std::string& algo, const Loaded& l,
                         const std::string& order_path, std::optional<std::int64_t> start) {
  const std::size_t n = l.graph.vertex_count();
  if (algo == "adaptive") {
    if (!order_path.empty()) throw ce::InputError("adaptive builds its own order; drop --order");
    const ce::Vertex s = start ? l.vertex_of(*start) : 0;
    auto r = ce::adaptive_cluster_edit(l.graph, s);
    const double cost = ce::clustering_cost(l.graph, r.clustering);
    return {std::move(r.clustering), cost, r.opcount};
  }
  if (start) throw ce::InputError("--start applies to the adaptive algorithm only");
  const auto order = order_path.empty() ? ce::identity_order(n) : load_order(order_path, l);
  const std::span<const ce::Vertex> o(order);
  if (algo == "exact") {
    auto r = ce::exact_dp_weighted(l.graph, o);
    return {std::move(r.clustering), r.cost, r.opcount};
  }
  const auto variant = algo == "h1" ? ce::HeuristicVariant::frontier_plus_one
                                    : ce::HeuristicVariant::frontier_or_positive_edge;
  auto r = ce::heuristic_dp(l.graph, o, variant);
  const double cost = ce::heuristic_cost_report(l.graph, r.clustering);
  return {std::move(r.clustering), cost, r.opcount};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cluster editing for point graphs and paired-end read alignments"};
  app.require_subcommand(1);
  app.fallthrough();

  ce::AlignParams params;
  std::string sign = "corrected";
  app.add_option("--threshold", params.threshold, "tail-probability threshold T")
      ->capture_default_str();
  app.add_option("--mu", params.mu, "mean insert size")->capture_default_str();
  app.add_option("--sigma", params.sigma, "insert size standard deviation")
      ->capture_default_str();
  app.add_option("--weight-sign", sign, "weight sign convention")
      ->check(CLI::IsMember({"corrected", "paper"}))
      ->capture_default_str();
  app.add_option("--wmax", params.wmax, "finite stand-in for +inf weights")
      ->capture_default_str();

  std::string reads_path, graph_path, out_path = "-", order_path;
  std::size_t vertices = 0;
  auto add_graph_input = [&](CLI::App* sub) {
    sub->add_option("--reads", reads_path, "reads TSV (id, left, length)");
    sub->add_option("--graph", graph_path, "graph dump TSV with vertex ids 0..n-1");
    sub->add_option("--vertices", vertices, "vertex count for --graph (default max id + 1)");
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("-o,--out", out_path, "output file, - for stdout")->capture_default_str();
  };

  auto* build = app.add_subcommand("build-graph", "reads TSV to graph dump");
  build->add_option("--reads", reads_path, "reads TSV")->required();
  add_out(build);

  std::string algo = "adaptive";
  std::optional<std::int64_t> start;
  auto* cluster = app.add_subcommand("cluster", "cluster a graph; summary on stderr");
  add_graph_input(cluster);
  cluster->add_option("--algo", algo)
      ->check(CLI::IsMember({"exact", "h1", "h2", "adaptive"}))
      ->capture_default_str();
  cluster->add_option("--order", order_path, "vertex order, one id per line");
  cluster->add_option("--start", start, "start vertex for adaptive (default: leftmost)");
  add_out(cluster);

  std::size_t lookahead = 1;
  auto* order = app.add_subcommand("order", "greedy h-lookahead vertex order");
  add_graph_input(order);
  order->add_option("--start", start, "first vertex (default: leftmost)");
  order->add_option("--lookahead", lookahead, "h")->capture_default_str()->check(CLI::PositiveNumber);
  add_out(order);

  std::size_t max_active = 1u << 16;
  auto* cliques = app.add_subcommand("cliques", "maximal cliques by endpoint sweep");
  cliques->add_option("--reads", reads_path, "reads TSV")->required();
  cliques->add_option("--max-active", max_active, "abort beyond this many open cliques")
      ->capture_default_str();
  add_out(cliques);

  std::size_t bench_n = 10000, runs = 100;
  std::vector<double> ls{0.1, 0.01, 0.001};
  std::uint64_t seed = 1;
  std::string instrumentation;
  bool serial = false;
  auto* bench = app.add_subcommand("bench", "exact DP vs both heuristics on random point graphs");
  bench->add_option("--n", bench_n)->capture_default_str();
  bench->add_option("--l", ls, "threshold distances")->capture_default_str()->expected(1, -1);
  bench->add_option("--runs", runs)->capture_default_str()->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "run r uses seed + r")->capture_default_str();
  bench->add_option("--instrumentation", instrumentation, "per-run TSV (variant n l cost opcount)");
  bench->add_flag("--serial", serial, "solve instances on one thread");
  add_out(bench);

  double genome_length = 1e6;
  std::size_t sim_n = 0;
  std::string events_path, truth_path;
  bool force_span = false;
  auto* simulate = app.add_subcommand("simulate", "synthetic reads around insertions and deletions");
  simulate->add_option("--genome-length", genome_length)->capture_default_str();
  simulate->add_option("--events", events_path, "events TSV (position, kind, length)");
  simulate->add_option("--n", sim_n, "number of reads")->required();
  simulate->add_option("--seed", seed)->capture_default_str();
  simulate->add_flag("--force-span", force_span, "every read spans an event");
  simulate->add_option("--truth", truth_path, "per-read TSV (id, true length, event index or -1)");
  add_out(simulate);

  double fdr = 0.1;
  std::string pvalues = "placeholder", clusters_path;
  std::size_t min_support = 1;
  auto* predict = app.add_subcommand("predict", "clusters to FDR-filtered predictions");
  predict->add_option("--reads", reads_path, "reads TSV")->required();
  predict->add_option("--clusters", clusters_path, "clustering TSV of read ids (default: run --algo)");
  predict->add_option("--algo", algo)
      ->check(CLI::IsMember({"exact", "h1", "h2", "adaptive"}))
      ->capture_default_str();
  predict->add_option("--fdr", fdr)->capture_default_str();
  predict->add_option("--pvalues", pvalues,
                      "file with one p-value per kept cluster, or 'placeholder'")
      ->capture_default_str();
  predict->add_option("--min-support", min_support, "drop smaller clusters before testing")
      ->capture_default_str();
  add_out(predict);

  std::string predictions_path = "-";
  auto* post = app.add_subcommand("postprocess-overlaps", "drop predictions overlapping stronger ones");
  post->add_option("--predictions", predictions_path, "predictions TSV, - for stdin")
      ->capture_default_str();
  add_out(post);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputFailure;
  }

  try {
    params.sign = sign == "paper" ? ce::SignConvention::paper : ce::SignConvention::corrected;
    params.validate();

    if (*build) {
      const auto l = load_from_reads(reads_path, params);
      Output out(out_path);
      ce::io::write_graph_dump(out.stream(), l.graph, l.ids);
    } else if (*cluster) {
      const auto l = load(reads_path, graph_path, vertices, params);
      const auto r = run_algorithm(algo, l, order_path, start);
      Output out(out_path);
      ce::io::write_clustering(out.stream(), r.clustering, l.ids);
      print_stats(algo.c_str(), l.graph.vertex_count(), r.clustering.size(), r.cost, r.opcount);
    } else if (*order) {
      const auto l = load(reads_path, graph_path, vertices, params);
      std::vector<std::int64_t> named;
      if (l.graph.vertex_count() > 0) {
        const ce::Vertex s = start ? l.vertex_of(*start) : 0;
        for (const auto v : ce::lookahead_order(l.graph, lookahead, s)) {
          named.push_back(l.ids.empty() ? v : l.ids[v]);
        }
      }
      Output out(out_path);
      for (const auto v : named) out.stream() << v << '\n';
    } else if (*cliques) {
      const auto l = load_from_reads(reads_path, params);
      const auto c = ce::enumerate_maximal_cliques(l.reads, l.graph, max_active);
      Output out(out_path);
      ce::io::write_cliques(out.stream(), c, l.ids);
    } else if (*bench) {
      if (bench_n == 0) throw ce::InputError("--n must be positive");
      const auto report = serial ? ce::bench_tables_serial(bench_n, ls, runs, seed)
                                 : ce::bench_tables(bench_n, ls, runs, seed);
      Output out(out_path);
      ce::io::write_bench_report(out.stream(), report);
      if (!instrumentation.empty()) {
        Output inst(instrumentation);
        ce::io::write_instrumentation(inst.stream(), report);
      }
    } else if (*simulate) {
      std::vector<ce::SimEvent> events;
      if (!events_path.empty()) {
        events = with_input(events_path, [](std::istream& in) { return ce::io::read_events(in); });
      }
      const auto sim = ce::simulate_reads({genome_length, sim_n, seed, force_span}, events, params);
      Output out(out_path);
      ce::io::write_reads(out.stream(), sim.reads);
      if (!truth_path.empty()) {
        Output truth(truth_path);
        truth.stream() << "id\ttrue_length\tevent\n";
        for (std::size_t i = 0; i < sim.reads.size(); ++i) {
          truth.stream() << sim.reads[i].id << '\t' << ce::io::format_double(sim.true_length[i])
                         << '\t' << sim.spanned[i] << '\n';
        }
      }
    } else if (*predict) {
      const auto l = load_from_reads(reads_path, params);
      ce::Clustering clustering;
      if (clusters_path.empty()) {
        clustering = run_algorithm(algo, l, "", std::nullopt).clustering;
      } else {
        const auto named = with_input(clusters_path,
                                      [](std::istream& in) { return ce::io::read_clustering(in); });
        for (const auto& c : named) {
          auto& members = clustering.clusters.emplace_back();
          for (const auto id : c) members.push_back(l.vertex_of(id));
        }
        ce::cluster_labels(clustering, l.graph.vertex_count());
      }
      clustering = ce::canonical(std::move(clustering));
      std::vector<ce::PredictionDraft> drafts;
      for (const auto& c : clustering.clusters) {
        if (c.size() >= min_support) drafts.push_back(ce::summarize_cluster(c, l.reads, params));
      }
      const bool placeholder = pvalues == "placeholder";
      std::vector<double> external;
      if (!placeholder) {
        external = with_input(pvalues, [](std::istream& in) { return ce::io::read_pvalues(in); });
      }
      const auto preds = ce::attach_pvalues(
          drafts, placeholder ? ce::PValueMode::placeholder : ce::PValueMode::external, external,
          params);
      const auto kept = ce::fdr_filter(preds, fdr);
      Output out(out_path);
      if (placeholder) out.stream() << "# p-values: placeholder z-test, not a published model\n";
      ce::io::write_predictions(out.stream(), kept);
    } else if (*post) {
      const auto preds = with_input(predictions_path,
                                    [](std::istream& in) { return ce::io::read_predictions(in); });
      Output out(out_path);
      ce::io::write_predictions(out.stream(), ce::remove_overlaps(preds));
    }
  } catch (const ce::InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInputFailure;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
