#include "clusteredit/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <string_view>
#include <tuple>

#include "clusteredit/error.hpp"

namespace clusteredit::io {

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    const auto next = line.find(sep, pos);
    fields.push_back(line.substr(pos, next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return fields;
}

std::string_view trim_cr(std::string_view s) {
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

bool numeric_field(std::string_view s) {
  double x;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  return ec == std::errc() && ptr == s.data() + s.size();
}

template <class T>
T parse_int(std::string_view field, std::size_t line) {
  T x{};
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), x);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw InputError("line " + std::to_string(line) + ": expected an integer, got '" +
                     std::string(field) + "'");
  }
  return x;
}

// Calls f(fields, line_number) for every record line.
template <class F>
void for_each_record(std::istream& in, std::size_t min_fields, F&& f) {
  std::string raw;
  std::size_t line = 0;
  bool first_record = true;
  while (std::getline(in, raw)) {
    ++line;
    const auto text = trim_cr(raw);
    if (text.empty() || text.front() == '#') continue;
    auto fields = split(text, '\t');
    if (first_record) {
      first_record = false;
      if (!numeric_field(fields.front())) continue;  // header
    }
    if (fields.size() < min_fields) {
      throw InputError("line " + std::to_string(line) + ": expected " +
                       std::to_string(min_fields) + " tab-separated fields");
    }
    f(fields, line);
  }
}

std::int64_t name_of(Vertex v, std::span<const std::int64_t> ids) {
  return ids.empty() ? static_cast<std::int64_t>(v) : ids[v];
}

void write_vertex_list(std::ostream& out, std::span<const Vertex> members,
                       std::span<const std::int64_t> ids) {
  for (std::size_t k = 0; k < members.size(); ++k) {
    if (k > 0) out << ',';
    out << name_of(members[k], ids);
  }
}

}  // namespace

std::string format_double(double x) {
  if (x == kNegInf) return "-inf";
  if (std::isinf(x)) return "inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

double parse_double(std::string_view field, std::size_t line) {
  if (field == "-inf") return kNegInf;
  double x = 0.0;
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), x);
  if (ec != std::errc() || ptr != field.data() + field.size() || std::isnan(x)) {
    throw InputError("line " + std::to_string(line) + ": expected a number, got '" +
                     std::string(field) + "'");
  }
  return x;
}

std::vector<Read> read_reads(std::istream& in) {
  std::vector<Read> reads;
  for_each_record(in, 3, [&](const auto& f, std::size_t line) {
    reads.push_back({parse_int<std::int64_t>(f[0], line), parse_double(f[1], line),
                     parse_double(f[2], line)});
    if (!(reads.back().length > 0.0)) {
      throw InputError("line " + std::to_string(line) + ": read length must be positive");
    }
  });
  return reads;
}

void write_reads(std::ostream& out, std::span<const Read> reads) {
  out << "id\tleft\tlength\n";
  for (const auto& r : reads) {
    out << r.id << '\t' << format_double(r.left) << '\t' << format_double(r.length)
        << '\n';
  }
}

void sort_reads(std::vector<Read>& reads) {
  std::sort(reads.begin(), reads.end(), [](const Read& a, const Read& b) {
    return a.left != b.left ? a.left < b.left : a.id < b.id;
  });
}

void write_graph_dump(std::ostream& out, const WeightedGraph& g,
                      std::span<const std::int64_t> ids) {
  for (const auto& e : g.edges()) {
    out << name_of(e.a, ids) << '\t' << name_of(e.b, ids) << '\t'
        << format_double(e.weight) << '\n';
  }
}

WeightedGraph read_graph_dump(std::istream& in, std::size_t vertices,
                              double wmax) {
  std::vector<WeightedGraph::Edge> edges;
  std::size_t n = vertices;
  for_each_record(in, 3, [&](const auto& f, std::size_t line) {
    const auto a = parse_int<Vertex>(f[0], line);
    const auto b = parse_int<Vertex>(f[1], line);
    edges.push_back({a, b, parse_double(f[2], line)});
    if (vertices == 0) n = std::max<std::size_t>(n, std::max(a, b) + std::size_t{1});
  });
  return WeightedGraph::from_edges(n, std::move(edges), wmax);
}

void write_clustering(std::ostream& out, const Clustering& c,
                      std::span<const std::int64_t> ids) {
  const auto sorted = canonical(c);
  for (std::size_t k = 0; k < sorted.clusters.size(); ++k) {
    out << k << '\t';
    write_vertex_list(out, sorted.clusters[k], ids);
    out << '\n';
  }
}

std::vector<std::vector<std::int64_t>> read_clustering(std::istream& in) {
  std::vector<std::vector<std::int64_t>> clusters;
  for_each_record(in, 2, [&](const auto& f, std::size_t line) {
    auto& members = clusters.emplace_back();
    for (const auto item : split(f[1], ',')) {
      members.push_back(parse_int<std::int64_t>(item, line));
    }
  });
  return clusters;
}

void write_order(std::ostream& out, std::span<const Vertex> order) {
  for (const Vertex v : order) out << v << '\n';
}

std::vector<Vertex> read_order(std::istream& in) {
  std::vector<Vertex> order;
  for_each_record(in, 1, [&](const auto& f, std::size_t line) {
    order.push_back(parse_int<Vertex>(f[0], line));
  });
  return order;
}

void write_cliques(std::ostream& out, const CliqueSet& cliques,
                   std::span<const std::int64_t> ids) {
  for (std::size_t k = 0; k < cliques.cliques.size(); ++k) {
    out << k << '\t';
    write_vertex_list(out, cliques.cliques[k], ids);
    out << '\n';
  }
}

std::vector<SimEvent> read_events(std::istream& in) {
  std::vector<SimEvent> events;
  for_each_record(in, 3, [&](const auto& f, std::size_t line) {
    events.push_back({parse_double(f[0], line), parse_variant_kind(f[1]),
                      parse_double(f[2], line)});
  });
  return events;
}

void write_events(std::ostream& out, std::span<const SimEvent> events) {
  out << "position\tkind\tlength\n";
  for (const auto& e : events) {
    out << format_double(e.position) << '\t' << to_string(e.kind) << '\t'
        << format_double(e.length) << '\n';
  }
}

std::vector<double> read_pvalues(std::istream& in) {
  std::vector<double> out;
  for_each_record(in, 1, [&](const auto& f, std::size_t line) {
    out.push_back(parse_double(f[0], line));
  });
  return out;
}

void write_predictions(std::ostream& out, std::span<const Prediction> preds) {
  out << "start\tend\tkind\tp_value\tsupport\tdeviation\n";
  for (const auto& p : preds) {
    out << format_double(p.start) << '\t' << format_double(p.end) << '\t'
        << to_string(p.kind) << '\t' << format_double(p.p_value) << '\t'
        << p.support << '\t' << format_double(p.deviation) << '\n';
  }
}

std::vector<Prediction> read_predictions(std::istream& in) {
  std::vector<Prediction> out;
  for_each_record(in, 5, [&](const auto& f, std::size_t line) {
    Prediction p;
    p.start = parse_double(f[0], line);
    p.end = parse_double(f[1], line);
    p.kind = parse_variant_kind(f[2]);
    p.p_value = parse_double(f[3], line);
    p.support = parse_int<std::size_t>(f[4], line);
    if (f.size() > 5) p.deviation = parse_double(f[5], line);
    if (!(p.end > p.start)) {
      throw InputError("line " + std::to_string(line) + ": prediction end must exceed start");
    }
    if (!(p.p_value >= 0.0 && p.p_value <= 1.0)) {
      throw InputError("line " + std::to_string(line) + ": p-value outside [0, 1]");
    }
    out.push_back(p);
  });
  return out;
}

void write_bench_report(std::ostream& out, const BenchReport& report) {
  out << "l\talgorithm\tn\truns\tmean_cost\tmean_opcount\tmean_clusters\t"
         "mean_cluster_size\n";
  for (const auto& row : report.rows) {
    const std::pair<const char*, const AlgoMeans*> algos[] = {
        {"exact", &row.exact}, {"h2", &row.h2}, {"h1", &row.h1}};
    for (const auto& [name, m] : algos) {
      out << format_double(row.l) << '\t' << name << '\t' << report.n << '\t'
          << row.runs << '\t' << format_double(m->cost) << '\t'
          << format_double(m->opcount) << '\t' << format_double(row.mean_clusters)
          << '\t' << format_double(row.mean_cluster_size) << '\n';
    }
  }
}

void write_instrumentation(std::ostream& out, const BenchReport& report) {
  out << "variant\tn\tl\tcost\topcount\n";
  for (const auto& run : report.runs) {
    const std::tuple<const char*, double, std::uint64_t> algos[] = {
        {"exact", run.exact_cost, run.exact_ops},
        {"h2", run.h2_cost, run.h2_ops},
        {"h1", run.h1_cost, run.h1_ops}};
    for (const auto& [name, cost, ops] : algos) {
      out << name << '\t' << report.n << '\t' << format_double(run.l) << '\t'
          << format_double(cost) << '\t' << ops << '\n';
    }
  }
}

}  // namespace clusteredit::io
