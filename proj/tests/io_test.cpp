#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "clusteredit/error.hpp"
#include "clusteredit/io.hpp"
#include "support.hpp"

using namespace clusteredit;

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(io::format_double(0.1), "0.1");
  EXPECT_EQ(io::format_double(112), "112");
  EXPECT_EQ(io::format_double(kNegInf), "-inf");
  EXPECT_EQ(io::format_double(1e15), "1e+15");
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 10000; ++i) {
    const double x = u(rng) * std::pow(10.0, static_cast<int>(rng() % 40) - 20);
    EXPECT_EQ(io::parse_double(io::format_double(x), 1), x);
  }
  EXPECT_THROW(io::parse_double("abc", 3), InputError);
  EXPECT_THROW(io::parse_double("1.5x", 3), InputError);
  EXPECT_THROW(io::parse_double("nan", 3), InputError);
}

TEST(Reads, RoundTripAndHeader) {
  std::istringstream in("id\tleft\tlength\n3\t100\t112.5\r\n\n1\t5\t90\n");
  const auto reads = io::read_reads(in);
  ASSERT_EQ(reads.size(), 2u);
  EXPECT_EQ(reads[0].id, 3);
  EXPECT_EQ(reads[0].length, 112.5);
  std::ostringstream out;
  io::write_reads(out, reads);
  std::istringstream back(out.str());
  const auto again = io::read_reads(back);
  EXPECT_EQ(again[1].left, 5.0);

  std::istringstream headerless("0\t1\t2\n");
  EXPECT_EQ(io::read_reads(headerless).size(), 1u);
}

TEST(Reads, Malformed) {
  std::istringstream few("0\t1\n");
  EXPECT_THROW(io::read_reads(few), InputError);
  std::istringstream bad_id("x\t1\t2\n0\t1\t2\n0.5\t1\t2\n");
  EXPECT_THROW(io::read_reads(bad_id), InputError);
  std::istringstream neg("0\t1\t-2\n");
  EXPECT_THROW(io::read_reads(neg), InputError);
  try {
    std::istringstream late("0\t1\t2\n1\t1\tzz\n");
    io::read_reads(late);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(GraphDump, RoundTrip) {
  std::mt19937_64 rng(2);
  const auto g = testsupport::random_dyadic_graph(30, rng, 0.4);
  std::ostringstream out;
  io::write_graph_dump(out, g);
  std::istringstream in(out.str());
  EXPECT_EQ(io::read_graph_dump(in, 30, g.wmax()), g);
}

TEST(GraphDump, NamesVerticesByReadId) {
  const auto g = WeightedGraph::from_edges(2, {{0, 1, 0.25}});
  const std::vector<std::int64_t> ids{10, 20};
  std::ostringstream out;
  io::write_graph_dump(out, g, ids);
  EXPECT_EQ(out.str(), "10\t20\t0.25\n");
}

TEST(Clustering, WriteCanonicalAndReadBack) {
  const Clustering c{{{4, 2}, {0, 3}, {1}}};
  std::ostringstream out;
  io::write_clustering(out, c);
  EXPECT_EQ(out.str(), "0\t0,3\n1\t1\n2\t2,4\n");
  std::istringstream in(out.str());
  EXPECT_EQ(io::read_clustering(in),
            (std::vector<std::vector<std::int64_t>>{{0, 3}, {1}, {2, 4}}));
}

TEST(Order, RoundTrip) {
  const std::vector<Vertex> order{3, 0, 2, 1};
  std::ostringstream out;
  io::write_order(out, order);
  std::istringstream in(out.str());
  EXPECT_EQ(io::read_order(in), order);
}

TEST(Events, RoundTripAndKinds) {
  std::istringstream in("position\tkind\tlength\n100\tDEL\t50\n300\tinsertion\t20\n");
  const auto e = io::read_events(in);
  ASSERT_EQ(e.size(), 2u);
  EXPECT_EQ(e[0].kind, VariantKind::deletion);
  EXPECT_EQ(e[1].kind, VariantKind::insertion);
  std::ostringstream out;
  io::write_events(out, e);
  std::istringstream back(out.str());
  EXPECT_EQ(io::read_events(back).size(), 2u);
  std::istringstream bad("1\tinversion\t3\n");
  EXPECT_THROW(io::read_events(bad), InputError);
}

TEST(Predictions, RoundTripAndValidation) {
  const std::vector<Prediction> preds{{10, 20, VariantKind::deletion, 0.01, 4, 55.5},
                                      {30, 45, VariantKind::insertion, 0.2, 2, 12}};
  std::ostringstream out;
  out << "# comment lines are skipped\n";
  io::write_predictions(out, preds);
  std::istringstream in(out.str());
  EXPECT_EQ(io::read_predictions(in), preds);
  std::istringstream bad_p("10\t20\tdeletion\t1.5\t3\n");
  EXPECT_THROW(io::read_predictions(bad_p), InputError);
  std::istringstream bad_span("20\t10\tdeletion\t0.1\t3\n");
  EXPECT_THROW(io::read_predictions(bad_span), InputError);
}

TEST(Bench, ReportColumns) {
  BenchReport r;
  r.n = 10;
  r.rows.push_back({0.1, 2, 3.0, 10.0 / 3.0, {4.0, 45.0}, {4.0, 20.0}, {4.5, 15.0}});
  std::ostringstream out;
  io::write_bench_report(out, r);
  std::istringstream lines(out.str());
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  EXPECT_EQ(header,
            "l\talgorithm\tn\truns\tmean_cost\tmean_opcount\tmean_clusters\tmean_cluster_size");
  EXPECT_EQ(first, "0.1\texact\t10\t2\t4\t45\t3\t3.3333333333333335");
}
