#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

using namespace deckrecon;
using testing_support::data_path;
using testing_support::read_lines;

namespace {

Errc code_of(std::string_view line) {
  try {
    parse_graph6(line);
  } catch (const ReconError& e) {
    return e.code();
  }
  return Errc::InvalidArgument;  // no error raised
}

}  // namespace

TEST(Graph6, SingleVertex) {
  EXPECT_EQ(emit_graph6(Graph(1)), "@");
  EXPECT_EQ(parse_graph6("@"), Graph(1));
}

TEST(Graph6, SingleEdge) {
  EXPECT_EQ(parse_graph6("A_"), Graph(2, {{0, 1}}));
  EXPECT_EQ(emit_graph6(Graph(2, {{0, 1}})), "A_");
}

TEST(Graph6, FiveCycle) {
  const Graph c5 = parse_graph6("Dhc");
  EXPECT_EQ(c5, named::cycle(5));
  EXPECT_EQ(c5.edge_count(), 5);
  for (Vertex v = 0; v < 5; ++v) EXPECT_EQ(c5.degree(v), 2);
}

TEST(Graph6, TriangleAndPathDiffer) {
  EXPECT_NE(emit_graph6(named::complete(3)), emit_graph6(named::path(3)));
}

TEST(Graph6, Rejections) {
  EXPECT_EQ(code_of(""), Errc::MalformedEncoding);
  EXPECT_EQ(code_of("?"), Errc::MalformedEncoding);           // order 0
  EXPECT_EQ(code_of(">>graph6<<A_"), Errc::MalformedEncoding);
  EXPECT_EQ(code_of("A"), Errc::MalformedEncoding);           // too short
  EXPECT_EQ(code_of("A__"), Errc::MalformedEncoding);         // too long
  EXPECT_EQ(code_of("A`"), Errc::MalformedEncoding);          // padding bit set
  EXPECT_EQ(code_of("B!"), Errc::MalformedEncoding);          // byte below 63
  EXPECT_EQ(code_of("~?@S"), Errc::OrderTooLarge);
}

TEST(Graph6, RoundTripRandom) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const Graph g = random_graph(n, 0.4, rng);
    const std::string line = emit_graph6(g);
    EXPECT_EQ(parse_graph6(line), g);
    EXPECT_EQ(emit_graph6(parse_graph6(line)), line);
  }
}

// Lines written by an independent encoder (networkx), with their edge lists.
TEST(Graph6, FixtureCorpusMatchesReferenceEncoder) {
  const auto lines = read_lines(data_path("graph6_corpus.g6"));
  const auto edges = read_lines(data_path("graph6_corpus.edges"));
  ASSERT_EQ(lines.size(), 500u);
  ASSERT_EQ(edges.size(), lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::istringstream in(edges[i]);
    int n = 0;
    in >> n;
    Graph expected(n);
    std::string pair;
    while (in >> pair) {
      const auto dash = pair.find('-');
      expected.add_edge(std::stoi(pair.substr(0, dash)), std::stoi(pair.substr(dash + 1)));
    }
    const Graph g = parse_graph6(lines[i]);
    EXPECT_EQ(g, expected) << "line " << i + 1;
    EXPECT_EQ(emit_graph6(g), lines[i]) << "line " << i + 1;
  }
}
