#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace deckrecon;

TEST(BruteForce, Examples) {
  EXPECT_EQ(brute_force_kr(named::complete(6), 3).value(), 20);
  EXPECT_EQ(brute_force_kr(named::cycle(7), 3).value(), 0);
  EXPECT_EQ(brute_force_kr(named::disjoint_union(named::complete(4), named::empty(3)), 3).value(), 4);
  EXPECT_EQ(brute_force_kr(named::cycle(7), 8).value(), 0);
}

TEST(BruteForce, TractabilityGuard) {
  EXPECT_NO_THROW(brute_force_kr(named::complete(30), 4));
  try {
    brute_force_kr(named::complete(17), 5);
    FAIL();
  } catch (const ReconError& e) {
    EXPECT_EQ(e.code(), Errc::TooLarge);
  }
}

TEST(BruteForce, AgreesWithCounter) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const Graph g = random_graph(n, static_cast<double>(rng() % 101) / 100, rng);
    for (int r = 1; r <= n; ++r) {
      ASSERT_EQ(count_cliques(g, r), brute_force_kr(g, r)) << emit_graph6(g) << " r=" << r;
    }
  }
}

TEST(Enumerate, KnownClassCounts) {
  const std::size_t known[] = {0, 1, 2, 4, 11, 34, 156, 1044};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(enumerate_graphs(n).size(), known[n]) << n;
}

TEST(Enumerate, DistinctCanonicalRepresentatives) {
  const auto graphs = enumerate_graphs(7);
  std::set<CanonicalCertificate> certs;
  for (const Graph& g : graphs) {
    EXPECT_EQ(canonical_form(g), g);
    certs.insert(canonical_certificate(g));
  }
  EXPECT_EQ(certs.size(), graphs.size());
  // Deterministic order.
  const auto again = enumerate_graphs(7);
  EXPECT_EQ(again, graphs);
}

TEST(Enumerate, TooLargeWithoutCorpus) {
  try {
    enumerate_graphs(8);
    FAIL();
  } catch (const ReconError& e) {
    EXPECT_EQ(e.code(), Errc::TooLarge);
  }
}

TEST(Corpus, ReadsGraph6Lines) {
  const auto graphs = read_corpus(testing_support::data_path("order7_sample.g6"));
  ASSERT_EQ(graphs.size(), 4u);
  EXPECT_EQ(graphs[0], named::cycle(7));
  EXPECT_THROW(read_corpus("/nonexistent/corpus.g6"), ReconError);
}

TEST(RandomGraph, Reproducible) {
  std::mt19937_64 a(5), b(5);
  EXPECT_EQ(random_graph(20, 0.3, a), random_graph(20, 0.3, b));
  std::mt19937_64 c(5);
  EXPECT_EQ(random_graph(12, 0.0, c).edge_count(), 0);
  EXPECT_TRUE(random_graph(12, 1.0, c).is_complete());
}
