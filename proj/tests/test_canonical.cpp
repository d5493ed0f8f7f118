#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace deckrecon;

TEST(Canonical, RelabeledCycleSameCertificate) {
  const Graph a = named::cycle(5);
  const Graph b(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
  EXPECT_EQ(canonical_certificate(a), canonical_certificate(b));
}

TEST(Canonical, PathAndStarDiffer) {
  EXPECT_NE(canonical_certificate(named::path(4)), canonical_certificate(named::star(3)));
}

TEST(Canonical, CertificateIsGraph6OfCanonicalForm) {
  const Graph g = named::petersen();
  const Graph c = canonical_form(g);
  EXPECT_EQ(canonical_certificate(g).bytes(), emit_graph6(c));
  EXPECT_EQ(canonical_form(c), c);
  EXPECT_EQ(canonical_certificate(c), canonical_certificate(g));
}

TEST(Canonical, InvariantUnderRandomRelabeling) {
  std::mt19937_64 rng(3);
  std::vector<Graph> graphs{named::petersen(), named::wheel(8), named::complete(9),
                            named::empty(9), named::cycle(12)};
  for (int i = 0; i < 20; ++i) graphs.push_back(random_graph(4 + i % 14, 0.45, rng));
  for (const Graph& g : graphs) {
    const auto cert = canonical_certificate(g);
    for (int k = 0; k < 100; ++k) {
      EXPECT_EQ(canonical_certificate(testing_support::relabeled(g, rng)), cert);
    }
  }
}

// Regular and strongly regular graphs make refinement useless, so these
// exercise the search tree and its automorphism pruning.
TEST(Canonical, HighlySymmetricGraphs) {
  std::mt19937_64 rng(9);
  const Graph k33 = named::complement(
      named::disjoint_union(named::complete(3), named::complete(3)));
  Graph prism(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
  EXPECT_NE(canonical_certificate(k33), canonical_certificate(prism));
  // Shrikhande graph vs 4x4 rook's graph: same parameters, not isomorphic.
  Graph rook(16);
  Graph shrikhande(16);
  for (int a = 0; a < 16; ++a) {
    for (int b = a + 1; b < 16; ++b) {
      const int ax = a / 4, ay = a % 4, bx = b / 4, by = b % 4;
      if (ax == bx || ay == by) rook.add_edge(a, b);
      const int dx = (bx - ax + 4) % 4, dy = (by - ay + 4) % 4;
      if ((dx == 0 && (dy == 1 || dy == 3)) || (dy == 0 && (dx == 1 || dx == 3)) ||
          (dx == dy && (dx == 1 || dx == 3))) {
        shrikhande.add_edge(a, b);
      }
    }
  }
  EXPECT_EQ(rook.edge_count(), shrikhande.edge_count());
  EXPECT_NE(canonical_certificate(rook), canonical_certificate(shrikhande));
  for (int k = 0; k < 10; ++k) {
    EXPECT_EQ(canonical_certificate(testing_support::relabeled(rook, rng)),
              canonical_certificate(rook));
    EXPECT_EQ(canonical_certificate(testing_support::relabeled(shrikhande, rng)),
              canonical_certificate(shrikhande));
  }
}

// Labeled graphs of order n grouped by certificate must give the known
// class counts; the certificate must separate non-isomorphic graphs.
TEST(Canonical, LabeledClassCounts) {
  const int known[] = {1, 1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) {
    const int bits = n * (n - 1) / 2;
    std::set<CanonicalCertificate> classes;
    for (long mask = 0; mask < (1L << bits); ++mask) {
      Graph g(n);
      int k = 0;
      for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k)
          if (mask >> k & 1) g.add_edge(i, j);
      classes.insert(canonical_certificate(g));
    }
    EXPECT_EQ(static_cast<int>(classes.size()), known[n]) << "n=" << n;
  }
}

TEST(Canonical, LabelingIsPermutation) {
  const auto label = canonical_labeling(named::wheel(7));
  std::vector<int> sorted = label;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < 8; ++i) EXPECT_EQ(sorted[i], i);
}
