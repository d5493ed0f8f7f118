#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "deckrecon/canonical.hpp"
#include "deckrecon/cliques.hpp"
#include "deckrecon/error.hpp"
#include "deckrecon/graph.hpp"
#include "deckrecon/graph6.hpp"

namespace deckrecon {

// Ground truth by scanning every r-subset and testing all its pairs.
// Deliberately naive and independent of the bitset recursion in cliques.hpp.
inline CliqueCount brute_force_kr(const Graph& g, int r) {
  const int n = g.order();
  if (r < 1) fail(Errc::InvalidArgument, "clique size must be >= 1");
  if (n > 16 && r > 4) {
    fail(Errc::TooLarge, "brute force limited to n <= 16 or r <= 4");
  }
  if (r > n) return CliqueCount(0);
  std::vector<int> pick(r);
  for (int i = 0; i < r; ++i) pick[i] = i;
  Wide count = 0;
  while (true) {
    bool clique = true;
    for (int i = 0; i < r && clique; ++i) {
      for (int j = i + 1; j < r && clique; ++j) {
        clique = g.adjacent(pick[i], pick[j]);
      }
    }
    count += clique;
    int i = r - 1;
    while (i >= 0 && pick[i] == n - r + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  return CliqueCount(count);
}

inline constexpr int kMaxEnumeratedOrder = 7;

// One representative per isomorphism class of order-n graphs from the
// classes of order n-1: every class of order n arises from some class of
// order n-1 by adding a vertex. Representatives are canonical forms, sorted
// by certificate.
inline std::vector<Graph> extend_classes(const std::vector<Graph>& smaller) {
  std::map<CanonicalCertificate, Graph> seen;
  for (const Graph& base : smaller) {
    const Bitrow all = base.vertex_mask();
    for (Bitrow nbrs = 0;; nbrs = (nbrs - all) & all) {  // every subset
      Graph g = canonical_form(add_vertex(base, nbrs));
      seen.try_emplace(CanonicalCertificate(emit_graph6(g)), std::move(g));
      if (nbrs == all) break;
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (auto& [cert, g] : seen) out.push_back(std::move(g));
  return out;
}

inline std::vector<Graph> enumerate_graphs(int n) {
  if (n < 1) fail(Errc::InvalidArgument, "order must be >= 1");
  if (n > kMaxEnumeratedOrder) {
    fail(Errc::TooLarge, "built-in enumeration stops at n=" +
                             std::to_string(kMaxEnumeratedOrder) +
                             "; supply a corpus file");
  }
  std::vector<Graph> classes{Graph(1)};
  for (int k = 2; k <= n; ++k) classes = extend_classes(classes);
  return classes;
}

// Corpus: one graph6 line per graph; blank lines skipped.
inline std::vector<Graph> read_corpus(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::MalformedFile, "cannot read " + path.string());
  std::vector<Graph> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const ReconError& e) {
      fail(Errc::MalformedFile, path.string() + ":" + std::to_string(lineno) +
                                    ": " + e.what());
    }
  }
  return out;
}

// G(n, p).
template <class Rng>
Graph random_graph(int n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

template <class Rng>
std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace deckrecon
