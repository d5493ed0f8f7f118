#pragma once

// Small graph families used by tests, examples and the CLI fixtures.

#include "deckrecon/graph.hpp"

namespace deckrecon::named {

inline Graph empty(int n) { return Graph(n); }

inline Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph cycle(int n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

// K_{1,leaves}; the centre is vertex 0.
inline Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

// Hub 0 joined to a rim cycle 1..rim.
inline Graph wheel(int rim) {
  Graph g(rim + 1);
  for (int v = 1; v <= rim; ++v) {
    g.add_edge(0, v);
    g.add_edge(v, v % rim + 1);
  }
  return g;
}

// Vertices of `a` keep their labels; `b` is shifted by a.order().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (auto [u, v] : a.edges()) g.add_edge(u, v);
  for (auto [u, v] : b.edges()) g.add_edge(u + a.order(), v + a.order());
  return g;
}

inline Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

inline Graph complement(const Graph& g) {
  Graph out(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

}  // namespace deckrecon::named
