#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "deckrecon/error.hpp"

namespace deckrecon {

using Vertex = int;
using Bitrow = std::uint64_t;

inline constexpr int kMaxOrder = 62;

constexpr Bitrow bit(Vertex v) { return Bitrow{1} << v; }
constexpr Bitrow low_mask(int n) { return n >= 64 ? ~Bitrow{0} : bit(n) - 1; }

// Labeled simple undirected graph on at most 62 vertices. Row v holds the
// neighbourhood of v as a bitmask; rows beyond order() are always zero.
class Graph {
 public:
  Graph() = default;

  explicit Graph(int order) : order_(order) {
    if (order < 0 || order > kMaxOrder) {
      fail(Errc::OrderTooLarge, "graph order " + std::to_string(order) +
                                    " outside [0, " +
                                    std::to_string(kMaxOrder) + "]");
    }
  }

  Graph(int order, std::span<const std::pair<Vertex, Vertex>> edges)
      : Graph(order) {
    for (auto [u, v] : edges) add_edge(u, v);
  }

  Graph(int order, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : Graph(order, std::span<const std::pair<Vertex, Vertex>>(edges.begin(),
                                                                 edges.size())) {}

  int order() const noexcept { return order_; }
  Bitrow row(Vertex v) const noexcept { return rows_[v]; }
  Bitrow vertex_mask() const noexcept { return low_mask(order_); }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (rows_[u] >> v) & 1U;
  }

  int degree(Vertex v) const noexcept { return std::popcount(rows_[v]); }

  void add_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    rows_[u] |= bit(v);
    rows_[v] |= bit(u);
  }

  void remove_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    rows_[u] &= ~bit(v);
    rows_[v] &= ~bit(u);
  }

  long edge_count() const noexcept {
    long twice = 0;
    for (int v = 0; v < order_; ++v) twice += std::popcount(rows_[v]);
    return twice / 2;
  }

  std::vector<int> degrees() const {
    std::vector<int> out(order_);
    for (int v = 0; v < order_; ++v) out[v] = degree(v);
    return out;
  }

  int max_degree() const noexcept {
    int best = 0;
    for (int v = 0; v < order_; ++v) best = std::max(best, degree(v));
    return best;
  }

  bool is_complete() const noexcept {
    for (int v = 0; v < order_; ++v) {
      if (rows_[v] != (vertex_mask() & ~bit(v))) return false;
    }
    return true;
  }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (int u = 0; u < order_; ++u) {
      for (int v = u + 1; v < order_; ++v) {
        if (adjacent(u, v)) out.emplace_back(u, v);
      }
    }
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_pair(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= order_ || v >= order_ || u == v) {
      fail(Errc::InvalidArgument, "bad edge (" + std::to_string(u) + ", " +
                                      std::to_string(v) + ") for order " +
                                      std::to_string(order_));
    }
  }

  int order_ = 0;
  std::array<Bitrow, kMaxOrder> rows_{};
};

// Induced subgraph on the vertices of `keep`, relabeled 0..k-1 in increasing
// order of their original labels.
inline Graph induced_subgraph(const Graph& g, Bitrow keep) {
  keep &= g.vertex_mask();
  std::array<int, kMaxOrder> index{};
  int k = 0;
  for (Bitrow rest = keep; rest; rest &= rest - 1) {
    index[std::countr_zero(rest)] = k++;
  }
  Graph out(k);
  for (Bitrow rest = keep; rest; rest &= rest - 1) {
    const Vertex u = std::countr_zero(rest);
    for (Bitrow nb = g.row(u) & keep & ~low_mask(u + 1); nb; nb &= nb - 1) {
      out.add_edge(index[u], index[std::countr_zero(nb)]);
    }
  }
  return out;
}

// The card G - v: remaining vertices keep their relative order.
inline Graph delete_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    fail(Errc::InvalidArgument, "vertex " + std::to_string(v) +
                                    " out of range for order " +
                                    std::to_string(g.order()));
  }
  if (g.order() < 2) fail(Errc::InvalidArgument, "cannot delete from order < 2");
  return induced_subgraph(g, g.vertex_mask() & ~bit(v));
}

// Vertex u of g becomes vertex perm[u] of the result.
inline Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) {
    fail(Errc::InvalidArgument, "permutation size does not match graph order");
  }
  Bitrow seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= g.order() || (seen & bit(p))) {
      fail(Errc::InvalidArgument, "not a permutation");
    }
    seen |= bit(p);
  }
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

// Adds a vertex (label = old order) adjacent to exactly `neighbours`.
inline Graph add_vertex(const Graph& g, Bitrow neighbours) {
  Graph out(g.order() + 1);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  const Vertex fresh = g.order();
  for (Bitrow nb = neighbours & g.vertex_mask(); nb; nb &= nb - 1) {
    out.add_edge(fresh, std::countr_zero(nb));
  }
  return out;
}

}  // namespace deckrecon
