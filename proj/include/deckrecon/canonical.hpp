#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "deckrecon/graph.hpp"
#include "deckrecon/graph6.hpp"

namespace deckrecon {

// Isomorphism-class identifier at fixed order: the graph6 line of the
// canonically relabeled graph. Equal certificates <=> isomorphic graphs.
class CanonicalCertificate {
 public:
  CanonicalCertificate() = default;
  explicit CanonicalCertificate(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const noexcept { return bytes_; }

  friend auto operator<=>(const CanonicalCertificate&,
                          const CanonicalCertificate&) = default;

 private:
  std::string bytes_;
};

namespace detail {

using Cells = std::vector<std::vector<Vertex>>;
using Rows = std::array<Bitrow, kMaxOrder>;

inline Bitrow cell_mask(const std::vector<Vertex>& cell) {
  Bitrow m = 0;
  for (Vertex v : cell) m |= bit(v);
  return m;
}

// Equitable refinement: split every cell by the number of neighbours each
// vertex has in a splitter cell, subcells ordered by that number, until no
// splitter changes anything. Depends only on the structure of (g, cells), so
// it commutes with relabeling.
inline void refine(const Graph& g, Cells& cells) {
  const int n = g.order();
  bool changed = true;
  std::vector<std::pair<int, Vertex>> keyed;
  while (changed && static_cast<int>(cells.size()) < n) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      const Bitrow splitter = cell_mask(cells[s]);
      Cells next;
      next.reserve(cells.size() + 4);
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        keyed.clear();
        for (Vertex v : cell) {
          keyed.emplace_back(std::popcount(g.row(v) & splitter), v);
        }
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) {
                           return a.first < b.first;
                         });
        if (keyed.front().first == keyed.back().first) {
          next.push_back(cell);
          continue;
        }
        changed = true;
        std::size_t k = 0;
        while (k < keyed.size()) {
          std::vector<Vertex> part;
          const int key = keyed[k].first;
          while (k < keyed.size() && keyed[k].first == key) {
            part.push_back(keyed[k++].second);
          }
          next.push_back(std::move(part));
        }
      }
      cells = std::move(next);
    }
  }
}

struct Leaf {
  std::vector<Vertex> order;  // position -> vertex
  Rows rows{};                // relabeled adjacency (vertex at position k -> k)
};

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  Leaf run() {
    Cells cells;
    if (n_ > 0) {
      std::vector<Vertex> all(n_);
      std::iota(all.begin(), all.end(), 0);
      cells.push_back(std::move(all));
    }
    std::vector<Vertex> prefix;
    explore(std::move(cells), prefix);
    return std::move(*best_);
  }

 private:
  static constexpr int kNoJump = std::numeric_limits<int>::max();

  Leaf make_leaf(const Cells& cells) const {
    Leaf leaf;
    std::array<int, kMaxOrder> position{};
    for (const auto& cell : cells) {
      position[cell.front()] = static_cast<int>(leaf.order.size());
      leaf.order.push_back(cell.front());
    }
    for (int k = 0; k < n_; ++k) {
      Bitrow row = 0;
      for (Bitrow nb = g_.row(leaf.order[k]); nb; nb &= nb - 1) {
        row |= bit(position[std::countr_zero(nb)]);
      }
      leaf.rows[k] = row;
    }
    return leaf;
  }

  // gamma[v] = vertex at the same position in `to` as v has in `from`.
  std::vector<Vertex> automorphism(const Leaf& from, const Leaf& to) const {
    std::vector<Vertex> gamma(n_);
    for (int k = 0; k < n_; ++k) gamma[from.order[k]] = to.order[k];
    return gamma;
  }

  // Orbit representatives under the automorphisms found so far that fix
  // `prefix` pointwise.
  std::vector<Vertex> orbit_roots(const std::vector<Vertex>& prefix) const {
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes = true;
      for (Vertex p : prefix) {
        if (gamma[p] != p) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      for (Vertex v = 0; v < n_; ++v) {
        const Vertex a = find(v);
        const Vertex b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (Vertex v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  // Returns the depth to unwind to, or kNoJump.
  int explore(Cells cells, std::vector<Vertex>& prefix) {
    refine(g_, cells);
    if (static_cast<int>(cells.size()) == n_) return visit_leaf(cells, prefix);

    // Target: first smallest non-singleton cell.
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1 &&
          (target == cells.size() || cells[c].size() < cells[target].size())) {
        target = c;
      }
    }
    const int depth = static_cast<int>(prefix.size());
    std::vector<Vertex> tried;
    std::vector<Vertex> candidates = cells[target];
    std::sort(candidates.begin(), candidates.end());
    for (Vertex v : candidates) {
      if (!tried.empty()) {
        const auto roots = orbit_roots(prefix);
        bool redundant = false;
        for (Vertex t : tried) {
          if (roots[t] == roots[v]) {
            redundant = true;
            break;
          }
        }
        if (redundant) continue;
      }
      tried.push_back(v);

      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex u : cells[c]) {
          if (u != v) rest.push_back(u);
        }
        child.push_back(std::move(rest));
      }
      prefix.push_back(v);
      const int jump = explore(std::move(child), prefix);
      prefix.pop_back();
      if (jump < depth) return jump;
    }
    return kNoJump;
  }

  int visit_leaf(const Cells& cells, const std::vector<Vertex>& prefix) {
    Leaf leaf = make_leaf(cells);
    if (!first_) {
      first_path_ = prefix;
      first_ = leaf;
      best_ = std::move(leaf);
      return kNoJump;
    }
    if (leaf.rows == first_->rows) {
      automorphisms_.push_back(automorphism(leaf, *first_));
      // The subtree hanging off the first path where this branch diverged is
      // an automorphic image of the first path's subtree.
      int common = 0;
      while (common < static_cast<int>(prefix.size()) &&
             common < static_cast<int>(first_path_.size()) &&
             prefix[common] == first_path_[common]) {
        ++common;
      }
      return common;
    }
    if (leaf.rows == best_->rows) {
      automorphisms_.push_back(automorphism(leaf, *best_));
      return kNoJump;
    }
    if (std::lexicographical_compare(leaf.rows.begin(), leaf.rows.begin() + n_,
                                     best_->rows.begin(),
                                     best_->rows.begin() + n_)) {
      best_ = std::move(leaf);
    }
    return kNoJump;
  }

  const Graph& g_;
  int n_;
  std::optional<Leaf> first_;
  std::optional<Leaf> best_;
  std::vector<Vertex> first_path_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace detail

// canonical_labeling(g)[v] = label of v in the canonical form.
inline std::vector<int> canonical_labeling(const Graph& g) {
  if (g.order() == 0) return {};
  const detail::Leaf leaf = detail::CanonicalSearch(g).run();
  std::vector<int> label(g.order());
  for (int k = 0; k < g.order(); ++k) label[leaf.order[k]] = k;
  return label;
}

inline Graph canonical_form(const Graph& g) {
  return relabel(g, canonical_labeling(g));
}

inline CanonicalCertificate canonical_certificate(const Graph& g) {
  return CanonicalCertificate(emit_graph6(canonical_form(g)));
}

}  // namespace deckrecon
