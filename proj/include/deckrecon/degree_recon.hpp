#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "deckrecon/canonical.hpp"
#include "deckrecon/deck.hpp"
#include "deckrecon/error.hpp"

namespace deckrecon {

// Smallest order at which n-1 cards determine the degree sequence.
inline constexpr int kMinReconstructibleOrder = 7;

struct DegreeProfile {
  int n = 0;
  long m = 0;
  std::vector<int> owner_degree;  // aligned with deck.cards()
  int hidden_degree = 0;
  int max_degree = 0;
  int min_degree = 0;
  int ell = 0;             // vertices of degree max_degree, hidden included
  long avg_numerator = 0;  // average degree = avg_numerator / n = 2m / n
  std::vector<int> holes;  // a with min < a < max and no vertex of degree a

  // Full degree multiset, non-increasing.
  std::vector<int> degree_sequence() const {
    std::vector<int> seq = owner_degree;
    seq.push_back(hidden_degree);
    std::sort(seq.begin(), seq.end(), std::greater<>());
    return seq;
  }

  bool has_degree(int d) const {
    if (hidden_degree == d) return true;
    return std::find(owner_degree.begin(), owner_degree.end(), d) !=
           owner_degree.end();
  }

  int count_degree(int d) const {
    return static_cast<int>(std::count(owner_degree.begin(),
                                       owner_degree.end(), d)) +
           (hidden_degree == d ? 1 : 0);
  }

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

inline long owner_degree(const Card& card, long m) {
  const long missing = m - card.graph().edge_count();
  if (missing < 0) {
    fail(Errc::NegativeDegree, "edge count " + std::to_string(m) +
                                   " is below the card's " +
                                   std::to_string(card.graph().edge_count()));
  }
  return missing;
}

// Erdős–Gallai.
inline bool is_graphical(std::vector<int> seq) {
  std::sort(seq.begin(), seq.end(), std::greater<>());
  const long total = std::accumulate(seq.begin(), seq.end(), 0L);
  if (total % 2 != 0) return false;
  if (!seq.empty() && seq.back() < 0) return false;
  const long n = static_cast<long>(seq.size());
  long prefix = 0;
  for (long k = 1; k <= n; ++k) {
    prefix += seq[k - 1];
    long tail = 0;
    for (long i = k; i < n; ++i) tail += std::min<long>(seq[i], k);
    if (prefix > k * (k - 1) + tail) return false;
  }
  return true;
}

namespace detail {

// Can `card` be G - v for a vertex v of degree `owner` when G has degree
// multiset `degrees`? Each card vertex has full degree equal to its card
// degree, or one more when adjacent to v. Writing a_c for card vertices of
// card degree c, b_c for the remaining full-degree multiplicities and x_c for
// the card-degree-c vertices adjacent to v, b_c = a_c - x_c + x_{c-1} forces
// every x_c; the card fits iff they are all in range and sum to `owner`.
inline bool card_fits(const Graph& card, int owner, std::vector<int> degrees) {
  const int n = card.order() + 1;
  auto it = std::find(degrees.begin(), degrees.end(), owner);
  if (it == degrees.end()) return false;
  degrees.erase(it);
  std::vector<long> a(n + 1, 0);
  std::vector<long> b(n + 1, 0);
  for (Vertex v = 0; v < card.order(); ++v) ++a[card.degree(v)];
  for (int d : degrees) {
    if (d < 0 || d > n - 1) return false;
    ++b[d];
  }
  long carried = 0;
  long adjacent = 0;
  for (int c = 0; c <= n - 1; ++c) {
    const long x = a[c] - b[c] + carried;
    if (x < 0 || x > a[c]) return false;
    adjacent += x;
    carried = x;
  }
  return carried == 0 && adjacent == owner;
}

// Whether some graph with the deck's n-1 cards among its own has edge count
// m: try every extension of the card with the fewest neighbourhood choices.
inline bool has_extension(const PartialDeck& deck,
                          const std::vector<int>& owner) {
  const int n = deck.original_order();
  std::size_t pick = 0;
  Wide fewest = -1;
  for (std::size_t i = 0; i < deck.size(); ++i) {
    Wide choices = 1;
    for (int k = 1; k <= owner[i]; ++k) choices = choices * (n - 1 - owner[i] + k) / k;
    if (fewest < 0 || choices < fewest) {
      fewest = choices;
      pick = i;
    }
  }
  const Graph& base = deck[pick].graph();
  std::vector<CanonicalCertificate> wanted;
  for (const Card& c : deck.cards()) wanted.push_back(c.certificate());

  bool found = false;
  const int size = owner[pick];
  // Enumerate size-subsets of the n-1 card vertices (Gosper's hack).
  Bitrow subset = size == 0 ? 0 : low_mask(size);
  const Bitrow limit = bit(n - 1);
  while (!found) {
    const Graph g = add_vertex(base, subset);
    std::vector<CanonicalCertificate> have;
    have.reserve(n);
    for (Vertex v = 0; v < n; ++v) {
      have.push_back(canonical_certificate(delete_vertex(g, v)));
    }
    std::sort(have.begin(), have.end());
    // wanted is sorted (deck order); it must be a sub-multiset of have.
    found = std::includes(have.begin(), have.end(), wanted.begin(),
                          wanted.end());
    if (size == 0) break;
    const Bitrow low = subset & -subset;
    const Bitrow ripple = subset + low;
    subset = (((ripple ^ subset) >> 2) / low) | ripple;
    if (subset >= limit) break;
  }
  return found;
}

}  // namespace detail

// Recovers m, every degree and the hidden vertex's degree from n-1 cards.
// Candidates for m come from 0 <= sum e(C_i) - (n-3) m <= n-1; each must pass
// the range check, Erdős–Gallai and the per-card fit. If more than one
// candidate survives, the survivors are re-checked by searching for an actual
// extension of one card whose deck contains all n-1 given cards.
inline DegreeProfile reconstruct_degrees(const PartialDeck& deck) {
  const int n = deck.original_order();
  if (n < kMinReconstructibleOrder) {
    fail(Errc::UnsupportedOrder,
         "degree sequences are reconstructible from n-1 cards only for n >= " +
             std::to_string(kMinReconstructibleOrder) + " (got n=" +
             std::to_string(n) + ")");
  }
  long card_edges = 0;
  for (const Card& c : deck.cards()) card_edges += c.graph().edge_count();

  const long slack = n - 3;
  const long lo = std::max(0L, (card_edges - (n - 1) + slack - 1) / slack);
  const long hi = card_edges / slack;

  std::vector<DegreeProfile> survivors;
  for (long m = lo; m <= hi; ++m) {
    const long hidden = card_edges - slack * m;
    if (hidden < 0 || hidden > n - 1) continue;
    DegreeProfile p;
    p.n = n;
    p.m = m;
    p.hidden_degree = static_cast<int>(hidden);
    bool ok = true;
    for (const Card& c : deck.cards()) {
      const long d = m - c.graph().edge_count();
      if (d < 0 || d > n - 1) {
        ok = false;
        break;
      }
      p.owner_degree.push_back(static_cast<int>(d));
    }
    if (!ok) continue;
    const std::vector<int> seq = p.degree_sequence();
    if (!is_graphical(seq)) continue;
    for (std::size_t i = 0; i < deck.size() && ok; ++i) {
      ok = detail::card_fits(deck[i].graph(), p.owner_degree[i], seq);
    }
    if (!ok) continue;
    survivors.push_back(std::move(p));
  }

  if (survivors.size() > 1) {
    std::erase_if(survivors, [&](const DegreeProfile& p) {
      return !detail::has_extension(deck, p.owner_degree);
    });
  }
  if (survivors.empty()) {
    fail(Errc::InconsistentDeck, "no edge count is consistent with the cards");
  }
  if (survivors.size() > 1) {
    fail(Errc::AmbiguousDegreeSequence,
         std::to_string(survivors.size()) + " degree sequences survive");
  }

  DegreeProfile p = std::move(survivors.front());
  const std::vector<int> seq = p.degree_sequence();
  p.max_degree = seq.front();
  p.min_degree = seq.back();
  p.ell = static_cast<int>(std::count(seq.begin(), seq.end(), p.max_degree));
  p.avg_numerator = 2 * p.m;
  for (int a = p.min_degree + 1; a < p.max_degree; ++a) {
    if (std::find(seq.begin(), seq.end(), a) == seq.end()) p.holes.push_back(a);
  }
  return p;
}

}  // namespace deckrecon
