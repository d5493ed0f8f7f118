#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "deckrecon/cliques.hpp"
#include "deckrecon/deck.hpp"
#include "deckrecon/degree_recon.hpp"
#include "deckrecon/error.hpp"
#include "deckrecon/graph.hpp"

namespace deckrecon {

// Which argument produced a determined count.
enum class Resolver {
  VertexCount,
  EdgeCount,
  Zero,
  Full,
  Spanning,
  UniversalRebuild,
  UniversalHidden,
  DeltaN2Hidden,
  DeltaN2Rebuild,
  DeltaN2Equation,
  TwoChoices,
  TwoChoicesHidden,
  Duplicates,
  DuplicatesRebuild,
  DuplicatesIdentify,
  RedBlue,
  RedBlueDeferred,
  Hole,
  MaxDegClique,
};

inline constexpr Resolver kAllResolvers[] = {
    Resolver::VertexCount,
    Resolver::EdgeCount,
    Resolver::Zero,
    Resolver::Full,
    Resolver::Spanning,
    Resolver::UniversalRebuild,
    Resolver::UniversalHidden,
    Resolver::DeltaN2Hidden,
    Resolver::DeltaN2Rebuild,
    Resolver::DeltaN2Equation,
    Resolver::TwoChoices,
    Resolver::TwoChoicesHidden,
    Resolver::Duplicates,
    Resolver::DuplicatesRebuild,
    Resolver::DuplicatesIdentify,
    Resolver::RedBlue,
    Resolver::RedBlueDeferred,
    Resolver::Hole,
    Resolver::MaxDegClique,
};

constexpr std::string_view to_string(Resolver r) {
  switch (r) {
    case Resolver::VertexCount: return "vertex_count";
    case Resolver::EdgeCount: return "edge_count";
    case Resolver::Zero: return "zero";
    case Resolver::Full: return "full";
    case Resolver::Spanning: return "spanning";
    case Resolver::UniversalRebuild: return "universal_rebuild";
    case Resolver::UniversalHidden: return "universal_hidden";
    case Resolver::DeltaN2Hidden: return "delta_n2_hidden";
    case Resolver::DeltaN2Rebuild: return "delta_n2_rebuild";
    case Resolver::DeltaN2Equation: return "delta_n2_equation";
    case Resolver::TwoChoices: return "two_choices";
    case Resolver::TwoChoicesHidden: return "two_choices_hidden";
    case Resolver::Duplicates: return "duplicates";
    case Resolver::DuplicatesRebuild: return "duplicates_rebuild";
    case Resolver::DuplicatesIdentify: return "duplicates_identify";
    case Resolver::RedBlue: return "redblue";
    case Resolver::RedBlueDeferred: return "redblue_deferred";
    case Resolver::Hole: return "hole";
    case Resolver::MaxDegClique: return "maxdeg_clique";
  }
  return "unknown";
}

struct Determined {
  CliqueCount count;
  Resolver resolver;
  friend bool operator==(const Determined&, const Determined&) = default;
};

struct TwoCandidates {
  CliqueCount low;
  CliqueCount high;
  friend bool operator==(const TwoCandidates&, const TwoCandidates&) = default;
};

using RowOutcome = std::variant<Determined, TwoCandidates>;

struct ReconstructionOutcome {
  int n = 0;
  int ell = 0;
  std::vector<RowOutcome> rows;  // rows[r - 1], r = 1..n

  const RowOutcome& at(int r) const { return rows.at(r - 1); }
  friend bool operator==(const ReconstructionOutcome&,
                         const ReconstructionOutcome&) = default;
};

// The two values the hidden card leaves open when it belongs to a
// maximum-degree vertex: a = min D + max K_r(C_i), b = max D + min K_r(C_i)
// over the visible maximum-degree cards.
struct CandidatePair {
  Wide a = 0;
  Wide b = 0;
};

struct Blocked {};

// A card vertex known to be seen with its full neighbourhood.
struct Sighting {
  int card_index = 0;
  Vertex card_vertex = 0;
  int true_degree = 0;
  std::vector<Wide> clique_degrees;  // [r] = deg_r on the card, r = 0..n
};

// K_r(G) for the sizes settled so far, indexed by r.
using KnownCounts = std::vector<std::optional<Wide>>;

// A card vertex of card degree t is seen with full degree whenever no vertex
// of G has degree t + 1: it cannot be adjacent to the card's owner.
inline std::vector<Sighting> collect_sightings(const PartialDeck& deck,
                                               const DegreeProfile& profile,
                                               int t) {
  const int n = deck.original_order();
  if (t < 0 || t > n - 1 || profile.has_degree(t + 1)) {
    fail(Errc::InvalidArgument, "card degree " + std::to_string(t) +
                                    " does not identify full-degree vertices");
  }
  std::vector<Sighting> out;
  for (std::size_t i = 0; i < deck.size(); ++i) {
    const Graph& card = deck[i].graph();
    for (Vertex w = 0; w < card.order(); ++w) {
      if (card.degree(w) != t) continue;
      Sighting s;
      s.card_index = static_cast<int>(i);
      s.card_vertex = w;
      s.true_degree = t;
      s.clique_degrees = clique_degree_vector(card, w);
      s.clique_degrees.resize(static_cast<std::size_t>(n) + 1, 0);
      out.push_back(std::move(s));
    }
  }
  return out;
}

// Everything the resolvers read from a partial deck, computed once.
class DeckAnalysis {
 public:
  DeckAnalysis(const PartialDeck& deck, const DegreeProfile& profile)
      : deck_(deck), profile_(profile), n_(deck.original_order()) {
    if (static_cast<int>(profile.owner_degree.size()) !=
            static_cast<int>(deck.size()) ||
        profile.n != n_) {
      fail(Errc::InvalidArgument, "degree profile does not match the deck");
    }
    for (const Card& c : deck.cards()) {
      auto counts = clique_profile(c.graph());
      counts.resize(static_cast<std::size_t>(n_) + 1, 0);
      card_counts_.push_back(std::move(counts));
    }
    const int delta = profile.max_degree;
    if (delta <= n_ - 2) {
      max_sightings_ = collect_sightings(deck, profile, delta);
    }
    sightings_per_card_.assign(deck.size(), 0);
    for (const Sighting& s : max_sightings_) ++sightings_per_card_[s.card_index];
    max_clique_ = true;
    for (std::size_t i = 0; i < deck.size(); ++i) {
      if (profile.owner_degree[i] == delta) {
        max_cards_.push_back(static_cast<int>(i));
        if (sightings_per_card_[i] > 0) max_clique_ = false;
      }
    }
    if (!profile.holes.empty()) {
      hole_sightings_ = collect_sightings(deck, profile, profile.holes.front() - 1);
    }
  }

  const PartialDeck& deck() const noexcept { return deck_; }
  const DegreeProfile& profile() const noexcept { return profile_; }
  int n() const noexcept { return n_; }
  int delta() const noexcept { return profile_.max_degree; }
  int ell() const noexcept { return profile_.ell; }
  bool hidden_is_max() const noexcept {
    return profile_.hidden_degree == profile_.max_degree;
  }

  Wide card_kr(int i, int r) const { return card_counts_[i][r]; }
  Wide card_sum(int r) const {
    Wide total = 0;
    for (const auto& c : card_counts_) total += c[r];
    return total;
  }

  // Sightings at card degree = max degree (empty when max degree is n-1).
  const std::vector<Sighting>& max_sightings() const noexcept {
    return max_sightings_;
  }
  const std::vector<Sighting>& hole_sightings() const noexcept {
    return hole_sightings_;
  }
  int max_sightings_on(int card) const { return sightings_per_card_[card]; }

  // Visible cards owned by maximum-degree vertices, in deck order.
  const std::vector<int>& max_cards() const noexcept { return max_cards_; }

  // No maximum-degree vertex is seen on a visible maximum-degree card. With
  // the hidden vertex of maximum degree this is exactly "the maximum-degree
  // vertices are pairwise adjacent": a non-adjacent pair shows up on the
  // visible card of one of its members.
  bool max_vertices_clique() const noexcept { return max_clique_; }

  // Every maximum-degree vertex has a visible non-neighbour's card.
  bool all_max_sighted() const noexcept {
    if (delta() <= n_ - 3) return true;
    return delta() == n_ - 2 && hidden_is_max() && max_clique_;
  }

  // Distinct values of deg_r over the given sightings, descending.
  static std::vector<Wide> distinct_values(const std::vector<Sighting>& s,
                                           int r) {
    std::vector<Wide> out;
    for (const Sighting& x : s) out.push_back(x.clique_degrees[r]);
    std::sort(out.begin(), out.end(), std::greater<>());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // Visible maximum-degree cards ordered by K_r ascending; ties keep deck
  // (certificate) order.
  std::vector<int> max_cards_by_kr(int r) const {
    std::vector<int> out = max_cards_;
    std::stable_sort(out.begin(), out.end(), [&](int x, int y) {
      return card_kr(x, r) < card_kr(y, r);
    });
    return out;
  }

 private:
  const PartialDeck& deck_;
  const DegreeProfile& profile_;
  int n_;
  std::vector<std::vector<Wide>> card_counts_;
  std::vector<Sighting> max_sightings_;
  std::vector<Sighting> hole_sightings_;
  std::vector<int> sightings_per_card_;
  std::vector<int> max_cards_;
  bool max_clique_ = true;
};

namespace detail {

inline Determined determined(Wide value, Resolver how) {
  if (value < 0) {
    fail(Errc::InternalContradiction,
         std::string(to_string(how)) + " produced a negative count");
  }
  return Determined{CliqueCount(value), how};
}

inline Wide exact_div(Wide num, Wide den, std::string_view what) {
  if (den == 0 || num % den != 0) {
    fail(Errc::InternalContradiction, std::string(what) + ": " +
                                          to_string(num) + " / " +
                                          to_string(den) + " is not exact");
  }
  return num / den;
}

// G = card i plus its owner joined to every card vertex outside `non_nbrs`.
inline Wide rebuild_count(const DeckAnalysis& a, int card, Bitrow non_nbrs,
                          int r) {
  const Graph& c = a.deck()[card].graph();
  const Graph g = add_vertex(c, c.vertex_mask() & ~non_nbrs);
  return count_cliques(g, r).value();
}

inline bool known(const KnownCounts& k, int r) {
  return r >= 0 && r < static_cast<int>(k.size()) && k[r].has_value();
}

}  // namespace detail

inline std::optional<Determined> resolver_zero(int r,
                                               const DegreeProfile& profile) {
  if (r > profile.max_degree + 1) return Determined{CliqueCount(0), Resolver::Zero};
  return std::nullopt;
}

// r = n: G is complete iff every visible card is (any non-edge shows up on
// all but at most two cards).
inline Determined resolver_full(const DeckAnalysis& a) {
  for (const Card& c : a.deck().cards()) {
    if (!c.graph().is_complete()) return {CliqueCount(0), Resolver::Full};
  }
  return {CliqueCount(1), Resolver::Full};
}

// r = n-1: an (n-1)-clique lies on exactly one card, the one of the vertex it
// misses. The hidden card is complete iff it has C(n-1, 2) edges.
inline Determined resolver_spanning(const DeckAnalysis& a) {
  const int n = a.n();
  Wide complete = 0;
  for (const Card& c : a.deck().cards()) complete += c.graph().is_complete();
  const long hidden_edges = a.profile().m - a.profile().hidden_degree;
  if (hidden_edges == binomial(n - 1, 2)) ++complete;
  return {CliqueCount(complete), Resolver::Spanning};
}

// deg_r(v_i) = K_r(G) - K_r(C_i) for the visible cards (deck order); the last
// entry is the hidden vertex, r K_r(G) - sum of the others.
inline std::vector<CliqueCount> kr_degree_sequence(CliqueCount kr,
                                                   const DeckAnalysis& a,
                                                   int r) {
  std::vector<CliqueCount> out;
  Wide sum = 0;
  for (std::size_t i = 0; i < a.deck().size(); ++i) {
    const Wide d = kr.value() - a.card_kr(static_cast<int>(i), r);
    if (d < 0) {
      fail(Errc::NegativeDegree, "K_" + std::to_string(r) + " = " +
                                     kr.to_string() +
                                     " is below a card's own count");
    }
    sum += d;
    out.emplace_back(d);
  }
  const Wide hidden = r * kr.value() - sum;
  if (hidden < 0) {
    fail(Errc::NegativeDegree, "hidden vertex would have negative K_" +
                                   std::to_string(r) + "-degree");
  }
  out.emplace_back(hidden);
  return out;
}

// Every r-clique lies on n - r cards; the hidden card holds K_r(G) - deg_r(v_n)
// of them, so K_r(G) = (sum_i K_r(C_i) - deg_r(v_n)) / (n - r - 1).
inline CliqueCount kr_from_hidden_degree(Wide hidden_deg_r,
                                         const DeckAnalysis& a, int r) {
  const int n = a.n();
  if (r > n - 2 || r < 1) {
    fail(Errc::InvalidArgument,
         "hidden-degree identity needs 1 <= r <= n-2 (r=" + std::to_string(r) +
             ")");
  }
  const Wide num = a.card_sum(r) - hidden_deg_r;
  const Wide den = n - r - 1;
  if (num < 0 || num % den != 0) {
    fail(Errc::NonDivisible, "(" + to_string(a.card_sum(r)) + " - " +
                                 to_string(hidden_deg_r) + ") / " +
                                 to_string(den) + " is not a count");
  }
  return CliqueCount(num / den);
}

// Maximum degree n-1. A visible universal owner gives G outright; otherwise
// the hidden vertex is the unique universal vertex and its K_r-degree is
// K_{r-1}(G) - deg_{r-1}(v_n), built up from r = 2.
inline std::optional<Determined> resolver_universal(const DeckAnalysis& a,
                                                    int r,
                                                    const KnownCounts& lower) {
  const int n = a.n();
  if (a.delta() != n - 1) return std::nullopt;
  const auto& owner = a.profile().owner_degree;
  for (std::size_t i = 0; i < owner.size(); ++i) {
    if (owner[i] == n - 1) {
      return detail::determined(
          detail::rebuild_count(a, static_cast<int>(i), 0, r),
          Resolver::UniversalRebuild);
    }
  }
  if (r == n) return std::nullopt;
  if (r == n - 1) {
    // v_n lies in every (n-1)-clique, and G is not complete, so such a clique
    // is visible on the card of the single vertex it misses.
    Wide complete = 0;
    for (const Card& c : a.deck().cards()) complete += c.graph().is_complete();
    return detail::determined(complete, Resolver::UniversalHidden);
  }
  Wide hidden = n - 1;  // deg_2(v_n)
  for (int k = 3; k <= r; ++k) {
    if (!detail::known(lower, k - 1)) return std::nullopt;
    hidden = *lower[k - 1] - hidden;
  }
  return detail::determined(kr_from_hidden_degree(hidden, a, r).value(),
                            Resolver::UniversalHidden);
}

// Maximum degree n-2: every maximum-degree vertex has exactly one
// non-neighbour. Returns nullopt when the maximum-degree vertices form a
// clique containing the hidden vertex (the shared machinery takes over).
inline std::optional<Determined> resolver_delta_n2(const DeckAnalysis& a,
                                                   int r,
                                                   const KnownCounts& lower) {
  const int n = a.n();
  const int delta = a.delta();
  if (delta != n - 2) return std::nullopt;
  const auto& sightings = a.max_sightings();

  // (i) the hidden vertex is the only one of maximum degree; it is seen
  // whole on its non-neighbour's card.
  if (a.ell() == 1 && a.hidden_is_max()) {
    if (sightings.empty()) {
      fail(Errc::InternalContradiction, "unique maximum-degree vertex unseen");
    }
    if (r > n - 2) return std::nullopt;
    return detail::determined(
        kr_from_hidden_degree(sightings.front().clique_degrees[r], a, r).value(),
        Resolver::DeltaN2Hidden);
  }

  // (ii) a maximum-degree vertex seen on a maximum-degree card is that
  // owner's only non-neighbour.
  for (const Sighting& s : sightings) {
    if (a.profile().owner_degree[s.card_index] == delta) {
      return detail::determined(
          detail::rebuild_count(a, s.card_index, bit(s.card_vertex), r),
          Resolver::DeltaN2Rebuild);
    }
  }

  // (iii) hidden vertex below maximum degree: sum K_r(G) = K_r(C_i) + deg_r(v_i)
  // over the maximum-degree owners, with deg_r(v_i) = K_{r-1}(C_i) -
  // deg_{r-1}(non-neighbour of v_i), grouped by non-neighbour.
  if (!a.hidden_is_max()) {
    if (r < 3 || !detail::known(lower, r - 1)) return std::nullopt;
    const Wide lower_count = *lower[r - 1];
    const auto& owner = a.profile().owner_degree;
    const int cards = static_cast<int>(a.deck().size());
    Wide total = 0;
    Wide visible_lower_degrees = 0;
    int seen = 0;
    for (int i = 0; i < cards; ++i) {
      if (owner[i] == delta) total += a.card_kr(i, r) + a.card_kr(i, r - 1);
      const Wide deg_lower = lower_count - a.card_kr(i, r - 1);
      visible_lower_degrees += deg_lower;
      total -= deg_lower * a.max_sightings_on(i);
      seen += a.max_sightings_on(i);
    }
    const Wide hidden_lower = (r - 1) * lower_count - visible_lower_degrees;
    total -= hidden_lower * (a.ell() - seen);
    return detail::determined(
        detail::exact_div(total, a.ell(), "max-degree count identity"),
        Resolver::DeltaN2Equation);
  }
  return std::nullopt;
}

using TwoChoiceResult = std::variant<std::monostate, Determined, CandidatePair>;

// Pairs maximum-degree vertices (by deg_r, descending) with their cards (by
// K_r, ascending). Without the hidden card this pairing is forced; with it,
// the hidden card can spoil only one end, leaving a and b.
inline TwoChoiceResult resolver_two_choices(const DeckAnalysis& a, int r) {
  if (!a.all_max_sighted() || a.max_sightings().empty()) return std::monostate{};
  const auto values = DeckAnalysis::distinct_values(a.max_sightings(), r);
  if (a.hidden_is_max() && a.ell() == 1) {
    if (r > a.n() - 2) return std::monostate{};
    return detail::determined(
        kr_from_hidden_degree(values.front(), a, r).value(),
        Resolver::TwoChoicesHidden);
  }
  const auto& cards = a.max_cards();
  if (cards.empty()) return std::monostate{};
  Wide lo = a.card_kr(cards.front(), r);
  Wide hi = lo;
  for (int i : cards) {
    lo = std::min(lo, a.card_kr(i, r));
    hi = std::max(hi, a.card_kr(i, r));
  }
  const CandidatePair pair{values.back() + hi, values.front() + lo};
  if (!a.hidden_is_max() || pair.a == pair.b) {
    return detail::determined(pair.a, Resolver::TwoChoices);
  }
  return pair;
}

namespace detail {

inline bool pair_open(const DeckAnalysis& a, const CandidatePair& pair) {
  return pair.a != pair.b && a.hidden_is_max() && a.ell() >= 2 &&
         a.all_max_sighted() && !a.max_sightings().empty();
}

}  // namespace detail

// Two maximum-degree vertices with equal deg_r make the hidden card's
// position irrelevant for the value they share.
inline std::optional<Determined> resolver_duplicates(const DeckAnalysis& a,
                                                     int r,
                                                     const CandidatePair& pair) {
  if (!detail::pair_open(a, pair)) return std::nullopt;
  const int n = a.n();
  const int delta = a.delta();
  const int ell = a.ell();
  const auto& sightings = a.max_sightings();
  const auto& owner = a.profile().owner_degree;

  std::map<Wide, int> multiplicity;
  for (const Sighting& s : sightings) ++multiplicity[s.clique_degrees[r]];

  int threshold = 0;  // a value seen more than `threshold` times is shared
  if (delta == n - 3) {
    // Each maximum-degree vertex is seen twice, or once if it is a
    // non-neighbour of the hidden vertex.
    const int total = static_cast<int>(sightings.size());
    if (total >= 2 * ell - 1) {
      threshold = 2;
    } else if (total == 2 * ell - 2) {
      // Both non-neighbours of the hidden vertex have maximum degree.
      for (int i : a.max_cards()) {
        if (a.max_sightings_on(i) >= 2) {
          Bitrow non = 0;
          for (const Sighting& s : sightings) {
            if (s.card_index == i) non |= bit(s.card_vertex);
          }
          return detail::determined(detail::rebuild_count(a, i, non, r),
                            Resolver::DuplicatesRebuild);
        }
      }
      // Every visible maximum-degree vertex now has a lower-degree
      // non-neighbour; only the hidden vertex is never seen on a lower card.
      std::map<Wide, std::pair<bool, bool>> seen;  // (on max card, on lower card)
      for (const Sighting& s : sightings) {
        auto& flags = seen[s.clique_degrees[r]];
        if (owner[s.card_index] == delta) {
          flags.first = true;
        } else {
          flags.second = true;
        }
      }
      std::vector<Wide> only_max;
      for (const auto& [value, flags] : seen) {
        if (flags.first && !flags.second) only_max.push_back(value);
      }
      if (only_max.size() != 1) {
        fail(Errc::IdentificationAmbiguous,
             std::to_string(only_max.size()) +
                 " K_r-degrees are seen only on maximum-degree cards");
      }
      if (r > n - 2) return std::nullopt;
      return detail::determined(kr_from_hidden_degree(only_max.front(), a, r).value(),
                        Resolver::DuplicatesIdentify);
    } else {
      fail(Errc::InternalContradiction,
           "too few maximum-degree sightings for max degree n-3");
    }
  } else {
    // Seen n-1-delta or n-2-delta times each; two vertices exceed n-1-delta.
    // At delta = n-2 (clique, hidden of maximum degree) everyone is seen once.
    threshold = n - delta - 1;
  }

  std::optional<Wide> shared;
  for (const auto& [value, count] : multiplicity) {
    if (count > threshold) shared = value;  // map is ascending: keeps largest
  }
  if (!shared) return std::nullopt;

  const auto values = DeckAnalysis::distinct_values(sightings, r);
  const auto cards = a.max_cards_by_kr(r);
  // Index of the first vertex (by deg_r, descending) carrying the shared value.
  const auto rank = static_cast<std::size_t>(
      std::count_if(values.begin(), values.end(),
                    [&](Wide v) { return v > *shared; }));
  if (rank >= cards.size()) {
    fail(Errc::InternalContradiction, "shared value has no card to pair with");
  }
  if (rank == 0) {
    return detail::determined(*shared + a.card_kr(cards[0], r), Resolver::Duplicates);
  }
  const Wide prev_card = a.card_kr(cards[rank - 1], r);
  const Wide this_card = a.card_kr(cards[rank], r);
  if (prev_card == this_card) {
    return detail::determined(*shared + prev_card, Resolver::Duplicates);
  }
  return detail::determined(values[rank - 1] + prev_card, Resolver::Duplicates);
}

// All deg_r distinct among the maximum-degree vertices w_1 > ... > w_l: the
// hidden vertex is w_l (red: card j <-> w_j) or w_1 (blue: card j <-> w_{j+1}).
// A colour is dropped if its pairing does not give one constant K_r(G), if a
// sighting contradicts the symmetry of non-adjacency under it, or if some
// settled K_{r'} disagrees with the assigned vertices' sighted deg_{r'}.
inline std::optional<Determined> resolver_redblue(const DeckAnalysis& a, int r,
                                                  const CandidatePair& pair,
                                                  const KnownCounts& others,
                                                  Resolver tag = Resolver::RedBlue) {
  if (!detail::pair_open(a, pair)) return std::nullopt;
  const int n = a.n();
  const int ell = a.ell();
  const auto& sightings = a.max_sightings();
  const auto values = DeckAnalysis::distinct_values(sightings, r);
  if (static_cast<int>(values.size()) != ell) return std::nullopt;
  const auto cards = a.max_cards_by_kr(r);
  if (static_cast<int>(cards.size()) != ell - 1) return std::nullopt;

  auto rank_of = [&](Wide v) {
    return static_cast<int>(
        std::find(values.begin(), values.end(), v) - values.begin());
  };
  std::vector<const Sighting*> witness(ell, nullptr);
  for (const Sighting& s : sightings) {
    const int k = rank_of(s.clique_degrees[r]);
    if (!witness[k]) witness[k] = &s;
  }
  // position of each deck card in `cards`, or -1
  std::vector<int> slot(a.deck().size(), -1);
  for (int j = 0; j < ell - 1; ++j) slot[cards[j]] = j;

  auto survives = [&](bool red) -> std::optional<Wide> {
    auto sigma = [&](int j) { return red ? j : j + 1; };
    const int hidden_rank = red ? ell - 1 : 0;
    const Wide value = values[sigma(0)] + a.card_kr(cards[0], r);
    for (int j = 0; j < ell - 1; ++j) {
      if (values[sigma(j)] + a.card_kr(cards[j], r) != value) return std::nullopt;
    }
    for (const Sighting& s : sightings) {
      const int j = slot[s.card_index];
      if (j < 0) continue;
      const int k = rank_of(s.clique_degrees[r]);
      if (k == sigma(j)) return std::nullopt;  // a vertex on its own card
      if (k == hidden_rank) continue;
      const int other = red ? k : k - 1;  // card assigned to w_k
      const Wide owner_value = values[sigma(j)];
      const bool reciprocal = std::any_of(
          sightings.begin(), sightings.end(), [&](const Sighting& t) {
            return t.card_index == cards[other] &&
                   t.clique_degrees[r] == owner_value;
          });
      if (!reciprocal) return std::nullopt;
    }
    for (int rp = 2; rp <= n; ++rp) {
      if (rp == r || !detail::known(others, rp)) continue;
      const Wide kp = *others[rp];
      Wide visible = 0;
      for (std::size_t i = 0; i < a.deck().size(); ++i) {
        visible += kp - a.card_kr(static_cast<int>(i), rp);
      }
      for (int j = 0; j < ell - 1; ++j) {
        if (kp - a.card_kr(cards[j], rp) !=
            witness[sigma(j)]->clique_degrees[rp]) {
          return std::nullopt;
        }
      }
      if (rp * kp - visible != witness[hidden_rank]->clique_degrees[rp]) {
        return std::nullopt;
      }
    }
    return value;
  };

  const auto red = survives(true);
  const auto blue = survives(false);
  if (red && blue) return std::nullopt;
  if (!red && !blue) {
    fail(Errc::InternalContradiction, "both red and blue assignments fail");
  }
  return detail::determined(red ? *red : *blue, tag);
}

// With a hole a in the degree sequence, vertices of degree a-1 are seen whole
// wherever they appear with card degree a-1, and play the role of the
// maximum-degree vertices with all of their cards visible.
inline std::optional<Determined> resolver_hole(const DeckAnalysis& a, int r) {
  const auto& holes = a.profile().holes;
  if (holes.empty()) return std::nullopt;
  const int low = holes.front() - 1;
  if (a.profile().hidden_degree == low) return std::nullopt;
  const auto& sightings = a.hole_sightings();
  if (sightings.empty()) {
    fail(Errc::InternalContradiction, "degree below the hole never sighted");
  }
  const auto values = DeckAnalysis::distinct_values(sightings, r);
  std::optional<Wide> best;
  const auto& owner = a.profile().owner_degree;
  for (std::size_t i = 0; i < owner.size(); ++i) {
    if (owner[i] != low) continue;
    const Wide c = a.card_kr(static_cast<int>(i), r);
    if (!best || c > *best) best = c;
  }
  if (!best) fail(Errc::InternalContradiction, "no card below the hole");
  return detail::determined(values.back() + *best, Resolver::Hole);
}

using CliqueRootResult = std::variant<std::monostate, Determined, Blocked>;

// Maximum-degree vertices pairwise adjacent and the hidden one among them:
// each is seen whole exactly n-1-delta times, and every lower-degree card is
// visible. Double counting r-cliques rooted in maximum-degree vertices gives
// K_r(G) (n-r-l) = sum_{lower cards} K_r(C_i) - sum_{sightings} deg_r / (n-1-delta).
inline CliqueRootResult resolver_maxdeg_clique(const DeckAnalysis& a, int r) {
  const int n = a.n();
  const int delta = a.delta();
  if (delta > n - 2 || !a.hidden_is_max() || !a.max_vertices_clique()) {
    return std::monostate{};
  }
  const int divisor = n - r - a.ell();
  if (divisor == 0) return Blocked{};
  Wide lower_cards = 0;
  const auto& owner = a.profile().owner_degree;
  for (std::size_t i = 0; i < owner.size(); ++i) {
    if (owner[i] < delta) lower_cards += a.card_kr(static_cast<int>(i), r);
  }
  Wide rooted = 0;
  for (const Sighting& s : a.max_sightings()) rooted += s.clique_degrees[r];
  const Wide per_root = detail::exact_div(rooted, n - 1 - delta, "rooted cliques");
  return detail::determined(
      detail::exact_div(lower_cards - per_root, divisor, "clique-root identity"),
      Resolver::MaxDegClique);
}

struct ReconOptions {
  // Run every applicable resolver on every row and require agreement.
  bool cross_check = false;
};

namespace detail {

struct PendingRow {
  CandidatePair pair;
};

using RowState = std::variant<Determined, PendingRow>;

// Every resolver whose preconditions hold, for the cross-check mode.
inline std::vector<Determined> all_applicable(const DeckAnalysis& a, int r,
                                              const KnownCounts& known) {
  std::vector<Determined> out;
  auto add = [&](std::optional<Determined> d) {
    if (d) out.push_back(*d);
  };
  const int n = a.n();
  add(resolver_zero(r, a.profile()));
  if (r == n) add(resolver_full(a));
  if (r == n - 1) add(resolver_spanning(a));
  add(resolver_universal(a, r, known));
  add(resolver_delta_n2(a, r, known));
  const auto two = resolver_two_choices(a, r);
  if (const auto* d = std::get_if<Determined>(&two)) out.push_back(*d);
  if (const auto* p = std::get_if<CandidatePair>(&two)) {
    add(resolver_duplicates(a, r, *p));
    add(resolver_redblue(a, r, *p, known));
  }
  add(resolver_hole(a, r));
  const auto rooted = resolver_maxdeg_clique(a, r);
  if (const auto* d = std::get_if<Determined>(&rooted)) out.push_back(*d);
  return out;
}

inline RowState resolve_row(const DeckAnalysis& a, int r,
                            const KnownCounts& known) {
  const int n = a.n();
  if (auto d = resolver_zero(r, a.profile())) return *d;
  if (r == n) return resolver_full(a);
  if (r == n - 1) return resolver_spanning(a);
  if (a.delta() == n - 1) {
    if (auto d = resolver_universal(a, r, known)) return *d;
    fail(Errc::InternalContradiction, "universal-vertex path left r=" +
                                          std::to_string(r) + " open");
  }
  if (a.delta() == n - 2) {
    if (auto d = resolver_delta_n2(a, r, known)) return *d;
  }
  const auto two = resolver_two_choices(a, r);
  if (const auto* d = std::get_if<Determined>(&two)) return *d;
  const auto* pair = std::get_if<CandidatePair>(&two);
  if (!pair) {
    fail(Errc::InternalContradiction,
         "maximum-degree pairing unavailable at r=" + std::to_string(r));
  }
  if (auto d = resolver_duplicates(a, r, *pair)) return *d;
  if (auto d = resolver_redblue(a, r, *pair, known)) return *d;
  if (auto d = resolver_hole(a, r)) return *d;
  const auto rooted = resolver_maxdeg_clique(a, r);
  if (const auto* d = std::get_if<Determined>(&rooted)) return *d;
  if (std::holds_alternative<Blocked>(rooted)) return PendingRow{*pair};
  fail(Errc::InternalContradiction,
       "maximum-degree vertices not a clique after red/blue at r=" +
           std::to_string(r));
}

inline void cross_check(const DeckAnalysis& a, int r, const KnownCounts& known,
                        const Determined& chosen) {
  for (const Determined& d : all_applicable(a, r, known)) {
    if (d.count != chosen.count) {
      fail(Errc::InternalContradiction,
           std::string(to_string(d.resolver)) + " gives " + d.count.to_string() +
               " but " + std::string(to_string(chosen.resolver)) + " gives " +
               chosen.count.to_string() + " at r=" + std::to_string(r));
    }
  }
}

}  // namespace detail

// K_r(G) for r = 1..n from n-1 cards. Rows are settled in increasing r; the
// only row that can stay open is r = n - l, which gets a second look with
// every other row known before it is reported as two candidates.
inline ReconstructionOutcome reconstruct_all(const PartialDeck& deck,
                                             const DegreeProfile& profile,
                                             ReconOptions options = {}) {
  const int n = deck.original_order();
  if (n < kMinReconstructibleOrder) {
    fail(Errc::UnsupportedOrder, "clique reconstruction needs n >= " +
                                     std::to_string(kMinReconstructibleOrder));
  }
  const DeckAnalysis analysis(deck, profile);
  KnownCounts known(static_cast<std::size_t>(n) + 1);
  std::vector<std::optional<detail::RowState>> state(static_cast<std::size_t>(n) + 1);

  state[1] = Determined{CliqueCount(n), Resolver::VertexCount};
  known[1] = n;
  state[2] = Determined{CliqueCount(profile.m), Resolver::EdgeCount};
  known[2] = profile.m;
  for (int r = 3; r <= n; ++r) {
    state[r] = detail::resolve_row(analysis, r, known);
    if (const auto* d = std::get_if<Determined>(&*state[r])) {
      known[r] = d->count.value();
      if (options.cross_check) detail::cross_check(analysis, r, known, *d);
    }
  }

  ReconstructionOutcome out;
  out.n = n;
  out.ell = profile.ell;
  for (int r = 1; r <= n; ++r) {
    if (const auto* d = std::get_if<Determined>(&*state[r])) {
      out.rows.emplace_back(*d);
      continue;
    }
    const auto& pending = std::get<detail::PendingRow>(*state[r]);
    if (r != n - profile.ell) {
      fail(Errc::InternalContradiction,
           "row r=" + std::to_string(r) + " left open but n - l = " +
               std::to_string(n - profile.ell));
    }
    KnownCounts others = known;
    others[r].reset();
    if (auto d = resolver_redblue(analysis, r, pending.pair, others,
                                  Resolver::RedBlueDeferred)) {
      if (options.cross_check) detail::cross_check(analysis, r, others, *d);
      out.rows.emplace_back(*d);
      continue;
    }
    const Wide low = std::min(pending.pair.a, pending.pair.b);
    const Wide high = std::max(pending.pair.a, pending.pair.b);
    if (low < 0) fail(Errc::InternalContradiction, "negative candidate");
    out.rows.emplace_back(TwoCandidates{CliqueCount(low), CliqueCount(high)});
  }
  return out;
}

}  // namespace deckrecon
