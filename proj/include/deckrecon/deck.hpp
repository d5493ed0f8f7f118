#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "deckrecon/canonical.hpp"
#include "deckrecon/error.hpp"
#include "deckrecon/graph.hpp"
#include "deckrecon/graph6.hpp"

namespace deckrecon {

// A vertex-deleted subgraph. The labeled representative is arbitrary; only
// the certificate carries identity.
class Card {
 public:
  explicit Card(Graph graph)
      : graph_(std::move(graph)), certificate_(canonical_certificate(graph_)) {}

  const Graph& graph() const noexcept { return graph_; }
  const CanonicalCertificate& certificate() const noexcept {
    return certificate_;
  }
  int order() const noexcept { return graph_.order(); }

 private:
  Graph graph_;
  CanonicalCertificate certificate_;
};

namespace detail {

inline void sort_cards(std::vector<Card>& cards) {
  std::stable_sort(cards.begin(), cards.end(),
                   [](const Card& a, const Card& b) {
                     return a.certificate() < b.certificate();
                   });
}

inline void check_card_orders(const std::vector<Card>& cards, int expected) {
  for (const Card& c : cards) {
    if (c.order() != expected) {
      fail(Errc::MixedOrders, "card of order " + std::to_string(c.order()) +
                                  " in a deck of order-" +
                                  std::to_string(expected) + " cards");
    }
  }
}

}  // namespace detail

// Multiset of cards stored sorted by certificate, so iteration order is a
// function of the multiset alone.
class CardMultiset {
 public:
  CardMultiset() = default;
  CardMultiset(int original_order, std::vector<Card> cards)
      : original_order_(original_order), cards_(std::move(cards)) {
    detail::check_card_orders(cards_, original_order_ - 1);
    detail::sort_cards(cards_);
  }

  int original_order() const noexcept { return original_order_; }
  const std::vector<Card>& cards() const noexcept { return cards_; }
  std::size_t size() const noexcept { return cards_.size(); }
  const Card& operator[](std::size_t i) const { return cards_[i]; }

 private:
  int original_order_ = 0;
  std::vector<Card> cards_;
};

class FullDeck : public CardMultiset {
 public:
  FullDeck(int original_order, std::vector<Card> cards)
      : CardMultiset(original_order, std::move(cards)) {
    if (static_cast<int>(size()) != original_order) {
      fail(Errc::WrongCardCount, "full deck needs exactly n cards");
    }
  }
};

// n-1 of the n cards; the missing one belongs to the hidden vertex.
class PartialDeck : public CardMultiset {
 public:
  PartialDeck(int original_order, std::vector<Card> cards)
      : CardMultiset(original_order, std::move(cards)) {
    if (static_cast<int>(size()) != original_order - 1) {
      fail(Errc::WrongCardCount,
           "partial deck of order " + std::to_string(original_order) +
               " needs " + std::to_string(original_order - 1) + " cards, got " +
               std::to_string(size()));
    }
  }
};

inline FullDeck deal(const Graph& g) {
  if (g.order() < 2) fail(Errc::InvalidArgument, "deal needs order >= 2");
  std::vector<Card> cards;
  cards.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) cards.emplace_back(delete_vertex(g, v));
  return FullDeck(g.order(), std::move(cards));
}

inline PartialDeck hide(const FullDeck& deck, const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) fail(Errc::InvalidArgument, "vertex out of range");
  const CanonicalCertificate missing = canonical_certificate(delete_vertex(g, v));
  std::vector<Card> kept = deck.cards();
  auto it = std::find_if(kept.begin(), kept.end(), [&](const Card& c) {
    return c.certificate() == missing;
  });
  if (it == kept.end() || deck.original_order() != g.order()) {
    fail(Errc::CardNotFound, "deck has no card isomorphic to G - " +
                                 std::to_string(v));
  }
  kept.erase(it);
  return PartialDeck(deck.original_order(), std::move(kept));
}

inline bool deck_equal(const CardMultiset& a, const CardMultiset& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].certificate() != b[i].certificate()) return false;
  }
  return true;
}

// Deck file: header "deck n=<n> cards=<k>" then k graph6 lines in
// certificate order. Cards are written in canonical form, so the file is a
// function of the multiset.
inline std::string format_deck(const CardMultiset& deck) {
  std::string out = "deck n=" + std::to_string(deck.original_order()) +
                    " cards=" + std::to_string(deck.size()) + "\n";
  for (const Card& c : deck.cards()) {
    out += c.certificate().bytes();
    out += '\n';
  }
  return out;
}

inline PartialDeck parse_deck(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::string current;
    for (char ch : text) {
      if (ch == '\n') {
        lines.push_back(std::move(current));
        current.clear();
      } else {
        current.push_back(ch);
      }
    }
    if (!current.empty()) lines.push_back(std::move(current));
  }
  if (lines.empty()) fail(Errc::MalformedFile, "empty deck file");

  static const std::regex header(R"(deck n=(\d{1,3}) cards=(\d{1,3}))");
  std::smatch match;
  if (!std::regex_match(lines[0], match, header)) {
    fail(Errc::MalformedFile, "bad header line: '" + lines[0] + "'");
  }
  const int n = std::stoi(match[1]);
  const int k = std::stoi(match[2]);
  if (n < 2 || n > kMaxOrder) {
    fail(Errc::MalformedFile, "order " + std::to_string(n) + " unsupported");
  }
  const int found = static_cast<int>(lines.size()) - 1;
  if (k != n - 1 || found != k) {
    fail(Errc::WrongCardCount, "header n=" + std::to_string(n) + " cards=" +
                                   std::to_string(k) + " with " +
                                   std::to_string(found) + " card lines");
  }

  std::vector<Card> cards;
  cards.reserve(k);
  for (int i = 1; i <= k; ++i) {
    Graph g;
    try {
      g = parse_graph6(lines[i]);
    } catch (const ReconError& e) {
      fail(Errc::MalformedFile, "line " + std::to_string(i + 1) + ": " +
                                    e.what());
    }
    if (g.order() != n - 1) {
      fail(Errc::MixedOrders, "line " + std::to_string(i + 1) +
                                  " has order " + std::to_string(g.order()) +
                                  ", expected " + std::to_string(n - 1));
    }
    cards.emplace_back(std::move(g));
  }
  return PartialDeck(n, std::move(cards));
}

inline void save_deck(const CardMultiset& deck,
                      const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::MalformedFile, "cannot write " + path.string());
  out << format_deck(deck);
  if (!out) fail(Errc::MalformedFile, "write failed for " + path.string());
}

inline PartialDeck load_deck(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::MalformedFile, "cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_deck(buffer.str());
}

}  // namespace deckrecon
