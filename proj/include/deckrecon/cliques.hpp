#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "deckrecon/graph.hpp"

namespace deckrecon {

// Signed 128-bit accumulator for card sums and the exact-division identities.
__extension__ typedef __int128 Wide;
__extension__ typedef unsigned __int128 UWide;

inline std::string to_string(Wide value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  UWide mag = negative ? -static_cast<UWide>(value) : static_cast<UWide>(value);
  std::string digits;
  while (mag > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

// Exact, nonnegative number of cliques.
class CliqueCount {
 public:
  constexpr CliqueCount() = default;
  constexpr explicit CliqueCount(Wide value) : value_(value) {}

  constexpr Wide value() const noexcept { return value_; }
  std::string to_string() const { return deckrecon::to_string(value_); }

  bool fits_u64() const noexcept {
    return value_ >= 0 && value_ <= static_cast<Wide>(UINT64_MAX);
  }

  friend constexpr auto operator<=>(const CliqueCount&,
                                    const CliqueCount&) = default;

 private:
  Wide value_ = 0;
};

namespace detail {

// Every clique inside `candidates` extending the current one (size `depth`)
// by vertices of increasing label, tallied by size.
inline void tally_cliques(const Graph& g, Bitrow candidates, int depth,
                          int max_size, std::vector<Wide>& counts) {
  while (candidates) {
    const Vertex v = std::countr_zero(candidates);
    candidates &= candidates - 1;
    ++counts[depth + 1];
    if (depth + 1 < max_size) {
      const Bitrow next = candidates & g.row(v);
      if (next) tally_cliques(g, next, depth + 1, max_size, counts);
    }
  }
}

}  // namespace detail

// counts[k] = number of k-cliques contained in `within`, k = 0..max_size
// (counts[0] = 1, the empty clique).
inline std::vector<Wide> clique_profile(const Graph& g, Bitrow within,
                                        int max_size) {
  std::vector<Wide> counts(static_cast<std::size_t>(max_size) + 1, 0);
  counts[0] = 1;
  if (max_size > 0) {
    detail::tally_cliques(g, within & g.vertex_mask(), 0, max_size, counts);
  }
  return counts;
}

inline std::vector<Wide> clique_profile(const Graph& g) {
  return clique_profile(g, g.vertex_mask(), g.order());
}

inline CliqueCount count_cliques(const Graph& g, int r) {
  if (r < 1) fail(Errc::InvalidArgument, "clique size must be >= 1");
  if (r > g.order()) return CliqueCount(0);
  return CliqueCount(clique_profile(g, g.vertex_mask(), r)[r]);
}

// deg_r(v): the number of r-cliques containing v.
inline CliqueCount clique_degree(const Graph& g, Vertex v, int r) {
  if (v < 0 || v >= g.order()) {
    fail(Errc::InvalidArgument, "vertex out of range");
  }
  if (r < 1) fail(Errc::InvalidArgument, "clique size must be >= 1");
  if (r == 1) return CliqueCount(1);
  if (r - 1 > g.degree(v)) return CliqueCount(0);
  return CliqueCount(clique_profile(g, g.row(v), r - 1)[r - 1]);
}

// out[r] = deg_r(v) for r = 0..order (out[0] = 0, out[1] = 1).
inline std::vector<Wide> clique_degree_vector(const Graph& g, Vertex v) {
  const auto within = clique_profile(g, g.row(v), g.order() - 1);
  std::vector<Wide> out(static_cast<std::size_t>(g.order()) + 1, 0);
  for (int r = 1; r <= g.order(); ++r) out[r] = within[r - 1];
  return out;
}

inline Wide binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Wide out = 1;
  for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

}  // namespace deckrecon
