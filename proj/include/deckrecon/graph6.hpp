#pragma once

#include <string>
#include <string_view>

#include "deckrecon/error.hpp"
#include "deckrecon/graph.hpp"

namespace deckrecon {

// graph6 for orders 1..62: one byte n+63, then the upper triangle of the
// adjacency matrix in column-major order (x(0,1), x(0,2), x(1,2), x(0,3), ...)
// packed six bits per byte, most significant first, each byte offset by 63.
// The last byte is zero-padded.

inline std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.reserve(1 + (n * (n - 1) / 2 + 5) / 6);
  out.push_back(static_cast<char>(n + 63));
  int acc = 0;
  int used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view line) {
  if (line.empty()) fail(Errc::MalformedEncoding, "empty graph6 line");
  if (line.starts_with(">>graph6<<")) {
    fail(Errc::MalformedEncoding, "graph6 header prefix is not accepted");
  }
  const auto first = static_cast<unsigned char>(line[0]);
  if (first == 126) {
    fail(Errc::OrderTooLarge, "graph6 orders above " +
                                  std::to_string(kMaxOrder) +
                                  " are not supported");
  }
  if (first < 63 || first > 126) {
    fail(Errc::MalformedEncoding, "bad order byte");
  }
  const int n = first - 63;
  if (n == 0) fail(Errc::MalformedEncoding, "order-0 graphs are not supported");
  if (n > kMaxOrder) {
    fail(Errc::OrderTooLarge, "order " + std::to_string(n) + " exceeds " +
                                  std::to_string(kMaxOrder));
  }
  const long bits = static_cast<long>(n) * (n - 1) / 2;
  const std::size_t expected = 1 + static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() != expected) {
    fail(Errc::MalformedEncoding, "expected " + std::to_string(expected) +
                                      " bytes for order " + std::to_string(n) +
                                      ", got " + std::to_string(line.size()));
  }
  for (std::size_t k = 1; k < line.size(); ++k) {
    const auto c = static_cast<unsigned char>(line[k]);
    if (c < 63 || c > 126) fail(Errc::MalformedEncoding, "bad data byte");
  }

  Graph g(n);
  long index = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++index) {
      const int byte = static_cast<unsigned char>(line[1 + index / 6]) - 63;
      if ((byte >> (5 - index % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = static_cast<unsigned char>(line.back()) - 63;
    const int pad = 6 - static_cast<int>(bits % 6);
    if (last & ((1 << pad) - 1)) {
      fail(Errc::MalformedEncoding, "nonzero padding bits");
    }
  }
  return g;
}

}  // namespace deckrecon
