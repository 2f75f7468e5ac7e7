#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace planext {

namespace detail {

inline void put_n(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
}

}  // namespace detail

inline std::string write_graph6(const AbstractGraph& g) {
  std::string out;
  const int n = g.order();
  detail::put_n(out, static_cast<std::uint64_t>(n));
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

// Strict decoder: an optional ">>graph6<<" header is accepted, nothing may follow the body.
inline AbstractGraph read_graph6(std::string_view text) {
  std::size_t pos = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) pos = header.size();
  if (pos >= text.size()) throw ParseError("empty graph6 string", pos);

  auto byte = [&](std::size_t at) -> int {
    if (at >= text.size()) throw ParseError("truncated graph6 string", at);
    const int c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw ParseError("byte out of graph6 range", at);
    return c - 63;
  };

  std::uint64_t n = 0;
  if (byte(pos) < 63) {
    n = static_cast<std::uint64_t>(byte(pos));
    pos += 1;
  } else if (pos + 1 < text.size() && byte(pos + 1) == 63) {
    for (int k = 0; k < 6; ++k) n = (n << 6) | static_cast<std::uint64_t>(byte(pos + 2 + k));
    pos += 8;
    if (n <= 258047) throw ParseError("non-canonical graph6 size header", pos - 8);
  } else {
    for (int k = 0; k < 3; ++k) n = (n << 6) | static_cast<std::uint64_t>(byte(pos + 1 + k));
    pos += 4;
    if (n <= 62) throw ParseError("non-canonical graph6 size header", pos - 4);
  }
  if (n > 1'000'000) throw ParseError("graph6 order too large", 0);

  const std::uint64_t bits = n * (n - (n ? 1 : 0)) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (int j = 1; j < static_cast<int>(n); ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + static_cast<std::size_t>(k / 6);
      if ((byte(at) >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  if (bits % 6 != 0) {
    const std::size_t last = pos + body - 1;
    if (byte(last) & ((1 << (6 - bits % 6)) - 1)) throw ParseError("nonzero graph6 padding bits", last);
  }
  pos += body;
  if (pos != text.size()) throw ParseError("trailing bytes after graph6 body", pos);
  return AbstractGraph::from_edges(static_cast<int>(n), edges);
}

}  // namespace planext
