#pragma once

// graph6 encoding (B. McKay, nauty formats.txt):
//
//   N(n) R(x)
//
// N(n) is one byte n+63 for n <= 62, otherwise byte 126 followed by the
// 18-bit big-endian value of n in three 6-bit groups. R(x) packs the upper
// triangle of the adjacency matrix in the order (0,1),(0,2),(1,2),(0,3),...
// into 6-bit big-endian groups, zero padded on the right, each stored as
// value+63. The optional header ">>graph6<<" may precede the data.

#include <cstddef>
#include <string>
#include <string_view>

#include "specx/error.hpp"
#include "specx/graph.hpp"

namespace specx {

inline constexpr std::size_t kGraph6MaxOrder = 258047;

namespace detail {

inline int graph6_value(char ch, std::size_t pos) {
  const auto c = static_cast<unsigned char>(ch);
  if (c < 63 || c > 126)
    throw ParseError("graph6: byte " + std::to_string(static_cast<int>(c)) +
                     " at offset " + std::to_string(pos) +
                     " is outside 0x3F-0x7E");
  return c - 63;
}

}  // namespace detail

inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
    text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  std::size_t n = 0;
  const int first = detail::graph6_value(text[0], 0);
  if (first < 63) {
    n = static_cast<std::size_t>(first);
    pos = 1;
  } else {
    if (text.size() < 4)
      throw ParseError("graph6: truncated length prefix");
    if (detail::graph6_value(text[1], 1) == 63)
      throw ParseError("graph6: orders of 258048 or more are not supported");
    for (std::size_t i = 1; i <= 3; ++i)
      n = (n << 6) | static_cast<std::size_t>(detail::graph6_value(text[i], i));
    pos = 4;
  }

  const std::size_t nbits = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t nbytes = (nbits + 5) / 6;
  if (text.size() - pos != nbytes)
    throw ParseError("graph6: expected " + std::to_string(nbytes) +
                     " data bytes for n=" + std::to_string(n) + ", found " +
                     std::to_string(text.size() - pos));

  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      const int value = detail::graph6_value(text[pos + bit / 6], pos + bit / 6);
      if ((value >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (nbytes > 0) {
    const int last = detail::graph6_value(text.back(), text.size() - 1);
    const std::size_t pad = nbytes * 6 - nbits;
    if (last & ((1 << pad) - 1))
      throw ParseError("graph6: nonzero padding bits");
  }
  return g;
}

inline std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder)
    throw PreconditionError("graph6: order too large for this encoder");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace specx
