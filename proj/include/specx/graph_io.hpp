#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "specx/error.hpp"
#include "specx/graph.hpp"

namespace specx {

inline constexpr long long kMaxTextOrder = 20000;

/// "n" on the first line, then one "u v" pair (0-based) per line.
inline std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << "\n";
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v)) os << u << " " << v << "\n";
  return os.str();
}

inline Graph parse_edge_list(std::string_view text) {
  std::istringstream is{std::string(text)};
  long long n = -1;
  if (!(is >> n) || n < 0) throw ParseError("edge list: first token must be the vertex count");
  if (n > kMaxTextOrder) throw ParseError("edge list: more than " + std::to_string(kMaxTextOrder) + " vertices");
  Graph g(static_cast<std::size_t>(n));
  long long u = 0, v = 0;
  std::size_t pair = 0;
  while (is >> u) {
    ++pair;
    if (!(is >> v)) throw ParseError("edge list: dangling vertex in pair " + std::to_string(pair));
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      throw ParseError("edge list: bad pair " + std::to_string(u) + " " + std::to_string(v));
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!is.eof()) throw ParseError("edge list: non-numeric token");
  return g;
}

/// One row of 0/1 characters per vertex.
inline std::string write_adjacency(const Graph& g) {
  std::string out;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < g.order(); ++v) out += g.adjacent(u, v) ? '1' : '0';
    out += '\n';
  }
  return out;
}

/// Accepts rows of 0/1 with optional whitespace between entries.
inline Graph parse_adjacency(std::string_view text) {
  std::vector<std::string> rows;
  std::istringstream is{std::string(text)};
  for (std::string line; std::getline(is, line);) {
    std::string row;
    for (char ch : line) {
      if (ch == '0' || ch == '1')
        row += ch;
      else if (!std::isspace(static_cast<unsigned char>(ch)))
        throw ParseError(std::string("adjacency matrix: unexpected character '") + ch + "'");
    }
    if (!row.empty()) rows.push_back(row);
  }
  const std::size_t n = rows.size();
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) throw ParseError("adjacency matrix: row " + std::to_string(i) + " has wrong length");
    if (rows[i][i] != '0') throw ParseError("adjacency matrix: loop at vertex " + std::to_string(i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) throw ParseError("adjacency matrix: not symmetric");
      if (rows[i][j] == '1') g.add_edge(i, j);
    }
  return g;
}

}  // namespace specx
