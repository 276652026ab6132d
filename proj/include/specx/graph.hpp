#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specx/error.hpp"

namespace specx {

using Vertex = std::size_t;

/// Simple undirected loop-free graph on the vertices 0..n-1.
///
/// Adjacency is stored as packed bit rows, one row per vertex, so that
/// common-neighbour counts reduce to a popcount over the AND of two rows.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n)
      : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

  std::size_t order() const { return n_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (row(u)[v / 64] >> (v % 64)) & 1u;
  }

  void add_edge(Vertex u, Vertex v) {
    if (u >= n_ || v >= n_)
      throw PreconditionError("edge endpoint out of range");
    if (u == v)
      throw PreconditionError("loops are not allowed (vertex " +
                              std::to_string(u) + ")");
    set_bit(u, v);
    set_bit(v, u);
  }

  void remove_edge(Vertex u, Vertex v) {
    if (u >= n_ || v >= n_) return;
    bits_[u * words_ + v / 64] &= ~(std::uint64_t{1} << (v % 64));
    bits_[v * words_ + u / 64] &= ~(std::uint64_t{1} << (u % 64));
  }

  std::size_t degree(Vertex u) const {
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += std::popcount(row(u)[w]);
    return d;
  }

  std::size_t common_neighbours(Vertex u, Vertex v) const {
    std::size_t c = 0;
    const std::uint64_t* a = row(u);
    const std::uint64_t* b = row(v);
    for (std::size_t w = 0; w < words_; ++w) c += std::popcount(a[w] & b[w]);
    return c;
  }

  std::vector<Vertex> neighbours(Vertex u) const {
    std::vector<Vertex> out;
    const std::uint64_t* r = row(u);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t word = r[w];
      while (word) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
    return out;
  }

  std::vector<std::vector<Vertex>> adjacency_lists() const {
    std::vector<std::vector<Vertex>> lists(n_);
    for (Vertex u = 0; u < n_; ++u) lists[u] = neighbours(u);
    return lists;
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (Vertex u = 0; u < n_; ++u) twice += degree(u);
    return twice / 2;
  }

  /// Dense row-major 0/1 adjacency matrix.
  std::vector<double> adjacency_matrix() const {
    std::vector<double> a(n_ * n_, 0.0);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v : neighbours(u)) a[u * n_ + v] = 1.0;
    return a;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  const std::uint64_t* row(Vertex u) const { return bits_.data() + u * words_; }
  void set_bit(Vertex u, Vertex v) {
    bits_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Two vertices whose degrees differ; produced when a graph is not regular.
struct DegreeMismatch {
  Vertex u;
  std::size_t degree_u;
  Vertex v;
  std::size_t degree_v;
};

/// Either the common degree of a regular graph or a witness that there is none.
struct RegularDegree {
  std::optional<std::size_t> degree;
  std::optional<DegreeMismatch> mismatch;

  bool regular() const { return degree.has_value(); }
};

inline RegularDegree regular_degree(const Graph& g) {
  if (g.order() == 0) return {std::size_t{0}, std::nullopt};
  const std::size_t d0 = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) {
    const std::size_t dv = g.degree(v);
    if (dv != d0) return {std::nullopt, DegreeMismatch{0, d0, v, dv}};
  }
  return {d0, std::nullopt};
}

/// Graph on the same vertex set with the complementary edge set.
inline Graph complement(const Graph& g) {
  Graph h(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

}  // namespace specx
