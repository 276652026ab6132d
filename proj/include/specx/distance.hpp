#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "specx/error.hpp"
#include "specx/graph.hpp"
#include "specx/scalar.hpp"

namespace specx {

/// All-pairs hop distances of a connected graph together with the per-vertex
/// distance-class sizes k_i(u) and their partial sums n_i(u).
class DistanceDecomposition {
 public:
  static constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

  explicit DistanceDecomposition(const Graph& g) : n_(g.order()), dist_(n_ * n_, kUnreachable) {
    if (n_ == 0) throw PreconditionError("distance decomposition of the empty graph");
    const auto adj = g.adjacency_lists();
    std::vector<Vertex> queue(n_);
    for (Vertex root = 0; root < n_; ++root) {
      std::uint32_t* d = dist_.data() + root * n_;
      std::size_t head = 0, tail = 0;
      d[root] = 0;
      queue[tail++] = root;
      while (head < tail) {
        const Vertex u = queue[head++];
        for (Vertex w : adj[u])
          if (d[w] == kUnreachable) {
            d[w] = d[u] + 1;
            queue[tail++] = w;
          }
      }
      if (tail != n_) {
        for (Vertex v = 0; v < n_; ++v)
          if (d[v] == kUnreachable) throw DisconnectedGraph(root, v);
      }
      for (Vertex v = 0; v < n_; ++v) diameter_ = std::max<std::size_t>(diameter_, d[v]);
    }
    counts_.assign(n_ * (diameter_ + 1), 0);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = 0; v < n_; ++v) ++counts_[u * (diameter_ + 1) + distance(u, v)];
  }

  std::size_t order() const { return n_; }
  std::size_t diameter() const { return diameter_; }

  std::size_t distance(Vertex u, Vertex v) const { return dist_[u * n_ + v]; }

  /// k_i(u): number of vertices at distance exactly i from u (0 beyond D).
  std::size_t count(Vertex u, std::size_t i) const {
    return i > diameter_ ? 0 : counts_[u * (diameter_ + 1) + i];
  }

  /// n_i(u) = k_0(u) + ... + k_i(u).
  std::size_t cumulative(Vertex u, std::size_t i) const {
    std::size_t total = 0;
    for (std::size_t j = 0; j <= std::min(i, diameter_); ++j) total += count(u, j);
    return total;
  }

  /// Row-major 0/1 matrix A_i of the distance-i relation.
  std::vector<double> distance_matrix(std::size_t i) const {
    std::vector<double> a(n_ * n_, 0.0);
    for (std::size_t idx = 0; idx < a.size(); ++idx)
      if (dist_[idx] == i) a[idx] = 1.0;
    return a;
  }

 private:
  std::size_t n_ = 0;
  std::size_t diameter_ = 0;
  std::vector<std::uint32_t> dist_;
  std::vector<std::size_t> counts_;
};

/// Exact vertex averages of the distance-class sizes.
struct AverageCounts {
  std::size_t n = 0;
  std::vector<Rational> kbar;  // index 0..D
  std::vector<Rational> nbar;  // index 0..D

  std::size_t diameter() const { return kbar.size() - 1; }

  /// Mean of k_i(u); zero beyond the diameter.
  Rational k(std::size_t i) const { return i < kbar.size() ? kbar[i] : Rational(0); }
  /// Mean of n_i(u); equal to n beyond the diameter.
  Rational cumulative(std::size_t i) const {
    return i < nbar.size() ? nbar[i] : Rational(n);
  }
};

inline AverageCounts average_counts(const DistanceDecomposition& dd) {
  AverageCounts ac;
  ac.n = dd.order();
  const std::size_t D = dd.diameter();
  Rational running = 0;
  for (std::size_t i = 0; i <= D; ++i) {
    long long total = 0;
    for (Vertex u = 0; u < dd.order(); ++u) total += static_cast<long long>(dd.count(u, i));
    const Rational mean(total, static_cast<long long>(dd.order()));
    running += mean;
    ac.kbar.push_back(mean);
    ac.nbar.push_back(running);
  }
  return ac;
}

}  // namespace specx
