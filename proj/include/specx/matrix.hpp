#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "specx/graph.hpp"

namespace specx {

/// Row-major dense square matrix of doubles.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n, double fill = 0.0) : n_(n), data_(n * n, fill) {}
  DenseMatrix(std::size_t n, std::vector<double> data) : n_(n), data_(std::move(data)) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
  static DenseMatrix adjacency(const Graph& g) { return {g.order(), g.adjacency_matrix()}; }

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  const std::vector<double>& data() const { return data_; }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    const std::size_t n = a.n_;
    DenseMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        const double aik = a(i, k);
        if (aik == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  /// Largest absolute entrywise difference.
  double max_abs_diff(const DenseMatrix& other) const {
    double worst = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i)
      worst = std::max(worst, std::fabs(data_[i] - other.data_[i]));
    return worst;
  }

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

}  // namespace specx
