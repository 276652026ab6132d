#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "specx/error.hpp"
#include "specx/graph.hpp"
#include "specx/matrix.hpp"
#include "specx/poly.hpp"
#include "specx/scalar.hpp"
#include "specx/spectrum.hpp"

namespace specx {

/// <p,q> = (1/n) sum_i m_i p(theta_i) q(theta_i), the scalar product on
/// polynomials modulo the minimal polynomial of the adjacency matrix.
template <class T>
T inner_product(const Poly<T>& p, const Poly<T>& q, const BasicSpectrum<T>& s) {
  T total = 0;
  for (std::size_t i = 0; i < s.values.size(); ++i)
    total += T(s.mult[i]) * p(s.values[i]) * q(s.values[i]);
  return total / T(s.order());
}

namespace detail {

template <class T>
T weighted_dot(const std::vector<T>& a, const std::vector<T>& b, const BasicSpectrum<T>& s) {
  T total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) total += T(s.mult[i]) * a[i] * b[i];
  return total / T(s.order());
}

}  // namespace detail

/// r(theta_0)^2 / ||r||^2, the quantity bounded above by the mean size of
/// the ball of radius deg(r) around a vertex.
template <class T>
T peak_ratio(const Poly<T>& r, const BasicSpectrum<T>& s) {
  const T norm2 = inner_product(r, r, s);
  if (norm2 == T(0)) throw PreconditionError("peak_ratio: polynomial vanishes on the spectrum");
  const T top = r(s.largest());
  return top * top / norm2;
}

/// Predistance polynomials p_0..p_d of a spectrum with the three-term
/// recurrence x p_i = beta_{i-1} p_{i-1} + alpha_i p_i + gamma_{i+1} p_{i+1}.
template <class T>
struct PredistanceSystem {
  BasicSpectrum<T> spectrum;
  std::vector<Poly<T>> p;
  /// values[i][j] = p_i(theta_j), kept alongside the coefficients because the
  /// scalar product only ever needs these values.
  std::vector<std::vector<T>> values;
  std::vector<T> alpha;  // alpha_0..alpha_d
  std::vector<T> beta;   // beta_0..beta_d, beta_d = 0
  std::vector<T> gamma;  // gamma_0..gamma_d, gamma_0 = 0
  std::vector<Poly<T>> q;  // q_i = p_0 + ... + p_i
  Poly<T> hoffman;

  std::size_t d() const { return p.size() - 1; }
  const T& k() const { return spectrum.largest(); }
  /// p_i(theta_0).
  const T& at_k(std::size_t i) const { return values[i][0]; }
  /// q_i(theta_0).
  T sum_at_k(std::size_t i) const {
    T total = 0;
    for (std::size_t j = 0; j <= i && j < values.size(); ++j) total += values[j][0];
    return total;
  }
};

struct PredistanceOptions {
  /// Relative threshold below which ||p_i||^2 or p_i(theta_0) count as nonpositive.
  /// p_i(theta_0) / max_j |p_i(theta_j)| legitimately drops to 1e-7 for d near 13.
  double positivity_tolerance = 1e-12;
};

template <class T>
Poly<T> hoffman_polynomial(const BasicSpectrum<T>& s) {
  validate_spectrum(s);
  Poly<T> h = Poly<T>::constant(T(s.order()));
  for (std::size_t i = 1; i < s.values.size(); ++i) {
    h = h * Poly<T>({-s.values[i], T(1)});
    h /= (s.values[0] - s.values[i]);
  }
  return h;
}

template <class T>
PredistanceSystem<T> predistance_system(const BasicSpectrum<T>& s, const PredistanceOptions& opt = {}) {
  validate_spectrum(s);
  if (s.mult[0] != 1)
    throw PreconditionError("predistance system: the largest eigenvalue must be simple "
                            "(spectrum of a connected regular graph)");
  const std::size_t d = s.d();
  const std::size_t nv = s.values.size();

  PredistanceSystem<T> ps;
  ps.spectrum = s;
  ps.p.push_back(Poly<T>::constant(T(1)));
  ps.values.push_back(std::vector<T>(nv, T(1)));
  ps.alpha.assign(d + 1, T(0));
  ps.beta.assign(d + 1, T(0));
  ps.gamma.assign(d + 1, T(0));
  std::vector<T> norms{T(1)};

  for (std::size_t i = 0; i < d; ++i) {
    const auto& vi = ps.values[i];
    std::vector<T> xvi(nv);
    for (std::size_t j = 0; j < nv; ++j) xvi[j] = s.values[j] * vi[j];

    ps.alpha[i] = detail::weighted_dot(xvi, vi, s) / norms[i];
    Poly<T> next = ps.p[i].times_x() - ps.alpha[i] * ps.p[i];
    std::vector<T> u(nv);
    for (std::size_t j = 0; j < nv; ++j) u[j] = xvi[j] - ps.alpha[i] * vi[j];
    if (i > 0) {
      ps.beta[i - 1] = detail::weighted_dot(xvi, ps.values[i - 1], s) / norms[i - 1];
      next -= ps.beta[i - 1] * ps.p[i - 1];
      for (std::size_t j = 0; j < nv; ++j) u[j] -= ps.beta[i - 1] * ps.values[i - 1][j];
    }

    if constexpr (!ScalarTraits<T>::exact) {
      // Second Gram-Schmidt pass against every earlier p_j; zero in exact arithmetic.
      for (std::size_t j = 0; j <= i; ++j) {
        const T c = detail::weighted_dot(u, ps.values[j], s) / norms[j];
        for (std::size_t l = 0; l < nv; ++l) u[l] -= c * ps.values[j][l];
        next -= c * ps.p[j];
      }
    }

    // gamma_{i+1} normalises so that ||p_{i+1}||^2 = p_{i+1}(theta_0).
    const T unorm = detail::weighted_dot(u, u, s);
    const T utop = u[0];
    bool nonpositive = !(unorm > T(0)) || !(utop > T(0));
    if constexpr (!ScalarTraits<T>::exact) {
      T umax = 0;
      for (const auto& x : u) umax = std::max(umax, scalar_abs(x));
      const T xnorm = detail::weighted_dot(xvi, xvi, s);
      nonpositive = nonpositive || unorm <= opt.positivity_tolerance * xnorm ||
                    utop <= opt.positivity_tolerance * umax;
    }
    if (nonpositive)
      throw PreconditionError("predistance system: ||p_" + std::to_string(i + 1) +
                              "||^2 or p_" + std::to_string(i + 1) +
                              "(theta_0) is not positive; the spectrum is invalid or misclustered");
    const T g = unorm / utop;
    ps.gamma[i + 1] = g;
    for (auto& x : u) x /= g;
    ps.values.push_back(std::move(u));
    ps.p.push_back(next / g);
    norms.push_back(ps.values.back()[0]);
  }
  if (d > 0) {
    const auto& vd = ps.values[d];
    std::vector<T> xvd(nv);
    for (std::size_t j = 0; j < nv; ++j) xvd[j] = s.values[j] * vd[j];
    ps.alpha[d] = detail::weighted_dot(xvd, vd, s) / norms[d];
    ps.beta[d - 1] = detail::weighted_dot(xvd, ps.values[d - 1], s) / norms[d - 1];
  }

  Poly<T> running;
  for (const auto& pi : ps.p) {
    running += pi;
    ps.q.push_back(running);
  }
  ps.hoffman = hoffman_polynomial(s);
  return ps;
}

/// gamma_2 from the closed walk averages C3, C4:
/// (C3^2 - C4 k + k^3) / (k (C3 + k - k^2)).
template <class T>
T gamma2_closed_form(const BasicSpectrum<T>& s, double tolerance = 1e-9) {
  validate_spectrum(s);
  const T k = s.largest();
  const T c3 = average_circuits(s, 3);
  const T c4 = average_circuits(s, 4);
  const T den = k * (c3 + k - k * k);
  if (nearly_zero(den, to_double(T(k * k * k)), tolerance))
    throw PreconditionError("gamma2 closed form: denominator vanishes (fewer than three "
                            "distinct eigenvalues?)");
  return (c3 * c3 - c4 * k + k * k * k) / den;
}

/// p(A) by Horner's rule on the dense adjacency matrix.
template <class T>
DenseMatrix apply_poly(const Poly<T>& p, const Graph& g) {
  const std::size_t n = g.order();
  if (p.is_zero()) return DenseMatrix(n);
  const DenseMatrix a = DenseMatrix::adjacency(g);
  DenseMatrix m(n);
  for (int i = p.degree(); i >= 0; --i) {
    if (i != p.degree()) m = m * a;
    const double c = to_double(p.coefficient(static_cast<std::size_t>(i)));
    for (std::size_t r = 0; r < n; ++r) m(r, r) += c;
  }
  return m;
}

}  // namespace specx
