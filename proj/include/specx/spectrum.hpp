#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "specx/error.hpp"
#include "specx/graph.hpp"
#include "specx/matrix.hpp"
#include "specx/scalar.hpp"

namespace specx {

/// Distinct eigenvalues theta_0 > theta_1 > ... > theta_d with multiplicities.
template <class T>
struct BasicSpectrum {
  std::vector<T> values;
  std::vector<std::size_t> mult;

  /// d: number of distinct eigenvalues minus one.
  std::size_t d() const { return values.size() - 1; }
  std::size_t order() const {
    std::size_t n = 0;
    for (auto m : mult) n += m;
    return n;
  }
  const T& largest() const { return values.front(); }

  bool contains(const T& x, double rel_tol) const {
    return std::any_of(values.begin(), values.end(),
                       [&](const T& v) { return nearly_equal(v, x, rel_tol); });
  }

  friend bool operator==(const BasicSpectrum&, const BasicSpectrum&) = default;
};

using Spectrum = BasicSpectrum<double>;

/// Checks ordering and multiplicity invariants; throws PreconditionError.
template <class T>
void validate_spectrum(const BasicSpectrum<T>& s) {
  if (s.values.empty() || s.values.size() != s.mult.size())
    throw PreconditionError("spectrum: values and multiplicities must be nonempty and aligned");
  for (std::size_t i = 0; i < s.mult.size(); ++i) {
    if (s.mult[i] == 0) throw PreconditionError("spectrum: zero multiplicity");
    if (i > 0 && !(s.values[i] < s.values[i - 1]))
      throw PreconditionError("spectrum: eigenvalues must be strictly decreasing");
  }
}

/// Builds a spectrum from (value, multiplicity) pairs in any order.
template <class T>
BasicSpectrum<T> make_spectrum(std::vector<std::pair<T, std::size_t>> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  BasicSpectrum<T> s;
  for (auto& [v, m] : entries) {
    s.values.push_back(v);
    s.mult.push_back(m);
  }
  validate_spectrum(s);
  return s;
}

/// Groups equal values (within rel_tol) and adds up their multiplicities.
template <class T>
BasicSpectrum<T> merge_equal(const std::vector<T>& values, const std::vector<std::size_t>& mult,
                             double rel_tol) {
  std::vector<std::pair<T, std::size_t>> groups;
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return nearly_equal(g.first, values[i], rel_tol); });
    if (it == groups.end())
      groups.emplace_back(values[i], mult[i]);
    else
      it->second += mult[i];
  }
  return make_spectrum(std::move(groups));
}

struct JacobiOptions {
  int max_sweeps = 100;
  /// Stop once the off-diagonal Frobenius norm is below tolerance*||A||_F.
  double tolerance = 1e-12;
};

/// All eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations,
/// sorted in descending order.
inline std::vector<double> eigenvalues_symmetric(DenseMatrix a, const JacobiOptions& opt = {}) {
  const std::size_t n = a.size();
  double frob = 0.0;
  for (double x : a.data()) frob += x * x;
  frob = std::sqrt(frob);
  const auto off_norm = [&] {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * a(p, q) * a(p, q);
    return std::sqrt(off);
  };

  double off = off_norm();
  int sweep = 0;
  while (off > opt.tolerance * std::max(frob, 1.0)) {
    if (sweep++ >= opt.max_sweeps)
      throw ConvergenceError("Jacobi eigensolver did not converge in " +
                                 std::to_string(opt.max_sweeps) + " sweeps",
                             off);
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = a(p, r) = c * arp - s * arq;
          a(r, q) = a(q, r) = s * arp + c * arq;
        }
      }
    }
    off = off_norm();
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

inline std::vector<double> eigenvalues_symmetric(const Graph& g, const JacobiOptions& opt = {}) {
  return eigenvalues_symmetric(DenseMatrix::adjacency(g), opt);
}

struct ClusterOptions {
  double tolerance = 1e-7;
  bool snap_integers = true;
};

struct ClusteredSpectrum {
  Spectrum spectrum;
  /// Every distinct value was snapped to an integer.
  bool integral = false;
  /// Two neighbouring clusters lie closer than 10*tolerance.
  bool ambiguous = false;
  std::vector<std::string> notes;
};

/// Groups consecutive eigenvalues closer than tol*max(1,|theta|) into one
/// distinct value (cluster mean) whose multiplicity is the cluster size.
inline ClusteredSpectrum cluster_spectrum(std::vector<double> raw, const ClusterOptions& opt = {}) {
  if (raw.empty()) throw PreconditionError("cluster_spectrum: no eigenvalues");
  if (!(opt.tolerance > 0)) throw PreconditionError("cluster_spectrum: tolerance must be positive");
  std::sort(raw.begin(), raw.end(), std::greater<>());
  const auto scale = [](double x) { return std::max(1.0, std::fabs(x)); };

  ClusteredSpectrum out;
  std::vector<std::vector<double>> clusters{{raw[0]}};
  for (std::size_t i = 1; i < raw.size(); ++i) {
    const double gap = raw[i - 1] - raw[i];
    const double unit = opt.tolerance * scale(raw[i]);
    if (gap <= unit) {
      clusters.back().push_back(raw[i]);
    } else {
      if (gap <= 10.0 * unit) {
        out.ambiguous = true;
        out.notes.push_back("ambiguous clustering: eigenvalues " + std::to_string(raw[i - 1]) +
                            " and " + std::to_string(raw[i]) + " differ by " +
                            std::to_string(gap));
      }
      clusters.push_back({raw[i]});
    }
  }

  bool all_integral = true;
  for (const auto& c : clusters) {
    double mean = 0.0;
    for (double x : c) mean += x;
    mean /= static_cast<double>(c.size());
    const double nearest = std::round(mean);
    if (opt.snap_integers && std::fabs(mean - nearest) <= opt.tolerance * scale(mean)) {
      mean = nearest;
    } else {
      all_integral = false;
    }
    out.spectrum.values.push_back(mean);
    out.spectrum.mult.push_back(c.size());
  }
  // Snapping can in principle collide two adjacent clusters onto one integer.
  for (std::size_t i = 1; i < out.spectrum.values.size(); ++i) {
    if (out.spectrum.values[i] == out.spectrum.values[i - 1]) {
      out.spectrum.mult[i - 1] += out.spectrum.mult[i];
      out.spectrum.values.erase(out.spectrum.values.begin() + static_cast<std::ptrdiff_t>(i));
      out.spectrum.mult.erase(out.spectrum.mult.begin() + static_cast<std::ptrdiff_t>(i));
      out.ambiguous = true;
      out.notes.push_back("two clusters snapped onto the same integer");
      --i;
    }
  }
  out.integral = all_integral && opt.snap_integers;
  return out;
}

/// Average number of closed walks of length `len` per vertex:
/// (1/n) sum_i m_i theta_i^len.
template <class T>
T average_circuits(const BasicSpectrum<T>& s, unsigned len) {
  T total = 0;
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    T power = 1;
    for (unsigned e = 0; e < len; ++e) power *= s.values[i];
    total += T(s.mult[i]) * power;
  }
  return total / T(s.order());
}

/// Exact copy of an integral spectrum, or nullopt if some value is not an integer.
inline std::optional<BasicSpectrum<Rational>> exact_spectrum(const Spectrum& s) {
  BasicSpectrum<Rational> out;
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    const double v = s.values[i];
    if (!std::isfinite(v) || std::round(v) != v) return std::nullopt;
    out.values.emplace_back(static_cast<long long>(v));
    out.mult.push_back(s.mult[i]);
  }
  return out;
}

inline Spectrum spectrum_of(const Graph& g, const ClusterOptions& opt = {}) {
  return cluster_spectrum(eigenvalues_symmetric(g), opt).spectrum;
}

}  // namespace specx
