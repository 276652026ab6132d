#pragma once

// Spectral excess bounds for regular graphs with d = 3 or d = 4 whose
// distance-2 or distance-1-or-2 graph is strongly regular.
//
// For a monic quadratic s and a shift tau, r = s - tau has degree 2, so
//
//   Phi(tau) = r(theta_0)^2 / ||r||^2 <= nbar_2
//
// for every regular graph. The maximiser over tau has the closed form
//
//   tau = (s0 S1 - S2) / (s0 (n-1) - S1),  S1 = sum_{i>=1} m_i s(theta_i),
//                                          S2 = sum_{i>=1} m_i s(theta_i)^2,
//
// with s0 = s(theta_0). The quadratics s_j are chosen so that r is a multiple
// of q_2 = p_0 + p_1 + p_2 exactly when p_2 (or p_1 + p_2) takes equal values
// on a prescribed pair of eigenvalues. Equality Phi(tau_j) = nbar_2 then
// characterises the graphs whose distance-2 (or distance-1-or-2) graph is
// strongly regular and which are distance-regular (d = 3) or 2-partially
// distance-regular (d = 4).
//
// For d = 3 the bound is usually quoted as an upper bound on kbar_3, the mean
// number of vertices at distance 3:
//
//   kbar_3 <= n - Phi(tau_j) = n sum_{i>=1} m_i (s(theta_i)-tau)^2 / sum_i m_i (s(theta_i)-tau)^2.
//
// Reports carry both forms: `phi`/`target` (Phi against nbar_2) and
// `stated_bound`/`stated_target` (n - Phi against kbar_3 when d = 3).

#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "specx/distance.hpp"
#include "specx/error.hpp"
#include "specx/poly.hpp"
#include "specx/predistance.hpp"
#include "specx/regularity.hpp"
#include "specx/scalar.hpp"
#include "specx/spectrum.hpp"

namespace specx {

enum class ExcessTheorem { D3Dist2, D3Dist12, D4Dist2, D4Dist12 };

inline std::string to_string(ExcessTheorem t) {
  switch (t) {
    case ExcessTheorem::D3Dist2: return "d3-dist2";
    case ExcessTheorem::D3Dist12: return "d3-dist12";
    case ExcessTheorem::D4Dist2: return "d4-dist2";
    case ExcessTheorem::D4Dist12: return "d4-dist12";
  }
  return "?";
}

inline DistanceGraph distance_graph_of(ExcessTheorem t) {
  return t == ExcessTheorem::D3Dist2 || t == ExcessTheorem::D4Dist2 ? DistanceGraph::Dist2
                                                                    : DistanceGraph::Dist12;
}

enum class ExcessStatus { Equality, Strict, NotApplicable, OptimizerUndefined, BoundViolated };

inline std::string to_string(ExcessStatus s) {
  switch (s) {
    case ExcessStatus::Equality: return "equality";
    case ExcessStatus::Strict: return "strict";
    case ExcessStatus::NotApplicable: return "not applicable";
    case ExcessStatus::OptimizerUndefined: return "optimizer undefined";
    case ExcessStatus::BoundViolated: return "bound violated";
  }
  return "?";
}

struct ExcessOptions {
  /// |Phi - target| <= equality_tolerance * max(1, target) counts as equality.
  double equality_tolerance = 1e-6;
  /// Relative threshold for the eigenvalue-sum precondition when d = 4.
  double precondition_tolerance = 1e-6;
  /// Relative threshold under which the tau denominator counts as zero.
  double denominator_tolerance = 1e-9;
};

template <class T>
struct ExcessReport {
  ExcessTheorem theorem = ExcessTheorem::D3Dist2;
  int j = 1;
  ExcessStatus status = ExcessStatus::NotApplicable;
  std::string reason;

  Poly<T> s;
  std::vector<T> s_values;  // s(theta_i), i = 0..d
  T gamma2 = 0;
  T tau = 0;
  T phi = 0;
  T target = 0;  // nbar_2
  T gap = 0;     // target - phi
  T stated_bound = 0;
  T stated_target = 0;
  /// Eigenvalue classes on which the distance-graph polynomial must coincide.
  std::vector<std::vector<std::size_t>> merged_classes;
  /// gamma_2 times the common distance-graph eigenvalue on the first merged class.
  T sigma = 0;
  std::optional<BasicSpectrum<T>> derived_srg;
  std::string conclusion;

  bool equality() const { return status == ExcessStatus::Equality; }
  DistanceGraph distance_graph() const { return distance_graph_of(theorem); }
};

/// Closed-form maximiser of Phi over tau; nullopt when the denominator
/// s0 (n-1) - S1 vanishes.
template <class T>
std::optional<T> optimal_tau(const Poly<T>& s, const BasicSpectrum<T>& spec,
                             double denominator_tolerance = 1e-9) {
  const T s0 = s(spec.values[0]);
  T s1 = 0, s2 = 0, magnitude = 0;
  for (std::size_t i = 1; i < spec.values.size(); ++i) {
    const T v = s(spec.values[i]);
    s1 += T(spec.mult[i]) * v;
    s2 += T(spec.mult[i]) * v * v;
    magnitude += T(spec.mult[i]) * scalar_abs(v);
  }
  const T den = s0 * T(spec.order() - 1) - s1;
  const T scale = scalar_abs(s0) * T(spec.order() - 1) + magnitude;
  if (nearly_zero(den, to_double(scale), denominator_tolerance)) return std::nullopt;
  return T((s0 * s1 - s2) / den);
}

/// Phi(tau) = n (s(theta_0) - tau)^2 / sum_i m_i (s(theta_i) - tau)^2.
template <class T>
T phi(const T& tau, const Poly<T>& s, const BasicSpectrum<T>& spec) {
  T den = 0;
  for (std::size_t i = 0; i < spec.values.size(); ++i) {
    const T v = s(spec.values[i]) - tau;
    den += T(spec.mult[i]) * v * v;
  }
  if (den == T(0)) throw PreconditionError("phi: s - tau vanishes on the whole spectrum");
  const T top = s(spec.values[0]) - tau;
  return T(spec.order()) * top * top / den;
}

/// Eigenvalues of the distance graph read off r = s - tau = gamma_2 q_2, the
/// principal one being nbar_2 - theta_0 - 1 (distance-2) or nbar_2 - 1.
/// Only meaningful under an equality verdict.
template <class T>
BasicSpectrum<T> derived_srg_spectrum(const ExcessReport<T>& report, const BasicSpectrum<T>& spec,
                                      double tolerance = 1e-6) {
  if (!report.equality())
    throw PreconditionError("derived SRG spectrum requested for a report without equality");
  const bool dist2 = report.distance_graph() == DistanceGraph::Dist2;
  std::vector<T> vals;
  vals.push_back(dist2 ? T(report.target - spec.values[0] - 1) : T(report.target - 1));
  for (std::size_t i = 1; i < spec.values.size(); ++i) {
    const T q2 = (report.s_values[i] - report.tau) / report.gamma2;
    vals.push_back(dist2 ? T(q2 - spec.values[i] - 1) : T(q2 - 1));
  }
  return merge_equal(vals, spec.mult, tolerance);
}

/// lambda_0, lambda_1, lambda_2 for the d = 3 distance-2 case, written in
/// terms of theta_i, tau_j and gamma_2 as in the classical statement.
template <class T>
std::array<T, 3> d3_dist2_eigenvalues(const ExcessReport<T>& report, const BasicSpectrum<T>& spec,
                                      const AverageCounts& ac) {
  if (report.theorem != ExcessTheorem::D3Dist2 || spec.d() != 3)
    throw PreconditionError("d3_dist2_eigenvalues applies to the d = 3 distance-2 report only");
  const auto& th = spec.values;
  const T n(spec.order());
  const T l0 = n - from_rational<T>(ac.k(3)) - th[0] - 1;
  if (report.j == 1)
    return {l0, T(((th[1] - th[2]) * (th[2] - th[3]) - report.tau) / report.gamma2),
            T(-report.tau / report.gamma2)};
  return {l0, T(-report.tau / report.gamma2),
          T(((th[1] - th[3]) * (th[3] - th[2]) - report.tau) / report.gamma2)};
}

namespace detail {

template <class T>
ExcessReport<T> evaluate_excess(ExcessTheorem theorem, int j, Poly<T> s,
                                std::vector<std::vector<std::size_t>> classes,
                                const BasicSpectrum<T>& spec, const T& gamma2,
                                const AverageCounts& ac, const ExcessOptions& opt) {
  ExcessReport<T> r;
  r.theorem = theorem;
  r.j = j;
  r.s = std::move(s);
  r.gamma2 = gamma2;
  r.merged_classes = std::move(classes);
  for (const auto& th : spec.values) r.s_values.push_back(r.s(th));
  r.target = from_rational<T>(ac.cumulative(2));

  const auto tau = optimal_tau(r.s, spec, opt.denominator_tolerance);
  if (!tau) {
    r.status = ExcessStatus::OptimizerUndefined;
    r.reason = "optimizer undefined: s(theta_0)(n-1) - sum m_i s(theta_i) vanishes";
    return r;
  }
  r.tau = *tau;
  r.phi = phi(r.tau, r.s, spec);
  r.gap = r.target - r.phi;
  const bool d3 = theorem == ExcessTheorem::D3Dist2 || theorem == ExcessTheorem::D3Dist12;
  if (d3) {
    r.stated_bound = T(spec.order()) - r.phi;
    r.stated_target = from_rational<T>(ac.k(3));
  } else {
    r.stated_bound = r.phi;
    r.stated_target = r.target;
  }

  const std::size_t first = r.merged_classes.front().front();
  const T q2_first = (r.s_values[first] - r.tau) / gamma2;
  const T shift = distance_graph_of(theorem) == DistanceGraph::Dist2 ? T(spec.values[first] + 1) : T(1);
  r.sigma = gamma2 * (q2_first - shift);

  const std::string graph = distance_graph_of(theorem) == DistanceGraph::Dist2
                                ? "distance-2 graph"
                                : "distance-1-or-2 graph";
  if (nearly_equal(r.phi, r.target, opt.equality_tolerance)) {
    r.status = ExcessStatus::Equality;
    r.conclusion = std::string(d3 ? "distance-regular" : "2-partially distance-regular") +
                   " and the " + graph + " is strongly regular";
    r.derived_srg = derived_srg_spectrum(r, spec, opt.equality_tolerance);
  } else if (r.gap > T(0)) {
    r.status = ExcessStatus::Strict;
    r.conclusion = "strict inequality: not " +
                   std::string(d3 ? "distance-regular" : "2-partially distance-regular") +
                   " with a strongly regular " + graph + " (for this j)";
  } else {
    r.status = ExcessStatus::BoundViolated;
    r.reason = "Phi exceeds nbar_2; spectrum and distance counts are inconsistent";
  }
  return r;
}

template <class T>
std::array<ExcessReport<T>, 2> not_applicable(ExcessTheorem t1, ExcessTheorem t2, const std::string& why) {
  std::array<ExcessReport<T>, 2> out;
  out[0].theorem = t1;
  out[0].j = 1;
  out[1].theorem = t2;
  out[1].j = 2;
  for (auto& r : out) {
    r.status = ExcessStatus::NotApplicable;
    r.reason = "not applicable: " + why;
  }
  return out;
}

template <class T>
void check_inputs(const BasicSpectrum<T>& spec, const T& gamma2, const AverageCounts& ac) {
  validate_spectrum(spec);
  if (!(gamma2 > T(0))) throw PreconditionError("gamma_2 must be positive");
  if (ac.n != spec.order())
    throw PreconditionError("distance counts and spectrum describe graphs of different order");
}

}  // namespace detail

/// d = 3, distance-2 graph. j = 1 merges {theta_1, theta_3}, j = 2 merges {theta_1, theta_2}.
template <class T>
std::array<ExcessReport<T>, 2> theorem_d3_dist2(const BasicSpectrum<T>& spec, const T& gamma2,
                                                const AverageCounts& ac, const ExcessOptions& opt = {}) {
  if (spec.d() != 3)
    return detail::not_applicable<T>(ExcessTheorem::D3Dist2, ExcessTheorem::D3Dist2,
                                     "d != 3 (d = " + std::to_string(spec.d()) + ")");
  detail::check_inputs(spec, gamma2, ac);
  const auto& t = spec.values;
  const Poly<T> s1({T(gamma2 + t[2] * (t[1] - t[2] + t[3])), T(-(t[1] + t[3] - gamma2)), T(1)});
  const Poly<T> s2({T(gamma2 + t[3] * (t[1] - t[3] + t[2])), T(-(t[1] + t[2] - gamma2)), T(1)});
  return {detail::evaluate_excess(ExcessTheorem::D3Dist2, 1, s1, {{1, 3}, {2}}, spec, gamma2, ac, opt),
          detail::evaluate_excess(ExcessTheorem::D3Dist2, 2, s2, {{1, 2}, {3}}, spec, gamma2, ac, opt)};
}

/// d = 3, distance-1-or-2 graph.
template <class T>
std::array<ExcessReport<T>, 2> theorem_d3_dist12(const BasicSpectrum<T>& spec, const T& gamma2,
                                                 const AverageCounts& ac, const ExcessOptions& opt = {}) {
  if (spec.d() != 3)
    return detail::not_applicable<T>(ExcessTheorem::D3Dist12, ExcessTheorem::D3Dist12,
                                     "d != 3 (d = " + std::to_string(spec.d()) + ")");
  detail::check_inputs(spec, gamma2, ac);
  const auto& t = spec.values;
  const Poly<T> s1({T(gamma2 + t[2] * (t[1] - t[2] + t[3])), T(-(t[1] + t[3])), T(1)});
  const Poly<T> s2({T(gamma2 + t[3] * (t[1] - t[3] + t[2])), T(-(t[1] + t[2])), T(1)});
  return {detail::evaluate_excess(ExcessTheorem::D3Dist12, 1, s1, {{1, 3}, {2}}, spec, gamma2, ac, opt),
          detail::evaluate_excess(ExcessTheorem::D3Dist12, 2, s2, {{1, 2}, {3}}, spec, gamma2, ac, opt)};
}

/// d = 4 with theta_1 + theta_4 = theta_2 + theta_3. j = 1 concerns the
/// distance-2 graph, j = 2 the distance-1-or-2 graph; both merge
/// {theta_1, theta_4} and {theta_2, theta_3}.
///
/// s_2 carries the constant gamma_2 + theta_2 theta_3, which makes
/// (p_1 + p_2)(theta_2) = -tau_2 / gamma_2. Phi and the verdict do not depend
/// on the constant term; only the location of tau_2 does.
template <class T>
std::array<ExcessReport<T>, 2> theorem_d4(const BasicSpectrum<T>& spec, const T& gamma2,
                                          const AverageCounts& ac, const ExcessOptions& opt = {}) {
  if (spec.d() != 4)
    return detail::not_applicable<T>(ExcessTheorem::D4Dist2, ExcessTheorem::D4Dist12,
                                     "d != 4 (d = " + std::to_string(spec.d()) + ")");
  const auto& t = spec.values;
  if (!nearly_equal(T(t[1] + t[4]), T(t[2] + t[3]), opt.precondition_tolerance))
    return detail::not_applicable<T>(ExcessTheorem::D4Dist2, ExcessTheorem::D4Dist12,
                                     "eigenvalue sum condition fails (theta1+theta4 != theta2+theta3)");
  detail::check_inputs(spec, gamma2, ac);
  const Poly<T> s1({T(t[2] * t[3]), T(-(t[2] + t[3] - gamma2)), T(1)});
  const Poly<T> s2({T(gamma2 + t[2] * t[3]), T(-(t[2] + t[3])), T(1)});
  return {detail::evaluate_excess(ExcessTheorem::D4Dist2, 1, s1, {{1, 4}, {2, 3}}, spec, gamma2, ac, opt),
          detail::evaluate_excess(ExcessTheorem::D4Dist12, 2, s2, {{1, 4}, {2, 3}}, spec, gamma2, ac, opt)};
}

/// Every excess report applicable to the spectrum (none unless d is 3 or 4).
template <class T>
std::vector<ExcessReport<T>> excess_reports(const BasicSpectrum<T>& spec, const T& gamma2,
                                            const AverageCounts& ac, const ExcessOptions& opt = {}) {
  std::vector<ExcessReport<T>> out;
  if (spec.d() == 3) {
    for (auto& r : theorem_d3_dist2(spec, gamma2, ac, opt)) out.push_back(std::move(r));
    for (auto& r : theorem_d3_dist12(spec, gamma2, ac, opt)) out.push_back(std::move(r));
  } else if (spec.d() == 4) {
    for (auto& r : theorem_d4(spec, gamma2, ac, opt)) out.push_back(std::move(r));
  }
  return out;
}

struct TauCrosscheck {
  double tau_closed = 0;
  double tau_numeric = 0;
  double phi_closed = 0;
  double phi_numeric = 0;
  bool interior = false;
  bool agreement = false;
  std::string note;
};

/// Maximises Phi numerically on [tau - w, tau + w], w = 10 (1 + |tau|), by a
/// grid scan followed by golden-section refinement, and compares with the
/// closed-form maximiser.
inline TauCrosscheck tau_optimizer_crosscheck(const Poly<double>& s, const Spectrum& spec) {
  TauCrosscheck out;
  const auto closed = optimal_tau(s, spec);
  if (!closed) throw PreconditionError("tau crosscheck: closed-form denominator vanishes");
  out.tau_closed = *closed;
  out.phi_closed = phi(out.tau_closed, s, spec);

  const double width = 10.0 * (1.0 + std::fabs(out.tau_closed));
  const double lo = out.tau_closed - width;
  const double hi = out.tau_closed + width;
  constexpr int kGrid = 4000;
  const double h = (hi - lo) / kGrid;
  int best = 0;
  double best_val = -1.0;
  for (int i = 0; i <= kGrid; ++i) {
    const double v = phi(lo + i * h, s, spec);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  out.interior = best > 0 && best < kGrid;
  if (!out.interior) out.note = "no interior maximum found in the search bracket";

  double a = lo + std::max(best - 1, 0) * h;
  double b = lo + std::min(best + 1, kGrid) * h;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = phi(x1, s, spec);
  double f2 = phi(x2, s, spec);
  for (int it = 0; it < 200 && (b - a) > 1e-13 * std::max(1.0, std::fabs(a)); ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = phi(x2, s, spec);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = phi(x1, s, spec);
    }
  }
  out.tau_numeric = 0.5 * (a + b);
  out.phi_numeric = phi(out.tau_numeric, s, spec);
  out.agreement = std::fabs(out.phi_closed - out.phi_numeric) <= 1e-8 * out.phi_closed &&
                  out.phi_closed >= out.phi_numeric - 1e-8;
  return out;
}

}  // namespace specx
