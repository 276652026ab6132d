#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "specx/distance.hpp"
#include "specx/error.hpp"
#include "specx/excess.hpp"
#include "specx/graph.hpp"
#include "specx/graph6.hpp"
#include "specx/predistance.hpp"
#include "specx/regularity.hpp"
#include "specx/scalar.hpp"
#include "specx/spectrum.hpp"

namespace specx {

/// A reported number: its double value and, on the exact path, "p/q".
struct Number {
  double value = 0;
  std::optional<std::string> exact;

  friend bool operator==(const Number&, const Number&) = default;
};

inline Number make_number(double v) { return {v, std::nullopt}; }
inline Number make_number(const Rational& v) { return {to_double(v), rational_string(v)}; }

struct SpectrumEntry {
  Number value;
  std::size_t multiplicity = 0;

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

struct PreintersectionSummary {
  std::vector<Number> alpha, beta, gamma;
  std::vector<Number> p_at_k;  // p_i(theta_0)
  std::vector<std::vector<Number>> p;  // monomial coefficients of p_i
  std::optional<Number> gamma2_closed_form;

  friend bool operator==(const PreintersectionSummary&, const PreintersectionSummary&) = default;
};

struct SpectralExcessSummary {
  std::string verdict;
  std::string reason;
  std::size_t index = 0;
  Number spectral, combinatorial, gap;

  friend bool operator==(const SpectralExcessSummary&, const SpectralExcessSummary&) = default;
};

struct DrgSummary {
  bool distance_regular = false;
  std::optional<std::string> intersection_array;
  std::optional<std::string> violation;

  friend bool operator==(const DrgSummary&, const DrgSummary&) = default;
};

struct SrgSummary {
  bool strongly_regular = false;
  std::optional<SrgParams> params;
  std::optional<std::string> violation;

  friend bool operator==(const SrgSummary&, const SrgSummary&) = default;
};

struct ExcessSummary {
  std::string theorem;
  int j = 1;
  std::string status;
  std::string reason;
  std::string distance_graph;
  std::vector<Number> s;  // monomial coefficients
  std::vector<Number> s_values;
  Number gamma2, tau, phi, target, gap;
  /// n - Phi against kbar_3 when d = 3; Phi against nbar_2 when d = 4.
  Number stated_bound, stated_target;
  std::string stated_label;
  std::vector<SpectrumEntry> derived_srg;
  /// Oracle verdict on the distance graph built from the input graph.
  std::optional<SrgSummary> distance_graph_oracle;
  /// Eigendecomposition of that distance graph, filled in under equality.
  std::vector<SpectrumEntry> distance_graph_spectrum;
  std::optional<bool> spectra_match;
  std::string conclusion;

  friend bool operator==(const ExcessSummary&, const ExcessSummary&) = default;
};

struct CriterionSummary {
  std::string name;
  std::string statement;
  bool satisfied = false;
  std::vector<double> values;

  friend bool operator==(const CriterionSummary&, const CriterionSummary&) = default;
};

struct CriteriaSummary {
  bool applicable = false;
  std::string reason;
  bool consistent = true;
  std::vector<CriterionSummary> criteria;
  std::vector<std::string> notes;

  friend bool operator==(const CriteriaSummary&, const CriteriaSummary&) = default;
};

inline constexpr int kSchemaVersion = 1;

struct AnalysisReport {
  int schema_version = kSchemaVersion;
  std::string source;
  std::string graph6;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t diameter = 0;
  std::size_t d = 0;
  bool integral_spectrum = false;
  bool exact_arithmetic = false;
  std::vector<SpectrumEntry> spectrum;
  std::vector<Number> kbar;
  std::vector<Number> nbar;
  PreintersectionSummary preintersection;
  std::size_t partial_dr_level = 0;
  std::vector<double> partial_dr_deviation;
  SpectralExcessSummary spectral_excess;
  DrgSummary drg;
  SrgSummary srg;
  std::vector<ExcessSummary> excess;
  std::optional<CriteriaSummary> criteria;
  std::vector<std::string> warnings;

  /// Number of excess reports with an equality verdict.
  std::size_t equalities() const {
    std::size_t count = 0;
    for (const auto& e : excess) count += e.status == to_string(ExcessStatus::Equality);
    return count;
  }

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

struct AnalysisOptions {
  ClusterOptions cluster;
  ExcessOptions excess;
  JacobiOptions jacobi;
  /// Entrywise tolerance for p_i(A) = A_i and for the spectral excess comparison.
  double oracle_tolerance = 1e-6;
  /// Relative agreement required between the closed form for gamma_2 and the recurrence.
  double gamma2_tolerance = 1e-6;
};

namespace detail {

template <class T>
std::vector<Number> numbers(const std::vector<T>& xs) {
  std::vector<Number> out;
  for (const auto& x : xs) out.push_back(make_number(x));
  return out;
}

template <class T>
std::vector<SpectrumEntry> entries(const BasicSpectrum<T>& s) {
  std::vector<SpectrumEntry> out;
  for (std::size_t i = 0; i < s.values.size(); ++i) out.push_back({make_number(s.values[i]), s.mult[i]});
  return out;
}

inline SrgSummary summarise(const SrgResult& r) {
  SrgSummary out;
  out.strongly_regular = r.strongly_regular();
  out.params = r.params;
  if (r.violation) {
    out.violation = r.violation->reason;
    if (r.violation->reason != "edgeless graph" && r.violation->reason != "complete graph")
      *out.violation += " at (" + std::to_string(r.violation->u) + "," + std::to_string(r.violation->v) +
                        "): " + std::to_string(r.violation->expected) + " vs " +
                        std::to_string(r.violation->found);
  }
  return out;
}

template <class T>
void analyse_spectrum(AnalysisReport& rep, const Graph& g, const DistanceDecomposition& dd,
                      const AverageCounts& ac, const BasicSpectrum<T>& spec, const AnalysisOptions& opt) {
  rep.spectrum = entries(spec);
  const auto ps = predistance_system(spec);

  auto& pre = rep.preintersection;
  pre.alpha = numbers(ps.alpha);
  pre.beta = numbers(ps.beta);
  pre.gamma = numbers(ps.gamma);
  for (std::size_t i = 0; i <= ps.d(); ++i) {
    pre.p_at_k.push_back(make_number(ps.at_k(i)));
    pre.p.push_back(numbers(ps.p[i].coefficients()));
  }
  if (ps.d() >= 2) {
    const T closed = gamma2_closed_form(spec);
    pre.gamma2_closed_form = make_number(closed);
    if (!nearly_equal(closed, ps.gamma[2], opt.gamma2_tolerance))
      throw NumericalError("gamma_2 from closed walks (" + std::to_string(to_double(closed)) +
                           ") disagrees with the recurrence (" + std::to_string(to_double(ps.gamma[2])) + ")");
  }

  const auto level = partial_dr_level(g, ps, dd, opt.oracle_tolerance);
  rep.partial_dr_level = level.level;
  rep.partial_dr_deviation = level.deviation;

  const auto se = spectral_excess_check(ps, ac, opt.oracle_tolerance);
  rep.spectral_excess = {to_string(se.verdict), se.reason, se.index, make_number(se.spectral),
                         make_number(se.combinatorial), make_number(se.gap)};

  const auto drg = drg_oracle(g, dd);
  rep.drg.distance_regular = drg.distance_regular();
  if (drg.array) rep.drg.intersection_array = drg.array->to_string();
  if (drg.violation) rep.drg.violation = drg.violation->describe();
  rep.srg = summarise(srg_oracle(g));

  if (ps.d() >= 2) {
    for (const auto& r : excess_reports(spec, ps.gamma[2], ac, opt.excess)) {
      ExcessSummary e;
      e.theorem = to_string(r.theorem);
      e.j = r.j;
      e.status = to_string(r.status);
      e.reason = r.reason;
      e.distance_graph = to_string(r.distance_graph());
      e.conclusion = r.conclusion;
      if (r.status != ExcessStatus::NotApplicable) {
        e.s = numbers(r.s.coefficients());
        e.s_values = numbers(r.s_values);
        e.gamma2 = make_number(r.gamma2);
        if (r.status != ExcessStatus::OptimizerUndefined) {
          e.tau = make_number(r.tau);
          e.phi = make_number(r.phi);
          e.gap = make_number(r.gap);
          e.stated_bound = make_number(r.stated_bound);
          e.stated_target = make_number(r.stated_target);
        }
        e.target = make_number(r.target);
        e.stated_label = spec.d() == 3 ? "n - Phi against kbar_3" : "Phi against nbar_2";
        const Graph dg = distance_power_graph(g, dd, r.distance_graph());
        e.distance_graph_oracle = summarise(srg_oracle(dg));
        if (r.derived_srg) {
          e.derived_srg = entries(*r.derived_srg);
          const Spectrum direct = cluster_spectrum(eigenvalues_symmetric(dg, opt.jacobi), opt.cluster).spectrum;
          if (const auto snapped = exact_spectrum(direct))
            e.distance_graph_spectrum = entries(*snapped);
          else
            e.distance_graph_spectrum = entries(direct);
          bool match = direct.values.size() == r.derived_srg->values.size();
          for (std::size_t i = 0; match && i < direct.values.size(); ++i)
            match = direct.mult[i] == r.derived_srg->mult[i] &&
                    nearly_equal(direct.values[i], to_double(r.derived_srg->values[i]), opt.oracle_tolerance);
          e.spectra_match = match;
          if (!match)
            rep.warnings.push_back(e.theorem + " j=" + std::to_string(e.j) +
                                   ": derived distance-graph spectrum differs from its eigendecomposition");
        }
        if (r.equality() && !e.distance_graph_oracle->strongly_regular)
          rep.warnings.push_back(e.theorem + " j=" + std::to_string(e.j) +
                                 ": equality reached but the constructed distance graph is not strongly regular");
        if (r.theorem == ExcessTheorem::D3Dist12 && r.derived_srg)
          rep.warnings.push_back("d3-dist12: distance-graph spectrum reconstructed from merged p1+p2 values");
        if (r.theorem == ExcessTheorem::D4Dist12 && r.status != ExcessStatus::OptimizerUndefined)
          rep.warnings.push_back("d4-dist12: s_2 uses the constant gamma_2 + theta_2 theta_3, so "
                                 "(p1+p2)(theta_2) = -tau_2/gamma_2; Phi does not depend on this choice");
      }
      rep.excess.push_back(std::move(e));
    }
  }

  if (drg.array) {
    const auto c = drg_criteria(*drg.array, spec, opt.oracle_tolerance);
    CriteriaSummary cs{c.applicable, c.reason, c.consistent, {}, c.notes};
    for (const auto& x : c.criteria) cs.criteria.push_back({x.name, x.statement, x.satisfied, x.values});
    if (!c.consistent) rep.warnings.push_back("closed-form criteria disagree with each other");
    rep.criteria = std::move(cs);
  }
}

}  // namespace detail

/// Full pipeline on one graph: distances, spectrum, predistance polynomials,
/// oracles and every applicable excess bound. Throws PreconditionError for
/// empty, irregular or disconnected input and NumericalError when internal
/// consistency checks fail.
inline AnalysisReport analyze(const Graph& g, std::string source, const AnalysisOptions& opt = {}) {
  if (g.order() == 0) throw PreconditionError("graph has no vertices");
  const auto reg = regular_degree(g);
  if (!reg.regular()) {
    const auto& m = *reg.mismatch;
    throw PreconditionError("graph is not regular: vertex " + std::to_string(m.u) + " has degree " +
                            std::to_string(m.degree_u) + ", vertex " + std::to_string(m.v) + " has degree " +
                            std::to_string(m.degree_v));
  }
  const DistanceDecomposition dd(g);
  const AverageCounts ac = average_counts(dd);

  AnalysisReport rep;
  rep.source = std::move(source);
  rep.graph6 = write_graph6(g);
  rep.n = g.order();
  rep.k = *reg.degree;
  rep.diameter = dd.diameter();
  rep.kbar = detail::numbers(ac.kbar);
  rep.nbar = detail::numbers(ac.nbar);

  const auto clustered = cluster_spectrum(eigenvalues_symmetric(g, opt.jacobi), opt.cluster);
  for (const auto& note : clustered.notes) rep.warnings.push_back(note);
  rep.d = clustered.spectrum.d();
  rep.integral_spectrum = clustered.integral;
  if (clustered.spectrum.mult[0] != 1)
    throw NumericalError("largest eigenvalue clustered with multiplicity " +
                         std::to_string(clustered.spectrum.mult[0]) + " in a connected graph");

  const auto exact = clustered.integral ? exact_spectrum(clustered.spectrum) : std::nullopt;
  if (exact) {
    rep.exact_arithmetic = true;
    detail::analyse_spectrum(rep, g, dd, ac, *exact, opt);
  } else {
    detail::analyse_spectrum(rep, g, dd, ac, clustered.spectrum, opt);
  }
  return rep;
}

}  // namespace specx
