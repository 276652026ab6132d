#pragma once

#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "specx/analysis.hpp"

namespace specx {

/// Exact form when known, otherwise up to 10 significant digits.
inline std::string format_number(const Number& x) {
  if (x.exact) return *x.exact;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x.value);
  return buf;
}

inline std::string format_spectrum(const std::vector<SpectrumEntry>& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i)
    out += (i ? ", " : "") + format_number(s[i].value) + "^" + std::to_string(s[i].multiplicity);
  return out;
}

inline std::string format_numbers(const std::vector<Number>& xs) {
  std::string out = "(";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + format_number(xs[i]);
  return out + ")";
}

/// Human-readable rendering of a report.
inline std::string render_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "graph " << r.source << "  (graph6 " << (r.graph6.size() > 40 ? r.graph6.substr(0, 37) + "..." : r.graph6)
     << ")\n";
  os << "  n=" << r.n << " k=" << r.k << " D=" << r.diameter << " d=" << r.d
     << (r.exact_arithmetic ? "  [exact rational arithmetic]" : "  [floating point]") << "\n";
  os << "  spectrum: " << format_spectrum(r.spectrum) << "\n";
  os << "  kbar: " << format_numbers(r.kbar) << "  nbar: " << format_numbers(r.nbar) << "\n";
  const auto& p = r.preintersection;
  os << "  preintersection a: " << format_numbers(p.alpha) << " b: " << format_numbers(p.beta)
     << " c: " << format_numbers(p.gamma) << "\n";
  os << "  p_i(k): " << format_numbers(p.p_at_k) << "\n";
  os << "  partial distance-regularity level: " << r.partial_dr_level << "\n";
  os << "  spectral excess: " << r.spectral_excess.verdict;
  if (!r.spectral_excess.reason.empty())
    os << " (" << r.spectral_excess.reason << ")";
  else
    os << " (q_" << r.spectral_excess.index << "(k) = " << format_number(r.spectral_excess.spectral)
       << ", nbar_" << r.spectral_excess.index << " = " << format_number(r.spectral_excess.combinatorial) << ")";
  os << "\n";
  os << "  drg oracle: "
     << (r.drg.distance_regular ? "distance-regular " + r.drg.intersection_array.value_or("")
                                : "not distance-regular: " + r.drg.violation.value_or(""))
     << "\n";
  os << "  srg oracle: ";
  if (r.srg.params)
    os << "strongly regular (" << r.srg.params->n << "," << r.srg.params->k << "," << r.srg.params->lambda << ","
       << r.srg.params->mu << ")\n";
  else
    os << "not strongly regular: " << r.srg.violation.value_or("") << "\n";

  if (r.excess.empty()) os << "  excess bounds: not applicable (d = " << r.d << ")\n";
  for (const auto& e : r.excess) {
    os << "  " << e.theorem << " j=" << e.j << ": " << e.status;
    if (e.status == "not applicable" || e.status == "optimizer undefined") {
      os << " - " << e.reason << "\n";
      continue;
    }
    os << "\n    tau=" << format_number(e.tau) << " Phi=" << format_number(e.phi) << " nbar_2="
       << format_number(e.target) << " gap=" << format_number(e.gap) << "\n";
    if (r.d == 3)
      os << "    n-Phi=" << format_number(e.stated_bound) << " kbar_3=" << format_number(e.stated_target) << "\n";
    if (!e.derived_srg.empty()) {
      os << "    " << e.distance_graph << " spectrum " << format_spectrum(e.derived_srg);
      if (e.spectra_match) os << (*e.spectra_match ? " (matches eigendecomposition)" : " (MISMATCH)");
      os << "\n";
    }
    if (e.distance_graph_oracle)
      os << "    " << e.distance_graph << " graph srg oracle: "
         << (e.distance_graph_oracle->strongly_regular ? "strongly regular" : "not strongly regular") << "\n";
    if (!e.conclusion.empty()) os << "    " << e.conclusion << "\n";
  }
  if (r.criteria) {
    os << "  closed-form criteria" << (r.criteria->applicable ? "" : ": " + r.criteria->reason) << "\n";
    for (const auto& c : r.criteria->criteria)
      os << "    " << (c.satisfied ? "[yes] " : "[no]  ") << c.name << ": " << c.statement << "\n";
  }
  for (const auto& w : r.warnings) os << "  warning: " << w << "\n";
  return os.str();
}

}  // namespace specx
