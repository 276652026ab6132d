#pragma once

// JSON form of AnalysisReport. Needs nlohmann/json 3.11 available as "json.hpp".

#include <optional>
#include <string>

#include "json.hpp"
#include "specx/analysis.hpp"
#include "specx/error.hpp"

namespace specx {

using json = nlohmann::json;

namespace detail {

template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <class T>
void get_optional(const json& j, const char* key, std::optional<T>& v) {
  if (auto it = j.find(key); it != j.end() && !it->is_null())
    v = it->template get<T>();
  else
    v.reset();
}

}  // namespace detail

inline void to_json(json& j, const Number& x) {
  j = json{{"value", x.value}};
  detail::put_optional(j, "exact", x.exact);
}
inline void from_json(const json& j, Number& x) {
  j.at("value").get_to(x.value);
  detail::get_optional(j, "exact", x.exact);
}

inline void to_json(json& j, const SpectrumEntry& x) {
  j = json{{"value", x.value}, {"multiplicity", x.multiplicity}};
}
inline void from_json(const json& j, SpectrumEntry& x) {
  j.at("value").get_to(x.value);
  j.at("multiplicity").get_to(x.multiplicity);
}

inline void to_json(json& j, const SrgParams& x) {
  j = json{{"n", x.n}, {"k", x.k}, {"lambda", x.lambda}, {"mu", x.mu}};
}
inline void from_json(const json& j, SrgParams& x) {
  j.at("n").get_to(x.n);
  j.at("k").get_to(x.k);
  j.at("lambda").get_to(x.lambda);
  j.at("mu").get_to(x.mu);
}

inline void to_json(json& j, const PreintersectionSummary& x) {
  j = json{{"alpha", x.alpha}, {"beta", x.beta}, {"gamma", x.gamma}, {"p_at_k", x.p_at_k}, {"p", x.p}};
  detail::put_optional(j, "gamma2_closed_form", x.gamma2_closed_form);
}
inline void from_json(const json& j, PreintersectionSummary& x) {
  j.at("alpha").get_to(x.alpha);
  j.at("beta").get_to(x.beta);
  j.at("gamma").get_to(x.gamma);
  j.at("p_at_k").get_to(x.p_at_k);
  j.at("p").get_to(x.p);
  detail::get_optional(j, "gamma2_closed_form", x.gamma2_closed_form);
}

inline void to_json(json& j, const SpectralExcessSummary& x) {
  j = json{{"verdict", x.verdict},   {"reason", x.reason},
           {"index", x.index},       {"spectral", x.spectral},
           {"combinatorial", x.combinatorial}, {"gap", x.gap}};
}
inline void from_json(const json& j, SpectralExcessSummary& x) {
  j.at("verdict").get_to(x.verdict);
  j.at("reason").get_to(x.reason);
  j.at("index").get_to(x.index);
  j.at("spectral").get_to(x.spectral);
  j.at("combinatorial").get_to(x.combinatorial);
  j.at("gap").get_to(x.gap);
}

inline void to_json(json& j, const DrgSummary& x) {
  j = json{{"distance_regular", x.distance_regular}};
  detail::put_optional(j, "intersection_array", x.intersection_array);
  detail::put_optional(j, "violation", x.violation);
}
inline void from_json(const json& j, DrgSummary& x) {
  j.at("distance_regular").get_to(x.distance_regular);
  detail::get_optional(j, "intersection_array", x.intersection_array);
  detail::get_optional(j, "violation", x.violation);
}

inline void to_json(json& j, const SrgSummary& x) {
  j = json{{"strongly_regular", x.strongly_regular}};
  detail::put_optional(j, "params", x.params);
  detail::put_optional(j, "violation", x.violation);
}
inline void from_json(const json& j, SrgSummary& x) {
  j.at("strongly_regular").get_to(x.strongly_regular);
  detail::get_optional(j, "params", x.params);
  detail::get_optional(j, "violation", x.violation);
}

inline void to_json(json& j, const ExcessSummary& x) {
  j = json{{"theorem", x.theorem},
           {"j", x.j},
           {"status", x.status},
           {"reason", x.reason},
           {"distance_graph", x.distance_graph},
           {"s", x.s},
           {"s_values", x.s_values},
           {"gamma2", x.gamma2},
           {"tau", x.tau},
           {"phi", x.phi},
           {"target", x.target},
           {"gap", x.gap},
           {"stated_bound", x.stated_bound},
           {"stated_target", x.stated_target},
           {"stated_label", x.stated_label},
           {"derived_srg", x.derived_srg},
           {"distance_graph_spectrum", x.distance_graph_spectrum},
           {"conclusion", x.conclusion}};
  detail::put_optional(j, "distance_graph_oracle", x.distance_graph_oracle);
  detail::put_optional(j, "spectra_match", x.spectra_match);
}
inline void from_json(const json& j, ExcessSummary& x) {
  j.at("theorem").get_to(x.theorem);
  j.at("j").get_to(x.j);
  j.at("status").get_to(x.status);
  j.at("reason").get_to(x.reason);
  j.at("distance_graph").get_to(x.distance_graph);
  j.at("s").get_to(x.s);
  j.at("s_values").get_to(x.s_values);
  j.at("gamma2").get_to(x.gamma2);
  j.at("tau").get_to(x.tau);
  j.at("phi").get_to(x.phi);
  j.at("target").get_to(x.target);
  j.at("gap").get_to(x.gap);
  j.at("stated_bound").get_to(x.stated_bound);
  j.at("stated_target").get_to(x.stated_target);
  j.at("stated_label").get_to(x.stated_label);
  j.at("derived_srg").get_to(x.derived_srg);
  j.at("distance_graph_spectrum").get_to(x.distance_graph_spectrum);
  j.at("conclusion").get_to(x.conclusion);
  detail::get_optional(j, "distance_graph_oracle", x.distance_graph_oracle);
  detail::get_optional(j, "spectra_match", x.spectra_match);
}

inline void to_json(json& j, const CriterionSummary& x) {
  j = json{{"name", x.name}, {"statement", x.statement}, {"satisfied", x.satisfied}, {"values", x.values}};
}
inline void from_json(const json& j, CriterionSummary& x) {
  j.at("name").get_to(x.name);
  j.at("statement").get_to(x.statement);
  j.at("satisfied").get_to(x.satisfied);
  j.at("values").get_to(x.values);
}

inline void to_json(json& j, const CriteriaSummary& x) {
  j = json{{"applicable", x.applicable}, {"reason", x.reason}, {"consistent", x.consistent},
           {"criteria", x.criteria},     {"notes", x.notes}};
}
inline void from_json(const json& j, CriteriaSummary& x) {
  j.at("applicable").get_to(x.applicable);
  j.at("reason").get_to(x.reason);
  j.at("consistent").get_to(x.consistent);
  j.at("criteria").get_to(x.criteria);
  j.at("notes").get_to(x.notes);
}

inline void to_json(json& j, const AnalysisReport& x) {
  j = json{{"schema_version", x.schema_version},
           {"source", x.source},
           {"graph6", x.graph6},
           {"n", x.n},
           {"k", x.k},
           {"diameter", x.diameter},
           {"d", x.d},
           {"integral_spectrum", x.integral_spectrum},
           {"exact_arithmetic", x.exact_arithmetic},
           {"spectrum", x.spectrum},
           {"kbar", x.kbar},
           {"nbar", x.nbar},
           {"preintersection", x.preintersection},
           {"partial_dr_level", x.partial_dr_level},
           {"partial_dr_deviation", x.partial_dr_deviation},
           {"spectral_excess", x.spectral_excess},
           {"drg", x.drg},
           {"srg", x.srg},
           {"excess", x.excess},
           {"warnings", x.warnings}};
  detail::put_optional(j, "criteria", x.criteria);
}
inline void from_json(const json& j, AnalysisReport& x) {
  j.at("schema_version").get_to(x.schema_version);
  if (x.schema_version != kSchemaVersion)
    throw ParseError("report schema_version " + std::to_string(x.schema_version) + " is not supported");
  j.at("source").get_to(x.source);
  j.at("graph6").get_to(x.graph6);
  j.at("n").get_to(x.n);
  j.at("k").get_to(x.k);
  j.at("diameter").get_to(x.diameter);
  j.at("d").get_to(x.d);
  j.at("integral_spectrum").get_to(x.integral_spectrum);
  j.at("exact_arithmetic").get_to(x.exact_arithmetic);
  j.at("spectrum").get_to(x.spectrum);
  j.at("kbar").get_to(x.kbar);
  j.at("nbar").get_to(x.nbar);
  j.at("preintersection").get_to(x.preintersection);
  j.at("partial_dr_level").get_to(x.partial_dr_level);
  j.at("partial_dr_deviation").get_to(x.partial_dr_deviation);
  j.at("spectral_excess").get_to(x.spectral_excess);
  j.at("drg").get_to(x.drg);
  j.at("srg").get_to(x.srg);
  j.at("excess").get_to(x.excess);
  j.at("warnings").get_to(x.warnings);
  detail::get_optional(j, "criteria", x.criteria);
}

inline std::string render_json(const AnalysisReport& r, int indent = 2) { return json(r).dump(indent); }

/// Inverse of render_json; throws ParseError on malformed or mismatched input.
inline AnalysisReport parse_report(const std::string& text) {
  try {
    return json::parse(text).get<AnalysisReport>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
}

}  // namespace specx
