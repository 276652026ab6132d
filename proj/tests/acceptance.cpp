// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "specx/analysis.hpp"
#include "specx/families.hpp"
#include "specx/graph6.hpp"
#include "specx/report_text.hpp"

using namespace specx;
namespace f = specx::families;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

/// Collects failed expectations for one criterion.
struct Log {
  std::vector<std::string> failures;
  std::vector<std::string> facts;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { facts.push_back(s); }
};

bool rel_close(double a, double b, double tol) { return std::fabs(a - b) <= tol * std::max(1.0, std::fabs(b)); }

const ExcessSummary* find(const AnalysisReport& r, const std::string& theorem, int j) {
  for (const auto& e : r.excess)
    if (e.theorem == theorem && e.j == j) return &e;
  return nullptr;
}

const CriterionSummary* criterion(const AnalysisReport& r, const std::string& name) {
  if (!r.criteria) return nullptr;
  for (const auto& c : r.criteria->criteria)
    if (c.name == name) return &c;
  return nullptr;
}

std::string exact_or(const Number& x) { return x.exact.value_or("<inexact>"); }

BasicSpectrum<Rational> exact_of(const Graph& g) {
  const auto s = exact_spectrum(spectrum_of(g));
  if (!s) throw NumericalError("spectrum is not integral");
  return *s;
}

std::vector<Rational> values_of(const Poly<Rational>& p, const BasicSpectrum<Rational>& s) {
  std::vector<Rational> out;
  for (const auto& t : s.values) out.push_back(p(t));
  return out;
}

std::vector<Rational> ints(std::initializer_list<long long> xs) {
  std::vector<Rational> out;
  for (long long x : xs) out.emplace_back(x);
  return out;
}

void criterion1(Log& log) {
  const auto t0 = Clock::now();
  const auto r = analyze(f::odd(4), "odd:4");
  const auto* a = find(r, "d3-dist2", 1);
  const auto* b = find(r, "d3-dist2", 2);
  log.expect(a && b, "d3-dist2 reports present");
  if (!a || !b) return;
  log.expect(exact_or(a->tau) == "18/5", "tau_1 = 18/5, got " + exact_or(a->tau));
  log.expect(exact_or(a->stated_bound) == "138/7", "bound_1 = 138/7, got " + exact_or(a->stated_bound));
  log.expect(exact_or(b->tau) == "-8", "tau_2 = -8, got " + exact_or(b->tau));
  log.expect(exact_or(b->stated_bound) == "22", "bound_2 = 22, got " + exact_or(b->stated_bound));
  log.expect(a->status == "strict" && b->status == "strict", "both verdicts strict");

  // Floating-point path against the exact values.
  const Graph g = f::odd(4);
  const Spectrum s = spectrum_of(g);
  const auto ps = predistance_system(s);
  const auto rd = theorem_d3_dist2(s, ps.gamma[2], average_counts(DistanceDecomposition(g)));
  log.expect(rel_close(rd[0].tau, 18.0 / 5.0, 1e-8), "double tau_1 within 1e-8");
  log.expect(rel_close(rd[0].stated_bound, 138.0 / 7.0, 1e-8), "double bound_1 within 1e-8");
  log.expect(rel_close(rd[1].tau, -8.0, 1e-8), "double tau_2 within 1e-8");
  log.expect(rel_close(rd[1].stated_bound, 22.0, 1e-8), "double bound_2 within 1e-8");
  log.expect(rd[0].status == ExcessStatus::Strict && rd[1].status == ExcessStatus::Strict, "double verdicts strict");
  const double secs = seconds_since(t0);
  log.expect(secs < 1.0, "runtime < 1 s");
  std::ostringstream os;
  os << "tau=" << exact_or(a->tau) << "," << exact_or(b->tau) << " bound=" << exact_or(a->stated_bound) << ","
     << exact_or(b->stated_bound) << " kbar_3=" << exact_or(a->stated_target) << " " << secs << "s";
  log.note(os.str());
}

void criterion2(Log& log) {
  const auto r = analyze(f::odd(4), "odd:4");
  const auto* e = find(r, "d3-dist12", 1);
  log.expect(e != nullptr, "d3-dist12 j=1 present");
  if (!e) return;
  log.expect(exact_or(e->tau) == "4", "tau = 4");
  log.expect(exact_or(e->stated_bound) == "18", "bound = 18");
  log.expect(exact_or(e->stated_target) == "18", "kbar_3 = 18");
  log.expect(e->status == "equality", "equality verdict");
  log.expect(e->distance_graph_oracle && e->distance_graph_oracle->strongly_regular, "srg oracle accepts");
  log.expect(format_spectrum(e->derived_srg) == "16^1, 2^20, -4^14", "derived spectrum");
  log.expect(e->derived_srg == e->distance_graph_spectrum, "derived equals computed spectrum");
  log.expect(e->spectra_match == true, "spectra_match flag");
  log.note("derived " + format_spectrum(e->derived_srg) + " computed " + format_spectrum(e->distance_graph_spectrum));
}

void criterion3(Log& log) {
  const Graph g = f::hamming(4, 3);
  const auto spec = exact_of(g);
  const auto& t = spec.values;
  log.expect(t.size() == 5 && t[1] + t[4] == 1 && t[2] + t[3] == 1, "theta1+theta4 = theta2+theta3 = 1");
  const auto ps = predistance_system(spec);
  const Poly<Rational> expected({Rational(-4), Rational(-1, 2), Rational(1, 2)});
  log.expect(ps.p[2] == expected, "p_2 = (x^2-x-8)/2, got " + to_string(ps.p[2]));
  log.expect(values_of(ps.p[2], spec) == ints({24, 6, -3, -3, 6}), "p_2 values (24,6,-3,-3,6)");

  const auto r = analyze(g, "hamming:4,3");
  const auto* e = find(r, "d4-dist2", 1);
  log.expect(e != nullptr, "d4-dist2 j=1 present");
  if (!e) return;
  log.expect(exact_or(e->tau) == "4", "tau = 4");
  log.expect(exact_or(e->phi) == "33" && exact_or(e->target) == "33", "Phi = 33 = nbar_2");
  log.expect(e->status == "equality", "equality verdict");
  log.expect(format_spectrum(e->derived_srg) == "24^1, 6^24, -3^56", "formula spectrum");
  log.expect(format_spectrum(e->distance_graph_spectrum) == "24^1, 6^24, -3^56", "eigendecomposition spectrum");
  log.expect(e->distance_graph_oracle && e->distance_graph_oracle->params == SrgParams{81, 24, 9, 6},
             "srg(81,24,9,6)");
  log.note("p_2=" + to_string(ps.p[2]) + " Phi=" + exact_or(e->phi) + " spectrum " +
           format_spectrum(e->distance_graph_spectrum));
}

void criterion4(Log& log) {
  const Graph g = f::odd(5);
  const auto spec = exact_of(g);
  const auto ps = predistance_system(spec);
  const Poly<Rational> sum = ps.p[1] + ps.p[2];
  log.expect(sum == Poly<Rational>(ints({-5, 1, 1})), "p_1+p_2 = x^2+x-5, got " + to_string(sum));
  log.expect(values_of(sum, spec) == ints({25, 7, -3, -3, 7}), "p_1+p_2 values (25,7,-3,-3,7)");

  const auto r = analyze(g, "odd:5");
  const auto* e = find(r, "d4-dist12", 2);
  log.expect(e != nullptr, "d4-dist12 j=2 present");
  if (!e) return;
  log.expect(exact_or(e->tau) == "3", "tau = 3, got " + exact_or(e->tau));
  log.expect(exact_or(e->phi) == "26" && exact_or(e->target) == "26", "Phi = 26 = nbar_2");
  log.expect(e->status == "equality", "equality verdict");
  log.expect(format_spectrum(e->derived_srg) == "25^1, 7^35, -3^90", "formula spectrum");
  log.expect(format_spectrum(e->distance_graph_spectrum) == "25^1, 7^35, -3^90", "eigendecomposition spectrum");
  log.expect(e->distance_graph_oracle && e->distance_graph_oracle->strongly_regular, "srg oracle accepts");
  log.note("tau=" + exact_or(e->tau) + " Phi=" + exact_or(e->phi) + " spectrum " +
           format_spectrum(e->distance_graph_spectrum));
}

void criterion5(Log& log) {
  const auto t0 = Clock::now();
  const auto corpus = fixtures::corpus();
  log.expect(corpus.size() >= 20, "corpus has at least 20 graphs");
  std::size_t excess_cmp = 0, theorem_cmp = 0, equalities = 0;
  for (const auto& [name, g] : corpus) {
    const auto r = analyze(g, name);
    if (r.diameter == r.d && r.spectral_excess.verdict != "not applicable") {
      ++excess_cmp;
      log.expect((r.spectral_excess.verdict == "distance-regular") == r.drg.distance_regular,
                 name + ": spectral excess vs drg oracle");
    }
    for (const std::string theorem : {"d3-dist2", "d3-dist12", "d4-dist2", "d4-dist12"}) {
      bool applicable = false, equality = false, srg = false;
      for (const auto& e : r.excess) {
        if (e.theorem != theorem || e.status == "not applicable") continue;
        log.expect(e.status != "bound violated", name + " " + theorem + ": bound violated");
        log.expect(e.status != "optimizer undefined", name + " " + theorem + ": optimizer undefined");
        applicable = true;
        equality = equality || e.status == "equality";
        srg = e.distance_graph_oracle && e.distance_graph_oracle->strongly_regular;
      }
      if (!applicable) continue;
      ++theorem_cmp;
      const bool regular_enough = r.d == 3 ? r.drg.distance_regular : r.partial_dr_level >= 2;
      const bool truth = regular_enough && srg;
      log.expect(equality == truth, name + " " + theorem + ": equality=" + std::to_string(equality) +
                                        " oracles=" + std::to_string(truth));
      equalities += equality;
    }
  }
  const double secs = seconds_since(t0);
  log.expect(secs < 30.0, "runtime < 30 s");
  std::ostringstream os;
  os << corpus.size() << " graphs, " << excess_cmp << " spectral-excess and " << theorem_cmp
     << " bound comparisons, " << equalities << " equalities, " << secs << "s";
  log.note(os.str());
}

void criterion6(Log& log) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  std::size_t checks = 0;
  const auto corpus = fixtures::corpus();
  for (const auto& [name, g] : corpus) {
    const Spectrum s = spectrum_of(g);
    const auto ps = predistance_system(s);
    const double n = static_cast<double>(g.order());
    const double k = s.largest();
    for (std::size_t i = 0; i <= ps.d(); ++i) {
      const double pk = ps.at_k(i);
      log.expect(rel_close(inner_product(ps.p[i], ps.p[i], s), pk, 1e-8), name + ": ||p_i||^2 = p_i(k)");
      log.expect(std::fabs(ps.alpha[i] + ps.beta[i] + ps.gamma[i] - k) <= 1e-8 * k, name + ": a+b+c = k");
      for (std::size_t j = 0; j < i; ++j)
        log.expect(std::fabs(inner_product(ps.p[i], ps.p[j], s)) <= 1e-8 * n, name + ": orthogonality");
      checks += 2 + i;
    }
    if (ps.d() >= 2) {
      log.expect(rel_close(gamma2_closed_form(s), ps.gamma[2], 1e-8), name + ": gamma_2 closed form");
      ++checks;
    }
    log.expect(apply_poly(ps.hoffman, g).max_abs_diff(DenseMatrix(g.order(), 1.0)) <= 1e-6, name + ": H(A) = J");
    ++checks;
    for (std::size_t l = 0; l <= ps.d(); ++l) {
      const double bound = ps.sum_at_k(l);
      log.expect(rel_close(peak_ratio(ps.q[l], s), bound, 1e-8), name + ": q_l attains the maximum");
      for (int trial = 0; trial < 1000; ++trial) {
        std::vector<double> c(l + 1);
        for (auto& v : c) v = coef(rng);
        const Poly<double> r(c);
        if (r.is_zero()) continue;
        log.expect(peak_ratio(r, s) <= bound * (1 + 1e-9), name + ": random polynomial beats q_l");
        ++checks;
      }
    }
  }
  log.note(std::to_string(corpus.size()) + " graphs, " + std::to_string(checks) + " checks, " +
           std::to_string(log.failures.size()) + " violations");
}

void criterion7(Log& log) {
  std::mt19937_64 rng(99);
  std::size_t evaluated = 0;
  for (const auto& [name, g] : fixtures::corpus()) {
    const Spectrum s = spectrum_of(g);
    if (s.d() != 3 && s.d() != 4) continue;
    const auto ps = predistance_system(s);
    const auto ac = average_counts(DistanceDecomposition(g));
    for (const auto& r : excess_reports(s, ps.gamma[2], ac)) {
      if (r.status == ExcessStatus::NotApplicable) continue;
      const std::string tag = name + " " + to_string(r.theorem) + " j=" + std::to_string(r.j);
      if (r.status == ExcessStatus::OptimizerUndefined) {
        log.expect(false, tag + ": optimizer undefined");
        continue;
      }
      const double width = 50.0 * (1.0 + std::fabs(r.tau));
      std::uniform_real_distribution<double> pick(r.tau - width, r.tau + width);
      std::size_t beaten = 0;
      for (int i = 0; i < 1000; ++i) beaten += phi(pick(rng), r.s, s) > r.phi + 1e-8;
      log.expect(beaten == 0, tag + ": sampled tau beats the closed form");
      const auto cross = tau_optimizer_crosscheck(r.s, s);
      log.expect(cross.interior, tag + ": numeric maximum not interior");
      log.expect(std::fabs(cross.tau_numeric - r.tau) <= 1e-6 * (1 + std::fabs(r.tau)), tag + ": numeric tau");
      log.expect(rel_close(cross.phi_numeric, r.phi, 1e-6), tag + ": numeric Phi");
      ++evaluated;
    }
  }
  log.expect(evaluated >= 8, "at least 8 bound evaluations");
  log.note(std::to_string(evaluated) + " evaluations x 1000 samples");
}

void criterion8(Log& log) {
  const auto r = analyze(f::hypercube(3), "hypercube:3");
  const auto* c1 = criterion(r, "dist2-eigenvalue");
  log.expect(c1 && c1->satisfied && c1->values == std::vector<double>{-3.0}, "a2-c3 = -3 is an eigenvalue");
  const auto* c2 = criterion(r, "dist12-minus-one");
  log.expect(c2 && c2->satisfied, "-1 is an eigenvalue");
  log.expect(r.criteria && r.criteria->consistent, "criteria consistent");
  bool t4 = false, t5 = false;
  for (const auto& e : r.excess) {
    t4 = t4 || (e.theorem == "d3-dist2" && e.status == "equality");
    t5 = t5 || (e.theorem == "d3-dist12" && e.status == "equality");
  }
  log.expect(t4, "distance-2 bound reaches equality");
  log.expect(t5, "distance-1-or-2 bound reaches equality");
  const Graph q3 = f::hypercube(3);
  const auto srg = srg_oracle(distance_power_graph(q3, DistanceDecomposition(q3), DistanceGraph::Dist2));
  log.expect(srg.strongly_regular() && srg.params == SrgParams{8, 3, 2, 0}, "2K4 accepted as srg(8,3,2,0)");
  log.note("distance-2 graph srg(8,3,2,0), mu = 0");
}

Graph random_graph(std::mt19937_64& rng) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 64)(rng);
  std::bernoulli_distribution edge(std::uniform_real_distribution<double>(0.0, 1.0)(rng));
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

void criterion9(Log& log) {
  std::mt19937_64 rng(7);
  std::size_t bad = 0;
  for (int i = 0; i < 10000; ++i) {
    const Graph g = random_graph(rng);
    const std::string text = write_graph6(g);
    const Graph back = parse_graph6(text);
    if (!(back == g) || write_graph6(back) != text) ++bad;
  }
  log.expect(bad == 0, std::to_string(bad) + " round-trip mismatches");
  log.expect(parse_graph6("C~") == f::complete(4), "\"C~\" parses to K4");
  log.expect(write_graph6(f::complete(4)) == "C~", "K4 writes \"C~\"");
  log.note("10000 random graphs, n <= 64");
}

void feasible_array(Log& log) {
  const IntersectionArray ia({39, 32, 20, 2}, {1, 4, 16, 30});
  const auto spec = fixtures::exact({{39, 1}, {15, 52}, {7, 117}, {-1, 468}, {-9, 130}});
  log.expect(ia.order() == 768, "order 768");
  const auto r = drg_criteria(ia, spec);
  log.expect(r.applicable && r.consistent, "criteria applicable and consistent");
  const auto* m = r.find("array-matches-spectrum");
  log.expect(m && m->satisfied, "array matches spectrum");
  const auto* c = r.find("dist2-eigenvalue-sums");
  log.expect(c && c->satisfied, "eigenvalue sums");
  const auto ps = predistance_system(spec);
  log.expect(predicted_distance_spectrum(ps, DistanceGraph::Dist2) ==
                 fixtures::exact({{312, 1}, {24, 182}, {-8, 585}}),
             "distance-2 spectrum 312^1, 24^182, -8^585");
  log.note("algebraic check only");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Log&)>>> criteria{
      {"1 odd(4) distance-2 bound", criterion1},
      {"2 odd(4) distance-1-or-2 bound", criterion2},
      {"3 hamming(4,3) distance-2 bound", criterion3},
      {"4 odd(5) distance-1-or-2 bound", criterion4},
      {"5 oracle agreement on the corpus", criterion5},
      {"6 orthogonal polynomial properties", criterion6},
      {"7 tau optimiser dominance", criterion7},
      {"8 hypercube Q3", criterion8},
      {"9 graph6 round trip", criterion9},
      {"- feasible array {39,32,20,2;1,4,16,30}", feasible_array},
  };
  int failed = 0;
  for (const auto& [label, run] : criteria) {
    Log log;
    try {
      run(log);
    } catch (const std::exception& e) {
      log.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = log.failures.empty();
    failed += !ok;
    std::printf("%s  %s", ok ? "PASS" : "FAIL", label.c_str());
    for (const auto& fact : log.facts) std::printf("  [%s]", fact.c_str());
    std::printf("\n");
    for (std::size_t i = 0; i < log.failures.size() && i < 10; ++i)
      std::printf("      %s\n", log.failures[i].c_str());
    if (log.failures.size() > 10) std::printf("      ... %zu more\n", log.failures.size() - 10);
  }
  std::printf("%s: %d criteria failed\n", failed ? "FAIL" : "PASS", failed);
  return failed ? 1 : 0;
}
