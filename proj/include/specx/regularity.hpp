#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "specx/distance.hpp"
#include "specx/error.hpp"
#include "specx/graph.hpp"
#include "specx/predistance.hpp"
#include "specx/scalar.hpp"
#include "specx/spectrum.hpp"

namespace specx {

/// {b_0,...,b_{D-1}; c_1,...,c_D} of a distance-regular graph.
class IntersectionArray {
 public:
  IntersectionArray(std::vector<long long> b, std::vector<long long> c)
      : b_(std::move(b)), c_(std::move(c)) {
    const auto fail = [](const std::string& why) {
      throw PreconditionError("inconsistent intersection array: " + why);
    };
    if (b_.size() != c_.size()) fail("b and c must both have D entries");
    if (!c_.empty() && c_[0] != 1) fail("c_1 must be 1");
    sizes_.push_back(1);
    for (std::size_t i = 0; i < b_.size(); ++i) {
      if (b_[i] <= 0 || c_[i] <= 0) fail("b_i and c_i must be positive");
      if (a(i) < 0 || a(i + 1) < 0) fail("a_i must be nonnegative");
      const long long num = sizes_[i] * b_[i];
      if (num % c_[i] != 0) fail("k_i b_i / c_{i+1} is not an integer at i=" + std::to_string(i));
      sizes_.push_back(num / c_[i]);
    }
  }

  std::size_t diameter() const { return b_.size(); }
  long long k() const { return b_.empty() ? 0 : b_[0]; }
  /// b_i, zero for i >= D.
  long long b(std::size_t i) const { return i < b_.size() ? b_[i] : 0; }
  /// c_i, zero for i = 0.
  long long c(std::size_t i) const { return i == 0 || i > c_.size() ? 0 : c_[i - 1]; }
  long long a(std::size_t i) const { return k() - b(i) - c(i); }
  /// k_i, the size of each distance-i class.
  long long class_size(std::size_t i) const { return sizes_.at(i); }
  long long order() const {
    long long n = 0;
    for (auto s : sizes_) n += s;
    return n;
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < b_.size(); ++i) s += (i ? "," : "") + std::to_string(b_[i]);
    s += ";";
    for (std::size_t i = 0; i < c_.size(); ++i) s += (i ? "," : "") + std::to_string(c_[i]);
    return s + "}";
  }

  const std::vector<long long>& bs() const { return b_; }
  const std::vector<long long>& cs() const { return c_; }

  friend bool operator==(const IntersectionArray& x, const IntersectionArray& y) {
    return x.b_ == y.b_ && x.c_ == y.c_;
  }

 private:
  std::vector<long long> b_;
  std::vector<long long> c_;
  std::vector<long long> sizes_;
};

/// A pair (u,v) at distance i where one of c_i, a_i, b_i differs from the
/// value seen on the first pair at that distance.
struct DrgViolation {
  Vertex u;
  Vertex v;
  std::size_t distance;
  char parameter;  // 'c', 'a' or 'b'
  long long expected;
  long long found;

  std::string describe() const {
    return std::string(1, parameter) + "_" + std::to_string(distance) + " is " +
           std::to_string(expected) + " elsewhere but " + std::to_string(found) +
           " for the pair (" + std::to_string(u) + "," + std::to_string(v) + ")";
  }
};

struct DrgResult {
  std::optional<IntersectionArray> array;
  std::optional<DrgViolation> violation;

  bool distance_regular() const { return array.has_value(); }
};

/// Checks the combinatorial definition of distance-regularity on every pair.
/// All three neighbour counts are verified although any two determine the third.
inline DrgResult drg_oracle(const Graph& g, const DistanceDecomposition& dd) {
  const std::size_t n = g.order();
  const std::size_t D = dd.diameter();
  const auto adj = g.adjacency_lists();
  struct Counts {
    long long c = -1, a = -1, b = -1;
  };
  std::vector<Counts> ref(D + 1);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      const std::size_t i = dd.distance(u, v);
      long long c = 0, a = 0, b = 0;
      for (Vertex w : adj[v]) {
        const std::size_t j = dd.distance(u, w);
        if (j + 1 == i)
          ++c;
        else if (j == i)
          ++a;
        else
          ++b;
      }
      Counts& r = ref[i];
      if (r.c < 0) {
        r = {c, a, b};
        continue;
      }
      if (c != r.c) return {std::nullopt, DrgViolation{u, v, i, 'c', r.c, c}};
      if (a != r.a) return {std::nullopt, DrgViolation{u, v, i, 'a', r.a, a}};
      if (b != r.b) return {std::nullopt, DrgViolation{u, v, i, 'b', r.b, b}};
    }
  }
  std::vector<long long> bs, cs;
  for (std::size_t i = 0; i < D; ++i) bs.push_back(ref[i].b);
  for (std::size_t i = 1; i <= D; ++i) cs.push_back(ref[i].c);
  return {IntersectionArray(std::move(bs), std::move(cs)), std::nullopt};
}

/// (n, k, lambda, mu) of a strongly regular graph.
struct SrgParams {
  long long n, k, lambda, mu;

  bool feasible_identity() const { return k * (k - lambda - 1) == (n - k - 1) * mu; }
  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

struct SrgViolation {
  std::string reason;
  Vertex u = 0;
  Vertex v = 0;
  long long expected = 0;
  long long found = 0;
};

struct SrgResult {
  std::optional<SrgParams> params;
  std::optional<SrgViolation> violation;

  bool strongly_regular() const { return params.has_value(); }
};

/// Counts common neighbours of every pair. Disconnected graphs are accepted,
/// so a disjoint union of equal cliques is strongly regular with mu = 0.
/// Complete and edgeless graphs are rejected: one of lambda, mu is undefined.
inline SrgResult srg_oracle(const Graph& g) {
  const auto reg = regular_degree(g);
  if (!reg.regular()) {
    const auto& m = *reg.mismatch;
    return {std::nullopt,
            SrgViolation{"not regular", m.u, m.v, static_cast<long long>(m.degree_u),
                         static_cast<long long>(m.degree_v)}};
  }
  const long long n = static_cast<long long>(g.order());
  const long long k = static_cast<long long>(*reg.degree);
  if (k == 0) return {std::nullopt, SrgViolation{"edgeless graph"}};
  if (k == n - 1) return {std::nullopt, SrgViolation{"complete graph"}};
  long long lambda = -1, mu = -1;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const auto common = static_cast<long long>(g.common_neighbours(u, v));
      long long& slot = g.adjacent(u, v) ? lambda : mu;
      if (slot < 0) {
        slot = common;
      } else if (slot != common) {
        return {std::nullopt,
                SrgViolation{g.adjacent(u, v) ? "lambda not constant" : "mu not constant", u, v,
                             slot, common}};
      }
    }
  }
  return {SrgParams{n, k, lambda, mu}, std::nullopt};
}

enum class DistanceGraph { Dist2, Dist12 };

inline std::string to_string(DistanceGraph which) {
  return which == DistanceGraph::Dist2 ? "distance-2" : "distance-1-or-2";
}

/// The graph joining vertices at distance exactly 2 (Dist2) or at distance
/// 1 or 2 (Dist12).
inline Graph distance_power_graph(const Graph& g, const DistanceDecomposition& dd, DistanceGraph which) {
  Graph h(g.order());
  const std::size_t lo = which == DistanceGraph::Dist2 ? 2 : 1;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const std::size_t dist = dd.distance(u, v);
      if (dist >= lo && dist <= 2) h.add_edge(u, v);
    }
  return h;
}

struct PartialDrLevel {
  std::size_t level = 0;
  /// deviation[i] = max entry of |p_i(A) - A_i|, for i = 0..min(D,d).
  std::vector<double> deviation;
};

/// Largest m with p_i(A) = A_i for every i <= m (entrywise within tolerance).
template <class T>
PartialDrLevel partial_dr_level(const Graph& g, const PredistanceSystem<T>& ps,
                                const DistanceDecomposition& dd, double tolerance = 1e-6) {
  PartialDrLevel out;
  const std::size_t top = std::min(dd.diameter(), ps.d());
  bool broken = false;
  for (std::size_t i = 0; i <= top; ++i) {
    const DenseMatrix pa = apply_poly(ps.p[i], g);
    const DenseMatrix ai(g.order(), dd.distance_matrix(i));
    const double dev = pa.max_abs_diff(ai);
    out.deviation.push_back(dev);
    if (!broken && dev <= tolerance)
      out.level = i;
    else
      broken = true;
  }
  return out;
}

enum class ExcessVerdict { DistanceRegular, NotDistanceRegular, NotApplicable, BoundViolated };

inline std::string to_string(ExcessVerdict v) {
  switch (v) {
    case ExcessVerdict::DistanceRegular: return "distance-regular";
    case ExcessVerdict::NotDistanceRegular: return "not distance-regular";
    case ExcessVerdict::NotApplicable: return "not applicable";
    case ExcessVerdict::BoundViolated: return "bound violated";
  }
  return "?";
}

template <class T>
struct SpectralExcessCheck {
  ExcessVerdict verdict = ExcessVerdict::NotApplicable;
  std::string reason;
  std::size_t index = 0;  // i in q_i(theta_0) vs nbar_i
  T spectral = 0;         // q_i(theta_0)
  T combinatorial = 0;    // nbar_i
  T gap = 0;              // nbar_i - q_i(theta_0), nonnegative up to rounding
};

namespace detail {

template <class T>
SpectralExcessCheck<T> compare_ball(const PredistanceSystem<T>& ps, const AverageCounts& ac,
                                    std::size_t i, double tolerance) {
  SpectralExcessCheck<T> out;
  out.index = i;
  out.spectral = ps.sum_at_k(i);
  out.combinatorial = from_rational<T>(ac.cumulative(i));
  out.gap = out.combinatorial - out.spectral;
  if (nearly_equal(out.spectral, out.combinatorial, tolerance))
    out.verdict = ExcessVerdict::DistanceRegular;
  else if (out.gap > T(0))
    out.verdict = ExcessVerdict::NotDistanceRegular;
  else
    out.verdict = ExcessVerdict::BoundViolated;
  return out;
}

}  // namespace detail

/// q_{d-1}(theta_0) versus the mean number of vertices within distance d-1.
/// Equality holds exactly when the graph is distance-regular, provided D = d.
template <class T>
SpectralExcessCheck<T> spectral_excess_check(const PredistanceSystem<T>& ps, const AverageCounts& ac,
                                             double tolerance = 1e-6) {
  const std::size_t d = ps.d();
  const std::size_t D = ac.diameter();
  if (d == 0) {
    SpectralExcessCheck<T> out;
    out.reason = "not applicable: d = 0";
    return out;
  }
  if (D < d) {
    SpectralExcessCheck<T> out;
    out.index = d - 1;
    out.reason = "not applicable: D<d (D=" + std::to_string(D) + ", d=" + std::to_string(d) + ")";
    return out;
  }
  auto out = detail::compare_ball(ps, ac, d - 1, tolerance);
  if (out.verdict == ExcessVerdict::BoundViolated)
    out.reason = "q_{d-1}(theta_0) exceeds the mean ball size; spectrum and counts disagree";
  return out;
}

/// Stepwise form: given that the graph is (m-1)-partially distance-regular
/// with m < d, q_m(theta_0) = nbar_m means it is m-partially distance-regular.
/// DistanceRegular in the result stands for "level m reached".
template <class T>
SpectralExcessCheck<T> spectral_excess_step(const PredistanceSystem<T>& ps, const AverageCounts& ac,
                                            std::size_t established_level, double tolerance = 1e-6) {
  const std::size_t m = established_level + 1;
  if (m >= ps.d() || m > ac.diameter()) {
    SpectralExcessCheck<T> out;
    out.index = m;
    out.reason = "not applicable: need m < d and m <= D";
    return out;
  }
  return detail::compare_ball(ps, ac, m, tolerance);
}

/// Eigenvalues of p_2(A) (Dist2) or (p_1+p_2)(A) (Dist12) with merged
/// multiplicities. These are the eigenvalues of the distance graph whenever
/// the graph is 2-partially distance-regular.
template <class T>
BasicSpectrum<T> predicted_distance_spectrum(const PredistanceSystem<T>& ps, DistanceGraph which,
                                             double tolerance = 1e-6) {
  if (ps.d() < 2) throw PreconditionError("predicted distance spectrum needs d >= 2");
  std::vector<T> vals;
  for (std::size_t j = 0; j < ps.spectrum.values.size(); ++j) {
    T v = ps.values[2][j];
    if (which == DistanceGraph::Dist12) v += ps.values[1][j];
    vals.push_back(v);
  }
  return merge_equal(vals, ps.spectrum.mult, tolerance);
}

struct Criterion {
  std::string name;
  std::string statement;
  bool satisfied = false;
  std::vector<double> values;  // the quantities compared, in statement order
};

struct CriteriaReport {
  bool applicable = false;
  std::string reason;
  std::size_t d = 0;
  std::vector<Criterion> criteria;
  /// Criteria that characterise the same property agree.
  bool consistent = true;
  std::vector<std::string> notes;

  const Criterion* find(const std::string& name) const {
    for (const auto& c : criteria)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Closed-form tests, for distance-regular graphs of diameter 3 or 4, of
/// whether the distance-2 or distance-1-or-2 graph is strongly regular.
template <class T>
CriteriaReport drg_criteria(const IntersectionArray& ia, const BasicSpectrum<T>& s, double tolerance = 1e-6) {
  CriteriaReport out;
  validate_spectrum(s);
  out.d = s.d();
  if (ia.diameter() != s.d()) {
    out.reason = "not applicable: array diameter " + std::to_string(ia.diameter()) +
                 " differs from d = " + std::to_string(s.d());
    return out;
  }
  if (out.d != 3 && out.d != 4) {
    out.reason = "not applicable: d = " + std::to_string(out.d) + " (criteria cover d = 3, 4)";
    return out;
  }
  out.applicable = true;
  const auto eq = [&](const T& x, const T& y) { return nearly_equal(x, y, tolerance); };
  const auto num = [](long long v) { return T(v); };
  const auto dbl = [](const T& v) { return to_double(v); };

  // Preintersection numbers of the spectrum must reproduce the array.
  {
    Criterion c{"array-matches-spectrum",
                "preintersection numbers of the spectrum equal a_i, b_i, c_i and k_i = p_i(k)", false, {}};
    bool ok = eq(s.largest(), num(ia.k())) && s.order() == static_cast<std::size_t>(ia.order());
    if (ok) {
      const auto ps = predistance_system(s);
      for (std::size_t i = 0; i <= ia.diameter() && ok; ++i) {
        ok = eq(ps.alpha[i], num(ia.a(i))) && eq(ps.beta[i], num(ia.b(i))) &&
             eq(ps.gamma[i], num(ia.c(i))) && eq(ps.at_k(i), num(ia.class_size(i)));
      }
    }
    c.satisfied = ok;
    out.criteria.push_back(c);
    out.consistent = ok;
  }

  if (out.d == 3) {
    const long long a1 = ia.a(1), a2 = ia.a(2), a3 = ia.a(3);
    const long long b1 = ia.b(1), b2 = ia.b(2), c3 = ia.c(3), k = ia.k();
    Criterion brouwer2{"dist2-array", "c3(a3+a2-a1) = b1 a2",
                       c3 * (a3 + a2 - a1) == b1 * a2,
                       {double(c3 * (a3 + a2 - a1)), double(b1 * a2)}};
    Criterion eig2{"dist2-eigenvalue", "a2-c3 is an eigenvalue", s.contains(num(a2 - c3), tolerance),
                   {double(a2 - c3)}};
    Criterion minus1{"dist12-minus-one", "-1 is an eigenvalue", s.contains(T(-1), tolerance), {-1.0}};
    Criterion brouwer12{"dist12-array", "k = b2+c3-1", k == b2 + c3 - 1,
                        {double(k), double(b2 + c3 - 1)}};
    Criterion eig12{"dist12-eigenvalue", "a3-b2 is an eigenvalue", s.contains(num(a3 - b2), tolerance),
                    {double(a3 - b2)}};
    out.consistent = out.consistent && brouwer2.satisfied == eig2.satisfied &&
                     minus1.satisfied == brouwer12.satisfied && brouwer12.satisfied == eig12.satisfied;
    out.criteria.insert(out.criteria.end(), {brouwer2, eig2, minus1, brouwer12, eig12});
  } else {
    const T t14 = s.values[1] + s.values[4];
    const T t23 = s.values[2] + s.values[3];
    const T a1 = num(ia.a(1));
    const T a1c2 = num(ia.a(1) - ia.c(2));
    Criterion dist2{"dist2-eigenvalue-sums", "theta1+theta4 = a1 = theta2+theta3",
                    eq(t14, a1) && eq(t23, a1), {dbl(t14), dbl(a1), dbl(t23)}};
    Criterion dist12{"dist12-eigenvalue-sums", "theta1+theta4 = a1-c2 = theta2+theta3",
                     eq(t14, a1c2) && eq(t23, a1c2), {dbl(t14), dbl(a1c2), dbl(t23)}};
    out.criteria.insert(out.criteria.end(), {dist2, dist12});
    out.notes.push_back("the distance-1-or-2 criterion for d = 4 refers to Gamma_{1,2}");
  }
  return out;
}

}  // namespace specx
