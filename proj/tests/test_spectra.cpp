#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "fixtures.hpp"
#include "specx/distance.hpp"
#include "specx/families.hpp"
#include "specx/spectrum.hpp"

using namespace specx;
namespace f = specx::families;
using Catch::Matchers::WithinAbs;

namespace {

/// tr(A^l) for l = 0..max_len by exact integer matrix powers.
std::vector<long double> closed_walk_traces(const Graph& g, unsigned max_len) {
  const std::size_t n = g.order();
  std::vector<long double> power(n * n, 0), next(n * n);
  for (std::size_t i = 0; i < n; ++i) power[i * n + i] = 1;
  std::vector<long double> out;
  for (unsigned l = 0; l <= max_len; ++l) {
    long double tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += power[i * n + i];
    out.push_back(tr);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        long double acc = 0;
        for (Vertex w : g.neighbours(j)) acc += power[i * n + w];
        next[i * n + j] = acc;
      }
    power.swap(next);
  }
  return out;
}

std::size_t triangles(const Graph& g) {
  std::size_t t = 0;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      for (Vertex w = v + 1; w < g.order(); ++w)
        if (g.adjacent(u, v) && g.adjacent(v, w) && g.adjacent(u, w)) ++t;
  return t;
}

}  // namespace

TEST_CASE("Jacobi on small matrices") {
  DenseMatrix m(2);
  m(0, 0) = 2;
  m(0, 1) = m(1, 0) = 1;
  m(1, 1) = 2;
  const auto ev = eigenvalues_symmetric(m);
  CHECK_THAT(ev[0], WithinAbs(3.0, 1e-12));
  CHECK_THAT(ev[1], WithinAbs(1.0, 1e-12));
  CHECK(eigenvalues_symmetric(DenseMatrix(3)) == std::vector<double>{0, 0, 0});
}

TEST_CASE("Jacobi reports non-convergence with a residual") {
  JacobiOptions opt;
  opt.max_sweeps = 0;
  try {
    eigenvalues_symmetric(f::petersen(), opt);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.residual() > 0);
  }
}

TEST_CASE("cycle eigenvalues are 2cos(2 pi j/n)") {
  for (std::size_t n : {5u, 7u, 12u}) {
    auto expect = std::vector<double>();
    for (std::size_t j = 0; j < n; ++j) expect.push_back(2 * std::cos(2 * std::numbers::pi * j / n));
    std::sort(expect.rbegin(), expect.rend());
    const auto ev = eigenvalues_symmetric(f::cycle(n));
    for (std::size_t i = 0; i < n; ++i) CHECK_THAT(ev[i], WithinAbs(expect[i], 1e-9));
  }
}

TEST_CASE("spectra of the named graphs") {
  CHECK(spectrum_of(f::complete(4)) == fixtures::approx({{3, 1}, {-1, 3}}));
  CHECK(spectrum_of(f::petersen()) == fixtures::approx({{3, 1}, {1, 5}, {-2, 4}}));
  CHECK(spectrum_of(f::odd(4)) == fixtures::approx({{4, 1}, {2, 14}, {-1, 14}, {-3, 6}}));
  CHECK(spectrum_of(f::hamming(4, 3)) == fixtures::approx({{8, 1}, {5, 8}, {2, 24}, {-1, 32}, {-4, 16}}));
  CHECK(spectrum_of(f::odd(5)) == fixtures::approx({{5, 1}, {3, 27}, {1, 42}, {-2, 48}, {-4, 8}}));
  CHECK(spectrum_of(f::hypercube(3)) == fixtures::approx({{3, 1}, {1, 3}, {-1, 3}, {-3, 1}}));
  const auto c = cluster_spectrum(eigenvalues_symmetric(f::hamming(4, 3)));
  CHECK(c.integral);
  CHECK_FALSE(c.ambiguous);
}

TEST_CASE("spectra reproduce closed-walk traces") {
  for (const auto& [name, g] : fixtures::corpus()) {
    INFO(name);
    const auto cs = cluster_spectrum(eigenvalues_symmetric(g));
    const auto& s = cs.spectrum;
    const auto traces = closed_walk_traces(g, static_cast<unsigned>(2 * s.d() + 2));
    for (unsigned l = 0; l < traces.size(); ++l) {
      long double sum = 0;
      for (std::size_t i = 0; i < s.values.size(); ++i)
        sum += s.mult[i] * std::pow(static_cast<long double>(s.values[i]), l);
      const long double scale = std::max<long double>(1, std::pow(s.largest(), l) * g.order());
      REQUIRE(std::fabs(static_cast<double>(sum - traces[l])) <= 1e-9 * static_cast<double>(scale));
    }
    CHECK(s.d() >= DistanceDecomposition(g).diameter());
    CHECK(s.mult[0] == 1);
    CHECK(s.largest() == Catch::Approx(static_cast<double>(*regular_degree(g).degree)));
  }
}

TEST_CASE("average closed walks") {
  const Spectrum h = spectrum_of(f::hamming(4, 3));
  CHECK_THAT(average_circuits(h, 0), WithinAbs(1, 1e-12));
  CHECK_THAT(average_circuits(h, 2), WithinAbs(8, 1e-9));
  // Each triangle carries 6 closed walks of length 3.
  const double c3 = 6.0 * triangles(f::hamming(4, 3)) / 81.0;
  CHECK(c3 == 8.0);
  CHECK_THAT(average_circuits(h, 3), WithinAbs(c3, 1e-9));
  CHECK(average_circuits(fixtures::hamming43_spectrum(), 3) == 8);
  CHECK(average_circuits(fixtures::odd4_spectrum(), 3) == 0);
}

TEST_CASE("clustering merges, snaps and flags") {
  const auto c = cluster_spectrum({2.0 + 1e-12, 2.0 - 1e-12, -1.0, 0.5});
  CHECK(c.spectrum == fixtures::approx({{2, 2}, {0.5, 1}, {-1, 1}}));
  CHECK_FALSE(c.integral);
  CHECK_FALSE(c.ambiguous);

  const auto amb = cluster_spectrum({1.0, 1.0 - 5e-7, -2.0});
  CHECK(amb.ambiguous);
  CHECK(amb.spectrum.d() == 2);
  CHECK_FALSE(amb.notes.empty());

  ClusterOptions loose;
  loose.tolerance = 1e-6;
  CHECK(cluster_spectrum({1.0, 1.0 - 5e-7, -2.0}, loose).spectrum.d() == 1);

  ClusterOptions nosnap;
  nosnap.snap_integers = false;
  const auto raw = cluster_spectrum({3.0000000001, -3.0}, nosnap);
  CHECK_FALSE(raw.integral);
  CHECK(raw.spectrum.values[0] != 3.0);

  CHECK_THROWS_AS(cluster_spectrum({}), PreconditionError);
}

TEST_CASE("spectrum validation") {
  Spectrum bad{{1, 2}, {1, 1}};
  CHECK_THROWS_AS(validate_spectrum(bad), PreconditionError);
  Spectrum zero{{2, 1}, {1, 0}};
  CHECK_THROWS_AS(validate_spectrum(zero), PreconditionError);
  CHECK(merge_equal<double>({3, -1, 3}, {1, 2, 4}, 1e-9) == fixtures::approx({{3, 5}, {-1, 2}}));
  CHECK(fixtures::approx({{2, 1}, {-1, 2}}).contains(-1.0000000001, 1e-6));
}

TEST_CASE("exact copies of integral spectra") {
  const auto e = exact_spectrum(spectrum_of(f::odd(4)));
  REQUIRE(e);
  CHECK(*e == fixtures::odd4_spectrum());
  CHECK_FALSE(exact_spectrum(spectrum_of(f::cycle(5))));
}
