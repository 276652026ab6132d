#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "specx/families.hpp"
#include "specx/graph.hpp"
#include "specx/spectrum.hpp"

namespace fixtures {

using specx::Rational;

inline specx::BasicSpectrum<Rational> exact(std::vector<std::pair<long long, std::size_t>> entries) {
  std::vector<std::pair<Rational, std::size_t>> out;
  for (auto [v, m] : entries) out.emplace_back(Rational(v), m);
  return specx::make_spectrum(std::move(out));
}

inline specx::Spectrum approx(std::vector<std::pair<double, std::size_t>> entries) {
  return specx::make_spectrum(std::move(entries));
}

// Spectra of odd(4), hamming(4,3), odd(5) and Q3.
inline auto odd4_spectrum() { return exact({{4, 1}, {2, 14}, {-1, 14}, {-3, 6}}); }
inline auto hamming43_spectrum() { return exact({{8, 1}, {5, 8}, {2, 24}, {-1, 32}, {-4, 16}}); }
inline auto odd5_spectrum() { return exact({{5, 1}, {3, 27}, {1, 42}, {-2, 48}, {-4, 8}}); }
inline auto q3_spectrum() { return exact({{3, 1}, {1, 3}, {-1, 3}, {-3, 1}}); }

struct Named {
  std::string name;
  specx::Graph graph;
};

/// Connected regular graphs used by the property and agreement suites.
inline std::vector<Named> corpus() {
  namespace f = specx::families;
  std::vector<Named> out;
  out.push_back({"odd:4", f::odd(4)});
  out.push_back({"hamming:4,3", f::hamming(4, 3)});
  out.push_back({"odd:5", f::odd(5)});
  for (std::size_t n = 5; n <= 9; ++n) out.push_back({"cycle:" + std::to_string(n), f::cycle(n)});
  out.push_back({"hypercube:3", f::hypercube(3)});
  out.push_back({"hypercube:4", f::hypercube(4)});
  out.push_back({"petersen", f::petersen()});
  for (std::size_t n = 3; n <= 6; ++n) out.push_back({"prism:" + std::to_string(n), f::prism(n)});
  out.push_back({"complete:5", f::complete(5)});
  out.push_back({"kneser:6,2", f::kneser(6, 2)});
  out.push_back({"hamming:2,4", f::hamming(2, 4)});
  out.push_back({"hamming:3,3", f::hamming(3, 3)});
  const std::vector<std::pair<std::size_t, std::size_t>> shapes{{8, 3}, {10, 3}, {12, 3}, {12, 4}, {14, 4}, {16, 3}};
  std::uint64_t seed = 1;
  for (auto [n, k] : shapes)
    for (int rep = 0; rep < 2; ++rep, ++seed)
      out.push_back({"random_regular:" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(seed),
                     f::random_regular(n, k, seed)});
  return out;
}

}  // namespace fixtures
