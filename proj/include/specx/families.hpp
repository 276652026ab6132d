#pragma once

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "specx/error.hpp"
#include "specx/graph.hpp"

namespace specx::families {

inline Graph complete(std::size_t n) {
  if (n < 1) throw PreconditionError("complete(n) needs n >= 1");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

inline Graph cycle(std::size_t n) {
  if (n < 3) throw PreconditionError("cycle(n) needs n >= 3");
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

/// Words of length `length` over `q` symbols, adjacent when they differ in
/// exactly one coordinate. Word w is vertex sum_i w_i q^i.
inline Graph hamming(std::size_t length, std::size_t q) {
  if (length < 1 || q < 2)
    throw PreconditionError("hamming(d,q) needs d >= 1 and q >= 2");
  std::size_t n = 1;
  for (std::size_t i = 0; i < length; ++i) {
    n *= q;
    if (n > 20000) throw PreconditionError("hamming(d,q): too many vertices");
  }
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    std::size_t place = 1;
    for (std::size_t i = 0; i < length; ++i, place *= q) {
      const std::size_t digit = (u / place) % q;
      for (std::size_t other = digit + 1; other < q; ++other)
        g.add_edge(u, u + (other - digit) * place);
    }
  }
  return g;
}

inline Graph hypercube(std::size_t dim) {
  if (dim < 1 || dim > 14) throw PreconditionError("hypercube(m) needs 1 <= m <= 14");
  return hamming(dim, 2);
}

/// Kneser graph K(v,t): t-subsets of a v-set, adjacent when disjoint.
/// Subsets are enumerated in colexicographic order of their bitmasks.
inline Graph kneser(std::size_t v, std::size_t t) {
  if (t < 1 || v < 2 * t)
    throw PreconditionError("kneser(v,t) needs t >= 1 and v >= 2t");
  if (v > 30) throw PreconditionError("kneser(v,t): v too large");
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << v); ++mask)
    if (static_cast<std::size_t>(std::popcount(mask)) == t) subsets.push_back(mask);
  if (subsets.size() > 20000) throw PreconditionError("kneser(v,t): too many vertices");
  Graph g(subsets.size());
  for (Vertex a = 0; a < subsets.size(); ++a)
    for (Vertex b = a + 1; b < subsets.size(); ++b)
      if ((subsets[a] & subsets[b]) == 0) g.add_edge(a, b);
  return g;
}

/// Odd graph O(m) = K(2m-1, m-1).
inline Graph odd(std::size_t m) {
  if (m < 2) throw PreconditionError("odd(m) needs m >= 2");
  return kneser(2 * m - 1, m - 1);
}

inline Graph petersen() { return kneser(5, 2); }

/// Prism C_n x K_2: vertices i and n+i form the rungs.
inline Graph prism(std::size_t n) {
  if (n < 3) throw PreconditionError("prism(n) needs n >= 3");
  Graph g(2 * n);
  for (Vertex i = 0; i < n; ++i) {
    g.add_edge(i, (i + 1) % n);
    g.add_edge(n + i, n + (i + 1) % n);
    g.add_edge(i, n + i);
  }
  return g;
}

/// Uniformly paired configuration model, restarted until the result is a
/// simple connected k-regular graph.
inline Graph random_regular(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k >= n || (n * k) % 2 != 0)
    throw PreconditionError("random_regular(n,k) needs k < n and n*k even");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> points;
  for (int attempt = 0; attempt < 10000; ++attempt) {
    points.clear();
    for (Vertex u = 0; u < n; ++u)
      for (std::size_t r = 0; r < k; ++r) points.push_back(u);
    std::shuffle(points.begin(), points.end(), rng);
    Graph g(n);
    bool simple = true;
    for (std::size_t i = 0; i + 1 < points.size() && simple; i += 2) {
      const Vertex a = points[i];
      const Vertex b = points[i + 1];
      if (a == b || g.adjacent(a, b))
        simple = false;
      else
        g.add_edge(a, b);
    }
    if (!simple) continue;
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbours(u))
        if (!seen[w]) {
          seen[w] = true;
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached == n) return g;
  }
  throw PreconditionError("random_regular: no simple connected graph found");
}

/// A parsed "name:arg,arg" family specification, e.g. "hamming:4,3".
struct FamilySpec {
  std::string name;
  std::vector<std::size_t> args;

  std::string to_string() const {
    std::string s = name;
    for (std::size_t i = 0; i < args.size(); ++i)
      s += (i == 0 ? ":" : ",") + std::to_string(args[i]);
    return s;
  }
};

inline FamilySpec parse_family(std::string_view text) {
  FamilySpec spec;
  const auto colon = text.find(':');
  spec.name = std::string(text.substr(0, colon));
  if (spec.name.empty()) throw ParseError("family spec has no name: '" + std::string(text) + "'");
  if (colon == std::string_view::npos) return spec;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size() || item.empty())
      throw ParseError("family spec argument is not a nonnegative integer: '" +
                       std::string(item) + "'");
    spec.args.push_back(value);
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
    if (rest.empty()) throw ParseError("family spec has a trailing comma");
  }
  return spec;
}

inline Graph generate(const FamilySpec& spec) {
  const auto need = [&](std::size_t count) {
    if (spec.args.size() != count)
      throw ParseError("family '" + spec.name + "' takes " + std::to_string(count) +
                       " argument(s), got " + std::to_string(spec.args.size()));
  };
  const auto& a = spec.args;
  if (spec.name == "odd") { need(1); return odd(a[0]); }
  if (spec.name == "hamming") { need(2); return hamming(a[0], a[1]); }
  if (spec.name == "hypercube") { need(1); return hypercube(a[0]); }
  if (spec.name == "cycle") { need(1); return cycle(a[0]); }
  if (spec.name == "complete") { need(1); return complete(a[0]); }
  if (spec.name == "kneser") { need(2); return kneser(a[0], a[1]); }
  if (spec.name == "petersen") { need(0); return petersen(); }
  if (spec.name == "prism") { need(1); return prism(a[0]); }
  if (spec.name == "random_regular") { need(3); return random_regular(a[0], a[1], a[2]); }
  throw ParseError("unknown graph family '" + spec.name + "'");
}

inline Graph generate(std::string_view text) { return generate(parse_family(text)); }

}  // namespace specx::families
