#pragma once

// Scalar abstraction shared by the polynomial machinery. Every algorithm in
// orthopoly/excess is written once over a field type T and instantiated with
//   double   - the general path, with tolerances;
//   Rational - exact arithmetic, used when the spectrum is integral.

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>

#include <boost/multiprecision/cpp_int.hpp>

namespace specx {

using Rational = boost::multiprecision::cpp_rational;

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static double to_double(double x) { return x; }
  static double abs(double x) { return std::fabs(x); }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static double to_double(const Rational& x) { return x.convert_to<double>(); }
  static Rational abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }
};

template <class T>
double to_double(const T& x) {
  return ScalarTraits<T>::to_double(x);
}

template <class T>
T scalar_abs(const T& x) {
  return ScalarTraits<T>::abs(x);
}

/// Converts an exact rational into the working scalar type.
template <class T>
T from_rational(const Rational& q) {
  if constexpr (std::is_same_v<T, Rational>)
    return q;
  else
    return q.convert_to<double>();
}

/// Equality test: exact for Rational, |a-b| <= rel_tol*max(1,|a|,|b|) for double.
template <class T>
bool nearly_equal(const T& a, const T& b, double rel_tol) {
  if constexpr (ScalarTraits<T>::exact) {
    return a == b;
  } else {
    const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= rel_tol * scale;
  }
}

/// "x is zero" relative to a magnitude `scale`; exact for Rational.
template <class T>
bool nearly_zero(const T& x, double scale, double rel_tol) {
  if constexpr (ScalarTraits<T>::exact)
    return x == 0;
  else
    return std::fabs(x) <= rel_tol * std::max(1.0, scale);
}

/// "p/q" (or "p" for integers).
inline std::string rational_string(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace specx
