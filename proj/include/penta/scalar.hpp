#pragma once

#include <cmath>
#include <string>
#include <type_traits>

#include <gmpxx.h>

namespace penta {

using Rational = mpq_class;

// Absolute tolerance on canonical float coordinates.
inline constexpr double kEpsilon = 1e-10;

template <typename S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "rational";

  static int sign(const Rational& x) { return sgn(x); }
  static bool is_zero(const Rational& x) { return sgn(x) == 0; }
  static bool equal(const Rational& a, const Rational& b) { return a == b; }
  static Rational abs(const Rational& x) { return Rational(::abs(x)); }
  static double to_double(const Rational& x) { return x.get_d(); }
  static Rational from_double(double d) { return Rational(d); }
  static Rational from_int(long v) { return Rational(v); }
  static std::string to_string(const Rational& x) { return x.get_str(); }
};

template <>
struct ScalarTraits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "float";

  static int sign(double x) { return x > kEpsilon ? 1 : (x < -kEpsilon ? -1 : 0); }
  static bool is_zero(double x) { return std::fabs(x) <= kEpsilon; }
  static bool equal(double a, double b) { return std::fabs(a - b) <= kEpsilon; }
  static double abs(double x) { return std::fabs(x); }
  static double to_double(double x) { return x; }
  static double from_double(double d) { return d; }
  static double from_int(long v) { return static_cast<double>(v); }
  static std::string to_string(double x);
};

template <typename S>
inline constexpr bool is_exact_v = ScalarTraits<S>::exact;

// Parses "p/q", "p", or a decimal literal into an exact rational.
Rational parse_rational(const std::string& text);

}  // namespace penta
