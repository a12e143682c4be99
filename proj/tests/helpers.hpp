#pragma once

#include <string>

#include "penta/random.hpp"
#include "penta/seed.hpp"

namespace testutil {

using penta::ProjPoint;
using penta::Rational;
using penta::Seed;

inline Rational Q(const std::string& s) { return penta::parse_rational(s); }

inline ProjPoint<Rational> P(const std::string& x, const std::string& y) {
  return penta::affine_point<Rational>(Q(x), Q(y));
}

inline ProjPoint<double> Pf(double x, double y) { return penta::affine_point<double>(x, y); }

// Unit square with B4 at (0, y).
inline Seed<Rational> square41(const std::string& y = "1/2") {
  auto sq = penta::unit_square<Rational>();
  return Seed<Rational>{4, 1, {sq.begin(), sq.end()}, {P("0", y)}};
}

// A fixed non-degenerate rational transform.
inline penta::ProjTransform<Rational> sample_transform() {
  penta::Mat3<Rational> m{{{Q("2"), Q("1/3"), Q("-1")}, {Q("1/5"), Q("3/2"), Q("2")}, {Q("1/7"), Q("-1/9"), Q("4")}}};
  return penta::ProjTransform<Rational>(m);
}

inline penta::ProjTransform<Rational> random_transform(penta::Rng& rng) {
  std::uniform_int_distribution<int> u(-8, 8);
  for (;;) {
    penta::Mat3<Rational> m{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = Rational(u(rng), 4) + (i == j ? Rational(4) : Rational(0));
    if (sgn(penta::determinant(m)) != 0) return penta::ProjTransform<Rational>(m);
  }
}

}  // namespace testutil
