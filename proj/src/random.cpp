#include "penta/random.hpp"

#include <cmath>
#include <numbers>

namespace penta {

namespace {

bool strictly_convex(const std::vector<ProjPoint<Rational>>& p) {
  const int n = static_cast<int>(p.size());
  Seed<Rational> probe{n, 1, p, {}};
  auto [ax, ay] = affine(p[static_cast<std::size_t>(n - 1)]);
  auto [bx, by] = affine(p[0]);
  probe.B.push_back(affine_point<Rational>((ax + bx) / 2, (ay + by) / 2));
  return validate_seed(probe).ok();
}

}  // namespace

std::vector<ProjPoint<Rational>> random_convex_polygon(int n, Rng& rng) {
  std::uniform_int_distribution<int> jitter(-4, 4);
  const double radius = std::max(1.0, n / 4.0);
  for (;;) {
    std::vector<ProjPoint<Rational>> p;
    for (int i = 0; i < n; ++i) {
      double th = 2.0 * std::numbers::pi * i / n;
      long x = std::lround(64.0 * radius * std::cos(th)) + jitter(rng);
      long y = std::lround(64.0 * radius * std::sin(th)) + jitter(rng);
      p.push_back(affine_point<Rational>(Rational(x, 64), Rational(y, 64)));
    }
    for (auto& q : p) {
      Rational x = q[0], y = q[1];
      x.canonicalize();
      y.canonicalize();
      q = affine_point<Rational>(x, y);
    }
    if (strictly_convex(p)) return p;
  }
}

Seed<Rational> random_seed(int n, int k, Rng& rng) {
  std::uniform_int_distribution<int> mark(8, 56);
  for (;;) {
    Seed<Rational> s{n, k, random_convex_polygon(n, rng), {}};
    std::vector<Rational> d;
    for (int t = 0; t < k; ++t) {
      Rational v(mark(rng), 64);
      v.canonicalize();
      d.push_back(v);
    }
    s.B = place_marks(s.A, k, d);
    if (validate_seed(s).ok()) return s;
  }
}

Seed<double> regular_seed(int n, int k) {
  std::vector<ProjPoint<double>> A;
  for (int i = 0; i < n; ++i) {
    double th = 2.0 * std::numbers::pi * i / n;
    A.push_back(affine_point(std::cos(th), std::sin(th)));
  }
  std::vector<double> d(static_cast<std::size_t>(k), 0.5);
  Seed<double> s{n, k, A, place_marks(A, k, d)};
  return s;
}

}  // namespace penta
