#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "penta/analysis.hpp"
#include "penta/random.hpp"
#include "penta/tiling.hpp"

using namespace penta;
using testutil::Pf;

namespace {

std::vector<ProjPoint<double>> square() {
  auto sq = unit_square<double>();
  return {sq.begin(), sq.end()};
}

Seed<double> float_seed(int n, int k, std::uint64_t seed) {
  Rng rng(seed);
  return to_float(random_seed(n, k, rng));
}

Seed<double> rotated(const Seed<double>& s, double a) {
  Mat3<double> R{{{std::cos(a), -std::sin(a), 0.0}, {std::sin(a), std::cos(a), 0.0}, {0.0, 0.0, 1.0}}};
  return apply_matrix(R, s);
}

bool inside(const std::vector<Point2>& K, const Point2& p) {
  int sign = 0;
  for (std::size_t i = 0; i < K.size(); ++i) {
    const auto& a = K[i];
    const auto& b = K[(i + 1) % K.size()];
    double c = (b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]);
    int s = c > 0 ? 1 : c < 0 ? -1 : 0;
    if (s == 0) return false;
    if (sign == 0) sign = s;
    if (s != sign) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("hilbert distance") {
  auto K = square();
  CHECK(hilbert_distance(K, Pf(0.25, 0.5), Pf(0.75, 0.5)) == doctest::Approx(std::log(9.0)).epsilon(1e-14));
  CHECK(hilbert_distance(K, Pf(0.3, 0.6), Pf(0.3, 0.6)) == 0.0);
  CHECK_THROWS_AS(hilbert_distance(K, Pf(1.5, 0.5), Pf(0.5, 0.5)), PointNotInterior);
  CHECK_THROWS_AS(hilbert_distance(K, Pf(1.0, 0.5), Pf(0.5, 0.5)), PointNotInterior);

  Rng rng(12);
  std::uniform_real_distribution<double> u(0.05, 0.95);
  std::vector<ProjPoint<double>> hexa;
  for (int i = 0; i < 6; ++i) {
    double t = 2 * std::numbers::pi * i / 6 + 0.2;
    hexa.push_back(Pf(0.5 + 0.6 * std::cos(t), 0.5 + 0.45 * std::sin(t)));
  }
  for (int t = 0; t < 200; ++t) {
    auto a = Pf(u(rng), u(rng)), b = Pf(u(rng), u(rng)), c = Pf(u(rng), u(rng));
    double ab = hilbert_distance(K, a, b), bc = hilbert_distance(K, b, c), ac = hilbert_distance(K, a, c);
    CHECK(ab == hilbert_distance(K, b, a));
    CHECK(ab > 0);
    CHECK(ac <= ab + bc + 1e-9);
  }

  // projective invariance, with images kept in the chart
  Mat3<double> m{{{1.2, 0.3, -0.1}, {-0.2, 0.9, 0.4}, {0.15, -0.1, 1.0}}};
  ProjTransform<double> T(m);
  std::vector<ProjPoint<double>> TK;
  for (auto& p : hexa) TK.push_back(apply(T, p));
  for (int t = 0; t < 50; ++t) {
    auto b = Pf(0.4 + 0.2 * u(rng), 0.4 + 0.2 * u(rng)), c = Pf(0.4 + 0.2 * u(rng), 0.4 + 0.2 * u(rng));
    CHECK(std::fabs(hilbert_distance(hexa, b, c) - hilbert_distance(TK, apply(T, b), apply(T, c))) < 1e-8);
  }
}

TEST_CASE("limit point") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 1}, {4, 3}, {5, 2}, {6, 1}}) {
    auto s = float_seed(n, k, 31 + static_cast<std::uint64_t>(n * 10 + k));
    auto lp = limit_point(s, 1e-9);
    CHECK(lp.stride == (k == 1 ? n + 1 : n));
    CHECK(lp.radius < 1e-9);
    CHECK(lp.iterations < 200);
    for (int m = 0; m <= std::min(lp.iterations, 6); ++m) {
      auto t = iterate(s, m * lp.stride);
      std::vector<Point2> K;
      for (auto& p : t.A) {
        auto [x, y] = affine(p);
        K.push_back({x, y});
      }
      CHECK(inside(K, lp.point));
    }
    for (std::size_t m = 3; m + 1 < lp.diameters.size(); ++m) CHECK(lp.diameters[m + 1] < lp.diameters[m]);

    auto lq = limit_point(step(s), 1e-9);
    CHECK(std::hypot(lq.point[0] - lp.point[0], lq.point[1] - lp.point[1]) <= lp.radius + lq.radius + 1e-12);
  }
  CHECK_THROWS_AS(limit_point(float_seed(5, 2, 3), 1e-12, 1), MaxIterations);
  auto bad = float_seed(5, 2, 3);
  bad.B[0] = bad.A[3];
  CHECK_THROWS_AS(limit_point(bad), InvalidSeed);
}

TEST_CASE("winding profile") {
  auto s = regular_seed(5, 2);
  const int steps = 10 * 12;
  auto w = winding_profile(s, steps);
  REQUIRE(w.size() == static_cast<std::size_t>(steps));
  for (std::size_t j = 1; j < w.size(); ++j) CHECK(w[j] > w[j - 1]);
  const double total = w.back() - w.front();
  CHECK(total > 16 * std::numbers::pi);
  // regression for the regular (5,2) seed
  CHECK(total == doctest::Approx(122.5137642).epsilon(1e-8));

  auto turns = winding_turns(s, steps);
  REQUIRE(turns.turns.size() == w.size() - 1);
  CHECK(turns.start == w.front());
  for (std::size_t j = 0; j < turns.turns.size(); ++j) {
    CHECK(turns.turns[j] > 0);
    CHECK(turns.turns[j] < std::numbers::pi);
  }

  // this seed contracts with nearly real eigenvalues: late turns fall to
  // ~1e-16 rad, below what a cumulative double can show
  Rng rng(4207);
  Seed<Rational> deep;
  for (int t = 0; t < 5; ++t) deep = random_seed(4, 3, rng);
  auto dt = winding_turns(to_float(deep), 110);
  double smallest = 1;
  for (double t : dt.turns) {
    CHECK(t > 0);
    smallest = std::min(smallest, t);
  }
  CHECK(smallest < 1e-15);

  auto r = winding_profile(rotated(s, 0.7), steps);
  for (std::size_t j = 0; j < w.size(); ++j) {
    double shift = std::remainder(r[j] - w[j] - 0.7, 2 * std::numbers::pi);
    CHECK(std::fabs(shift) < 1e-6);
    CHECK(r[j] - r[0] == doctest::Approx(w[j] - w[0]).epsilon(1e-9));
  }
}

TEST_CASE("log spiral parameter") {
  struct Case {
    int n, k;
    double r, th;
  };
  for (auto c : {Case{4, 1, 0.7373527057601, 1.36898392056}, Case{5, 2, 0.83779817009, 1.03055093039},
                 Case{5, 3, 0.822497333, 0.943723455}}) {
    auto z = log_spiral_parameter(c.n, c.k);
    CHECK(z.residual < 1e-10);
    CHECK(z.w_residual < 1e-9);
    CHECK(std::abs(z.z) < 1.0);
    CHECK(std::arg(z.z) > 2 * std::numbers::pi / (c.n + c.k));
    CHECK(std::arg(z.z) < 2 * std::numbers::pi / c.n);
    CHECK(std::abs(z.z) == doctest::Approx(c.r).epsilon(1e-8));
    CHECK(std::arg(z.z) == doctest::Approx(c.th).epsilon(1e-8));
  }
  for (int n = 4; n <= 8; ++n)
    for (int k = 1; k < n; ++k) {
      auto z = log_spiral_parameter(n, k);
      CHECK(z.residual < 1e-10);
      CHECK(z.w_residual < 1e-9);
    }
  CHECK_THROWS_AS(log_spiral_parameter(3, 1), InvalidSeed);
}

TEST_CASE("theta averaging") {
  auto s = float_seed(5, 3, 77);
  auto one = theta_average(s, 1);
  auto ns = normalize(s);
  for (std::size_t i = 0; i < one.A.size(); ++i) CHECK(one.A[i] == ns.A[i]);
  for (std::size_t i = 0; i < one.B.size(); ++i) CHECK(one.B[i] == ns.B[i]);

  auto res = lps_from(s, 1e-11, 0, 500);
  CHECK(res.delta < 1e-9);
  auto again = theta_average(res.seed, 2 * 5 + 3);
  for (std::size_t i = 0; i < again.A.size(); ++i) {
    auto [x0, y0] = affine(res.seed.A[i]);
    auto [x1, y1] = affine(again.A[i]);
    CHECK(std::fabs(x0 - x1) < 1e-10);
    CHECK(std::fabs(y0 - y1) < 1e-10);
  }
  CHECK_THROWS_AS(theta_average(s, 0), NoConvergence);
}

TEST_CASE("logarithmic pentagram spiral seeds") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 1}, {5, 2}, {5, 3}}) {
    auto lps = lps_seed(n, k);
    CHECK(lps.delta < 1e-9);
    CHECK(validate_seed(lps.seed).ok());

    double z = z_invariant(lps.seed);
    CHECK(std::fabs(z_invariant(step(lps.seed)) - z) < 1e-9);

    const int per = 2 * n + k;
    SpiralOrbit<double> orb(lps.seed, -2, 3 * per + 2);
    auto f = flag_sequence(orb, 0, 3 * per);
    for (int i = f.first; i + 2 * per <= f.last(); ++i) CHECK(std::fabs(f.at(i) - f.at(i + 2 * per)) < 1e-8);

    auto zz = std::abs(log_spiral_parameter(n, k).z);
    auto sim = shift_similarity(lps.seed, 3 * per);
    CHECK(std::fabs(sim.rho - zz) < 1e-4);
    for (double r : sim.ratios) CHECK(std::fabs(r - zz) < 1e-4);
  }
}

TEST_CASE("periodicity checks") {
  auto a = periodicity_check(4, 1, 2, 20);
  CHECK(a.all_pass());
  CHECK(a.passed() == 20);
  CHECK(periodicity_check(4, 2, 2, 20).all_pass());
  CHECK(periodicity_check(5, 1, 8, 3).all_pass());
  auto neg = periodicity_check(5, 2, 2, 5);
  CHECK(neg.passed() == 0);
  CHECK_FALSE(neg.trials[0].first_difference.empty());
  // deterministic by trial index
  auto again = periodicity_check(5, 2, 2, 5);
  for (std::size_t i = 0; i < neg.trials.size(); ++i) CHECK(again.trials[i].first_difference == neg.trials[i].first_difference);
}

TEST_CASE("limit point orbit") {
  // for n = 4 the normalized polygon is the unit square itself
  auto s = float_seed(4, 3, 5);
  auto orbit = limit_point_orbit(s, 12);
  REQUIRE(orbit.size() == 13);
  std::vector<Point2> sq{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  for (auto& o : orbit) CHECK(inside(sq, o.c));
  CHECK(orbit[0].m == 0);
  CHECK(orbit[12].m == 12);

  auto t = float_seed(5, 2, 5);
  auto orb = limit_point_orbit(t, 12);
  Seed<double> cur = normalize(t);
  for (auto& o : orb) {
    std::vector<Point2> K;
    for (auto& p : cur.A) {
      auto [x, y] = affine(p);
      K.push_back({x, y});
    }
    CHECK(inside(K, o.c));
    cur = normalize(step(cur));
  }
}

TEST_CASE("Z maximization probe") {
  auto zero = z_maximization_probe(4, 1, 5, 0.0);
  REQUIRE(zero.samples.size() == 5);
  for (double z : zero.samples) CHECK(z == doctest::Approx(zero.z_lps).epsilon(1e-12));
  CHECK(std::fabs(zero.gap) < 1e-12);

  auto rep = z_maximization_probe(4, 1, 30, 0.05, 9);
  CHECK(rep.samples.size() == 30);
  CHECK(rep.gap == doctest::Approx(rep.z_lps - rep.max_sample));
  MESSAGE("Z(lps) - max sample = " << rep.gap << ", lps is max: " << rep.lps_is_max);
}
