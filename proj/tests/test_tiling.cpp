#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "penta/random.hpp"
#include "penta/tiling.hpp"

using namespace penta;
using testutil::P;
using testutil::Pf;
using testutil::Q;

namespace {

std::array<ProjPoint<double>, 5> regular_pentagon() {
  std::array<ProjPoint<double>, 5> v;
  for (int i = 0; i < 5; ++i) {
    double t = 0.4 + 2 * std::numbers::pi * i / 5;
    v[static_cast<std::size_t>(i)] = Pf(std::cos(t), std::sin(t));
  }
  return v;
}

const std::vector<std::pair<int, int>> kTypes{{4, 1}, {4, 3}, {5, 2}, {6, 2}, {7, 3}};

}  // namespace

TEST_CASE("corner invariants") {
  auto [a, b] = corner_invariants(regular_pentagon());
  const double inv_phi = (std::sqrt(5.0) - 1) / 2;
  CHECK(a == doctest::Approx(inv_phi).epsilon(1e-13));
  CHECK(b == doctest::Approx(inv_phi).epsilon(1e-13));
  CHECK(vertex_invariant(a, b) == doctest::Approx(a * a));

  auto [x3, x4] = corner_invariants<Rational>({P("0", "0"), P("2", "0"), P("3", "2"), P("1", "3"), P("-1", "1")});
  CHECK(x3 == Q("9/14"));
  CHECK(x4 == Q("16/21"));

  CHECK_THROWS_AS(corner_invariants<Rational>({P("0", "0"), P("1", "0"), P("2", "0"), P("3", "0"), P("-1", "1")}),
                  ConstructionDegenerate);
  CHECK(vertex_invariant(Q("1/2"), Q("1/2")) == Q("1/4"));
}

TEST_CASE("flag sequences of PLC seeds") {
  Rng rng(101);
  for (auto [n, k] : kTypes) {
    auto s = random_seed(n, k, rng);
    SpiralOrbit<Rational> orb(s, -2, 3 * (2 * n + k));
    auto f = flag_sequence(orb, 0, 3 * (2 * n + k) - 2);
    if (n == 4 && k == 1) continue;  // not PLC
    for (auto& v : f.values) {
      CHECK(v > 0);
      CHECK(v < 1);
    }
  }
  SpiralOrbit<Rational> orb(testutil::square41(), 1, 6);
  CHECK_THROWS_AS(flag_sequence(orb, 1, 4), WindowTooSmall);
}

TEST_CASE("flag sequences are projective invariants and shift under T") {
  Rng rng(202);
  auto s = random_seed(5, 2, rng);
  auto T = testutil::random_transform(rng);
  SpiralOrbit<Rational> a(s, -2, 20), b(apply(T, s), -2, 20), c(step(s), -3, 19);
  auto fa = flag_sequence(a, 0, 18);
  CHECK(flag_sequence(b, 0, 18) == fa);
  auto fc = flag_sequence(c, -1, 17);
  for (int i = fc.first; i + 2 <= fa.last(); ++i)
    if (fa.has(i + 2)) CHECK(fc.at(i) == fa.at(i + 2));

  auto pf = path_flags(spiral_window(s, -2, 20), -2);
  for (int i = pf.first; i <= pf.last(); ++i) CHECK(pf.at(i) == fa.at(i));
}

TEST_CASE("pentagram row update examples") {
  std::vector<Rational> c(12, Q("3/10"));
  CHECK(pentagram_row_update_cyclic(c) == c);
  CHECK(pentagram_row_inverse_cyclic(c) == c);

  // f_2..f_5 = 1/2..1/5, f_0 = 1/6, f_1 = 1/7
  std::vector<Rational> x{Q("1/6"), Q("1/7"), Q("1/2"), Q("1/3"), Q("1/4"), Q("1/5")};
  auto y = pentagram_row_update_cyclic(x);
  CHECK(y[3] == Q("41/175"));
  CHECK(y[3] == Q("1/5") * (1 - Q("1/42")) / (1 - Q("1/6")));
  CHECK(pentagram_row_inverse_cyclic(y) == x);

  std::vector<Rational> pole{Q("2"), Q("1/2"), Q("1/3"), Q("1/4"), Q("1/5"), Q("1/6")};
  CHECK_THROWS_AS(pentagram_row_update_cyclic(pole), UnitProductDenominator);
  CHECK_THROWS_AS(pentagram_row_update_cyclic(std::vector<Rational>(5, Q("1/2"))), WindowTooSmall);

  FlagRow<Rational> open{-3, {}};
  for (int i = 0; i < 14; ++i) open.values.push_back(Rational(i + 2, 3 * i + 17));
  auto down = pentagram_row_update(open);
  CHECK(down.first == -1);
  auto up = pentagram_row_inverse(down);
  for (int i = up.first; i <= up.last(); ++i) CHECK(up.at(i) == open.at(i));
  CHECK_THROWS_AS(pentagram_row_update(FlagRow<Rational>{0, {Q("1/2"), Q("1/2"), Q("1/2")}}), WindowTooSmall);
}

TEST_CASE("algebraic rows agree with geometric pentagram images") {
  Rng rng(303);
  for (auto [n, k] : std::vector<std::pair<int, int>>{{5, 2}, {4, 3}, {6, 1}}) {
    auto s = random_seed(n, k, rng);
    const int L = 40;
    auto path = spiral_window(s, 1, L);
    auto lab = fill_labeling(s, LabelingRegion{0, 3, 10, 50});
    auto img = path;
    for (int r = 1; r <= 3; ++r) {
      img = pentagram_map_path(img);
      auto g = path_flags(img, 1 + r);
      const auto& row = lab.rows().at(r);
      int common = 0;
      for (int i = std::max(g.first, row.first); i <= std::min(g.last(), row.last()); ++i) {
        CHECK(row.at(i) == g.at(i));
        ++common;
      }
      CHECK(common > 20);
    }
  }

  for (int n : {7, 9, 11}) {
    for (int t = 0; t < 5; ++t) {
      auto poly = random_convex_polygon(n, rng);
      auto geo = closed_corner_invariants(pentagram_map_closed(poly));
      auto alg = pentagram_row_update_cyclic(closed_corner_invariants(poly));
      CHECK(geo == alg);
    }
  }
}

TEST_CASE("labeling compatibility, inverse fill and translation") {
  Rng rng(404);
  for (auto [n, k] : kTypes) {
    auto s = random_seed(n, k, rng);
    auto lab = fill_labeling(s, LabelingRegion{-4, 4, -10, 30});
    auto rep = check_compatibility(lab);
    CHECK(rep.ok);
    CHECK(rep.cells > 100);
    for (int r = lab.row_min(); r <= lab.row_max(); ++r) CHECK(lab.rows().at(r).first <= -10);

    // one row down then one row up
    auto down = pentagram_row_update(lab.rows().at(0));
    auto back = pentagram_row_inverse(down);
    for (int i = back.first; i <= back.last(); ++i) CHECK(back.at(i) == lab.label(0, i));

    // V translation: (r, i) ~ (r - k, i + 2n + 2k)
    int checked = 0;
    for (int r = 0; r <= 4; ++r)
      for (int i = -10; i <= 10; ++i) {
        auto [r2, i2] = lab.translate(r, i);
        if (lab.has(r2, i2)) {
          CHECK(lab.label(r2, i2) == lab.label(r, i));
          ++checked;
        }
      }
    CHECK(checked > 0);
  }
  CHECK_THROWS_AS(fill_labeling(testutil::square41(), LabelingRegion{1, 2, 0, 4}), WindowTooSmall);
  auto lab = fill_labeling(testutil::square41(), LabelingRegion{0, 0, 0, 4});
  CHECK_THROWS_AS(lab.label(3, 0), EdgeOutsideRegion);
}

TEST_CASE("float labeling is compatible within tolerance") {
  Rng rng(405);
  auto s = to_float(random_seed(5, 2, rng));
  auto lab = fill_labeling(s, LabelingRegion{-3, 3, 0, 20});
  CHECK(check_compatibility(lab, 1e-9).ok);
}

TEST_CASE("scaling symmetry keeps compatibility") {
  Rng rng(505);
  auto s = random_seed(5, 2, rng);
  auto lab = fill_labeling(s, LabelingRegion{-3, 3, 0, 20});
  const Rational sc = Q("7/3");
  std::map<int, FlagRow<Rational>> rows = lab.rows();
  for (auto& [r, row] : rows)
    for (int i = row.first; i <= row.last(); ++i) {
      auto& v = row.values[static_cast<std::size_t>(i - row.first)];
      if (((i % 2) + 2) % 2 == 0) v *= sc;
      else v /= sc;
    }
  TilingLabeling<Rational> scaled(5, 2, rows);
  auto rep = check_compatibility(scaled);
  CHECK(rep.ok);
  CHECK(rep.cells > 50);

  // scaling only one family breaks it
  rows = lab.rows();
  for (auto& [r, row] : rows) row.values[0] *= sc;
  CHECK_FALSE(check_compatibility(TilingLabeling<Rational>(5, 2, rows)).ok);
}

TEST_CASE("zigzag monomials") {
  Rng rng(606);
  auto s = random_seed(5, 2, rng);
  auto lab = fill_labeling(s, LabelingRegion{-8, 8, -4, 30});
  CHECK(zigzag_monomial(lab, Zigzag{{0, 0}, {}}) == 1);
  CHECK(zigzag_monomial(lab, Zigzag{{0, 2}, {ZigStep::Up}}) == lab.at_column(0, 2));
  CHECK(zigzag_monomial(lab, Zigzag{{0, 2}, {ZigStep::Down}}) == lab.at_column(1, 2));
  CHECK_THROWS_AS(zigzag_monomial(lab, Zigzag{{0, 1}, {ZigStep::Up}}), EdgeOutsideRegion);

  std::uniform_int_distribution<int> coin(0, 1);
  for (int t = 0; t < 100; ++t) {
    std::vector<ZigStep> a(10, ZigStep::Down);
    const int ups = 3 + coin(rng) + coin(rng) + coin(rng) + coin(rng);
    std::fill_n(a.begin(), ups, ZigStep::Up);
    std::shuffle(a.begin(), a.end(), rng);
    std::vector<ZigStep> b = a;
    std::shuffle(b.begin(), b.end(), rng);
    Zigzag pa{{0, 4}, a}, pb{{0, 4}, b};
    REQUIRE(pa.end() == pb.end());
    CHECK(zigzag_monomial(lab, pa) == zigzag_monomial(lab, pb));
  }
}

TEST_CASE("Z invariant") {
  Rng rng(707);
  for (auto [n, k] : kTypes) {
    auto s = random_seed(n, k, rng);
    Rational z = z_invariant(s);
    CHECK(z > 0);
    CHECK(z < 1);
    auto t = s;
    for (int m = 1; m <= 2 * n + k; ++m) {
      t = step(t);
      CHECK(z_invariant(t) == z);
    }
    CHECK(z_invariant(step_inverse(s)) == z);
    CHECK(z_invariant(apply(testutil::random_transform(rng), s)) == z);

    auto lab = fill_labeling(s, z_region(n, k, 3));
    for (int r = -3; r <= 0; ++r)
      for (int c = -3; c <= 3; ++c)
        if (((c - r) % 2 + 2) % 2 == 0) CHECK(z_invariant(lab, LatticeVertex{r, c}) == z);

    double zf = z_invariant(to_float(s));
    CHECK(std::fabs(zf - z.get_d()) <= 1e-12 * z.get_d());
  }
  CHECK(z_path(4, 3).steps.size() == 11);
  CHECK(z_path(4, 3).end() == LatticeVertex{-3, 11});
}

TEST_CASE("chi is bounded below by Z squared") {
  Rng rng(808);
  for (auto [n, k] : kTypes) {
    if (n == 4 && k == 1) continue;
    auto s = random_seed(n, k, rng);
    Rational z = z_invariant(s);
    SpiralOrbit<Rational> orb(s, -2, 5 * (2 * n + k) + 2);
    auto f = flag_sequence(orb, 0, 5 * (2 * n + k));
    for (int j = 0; j <= 5 * (2 * n + k); ++j) CHECK(vertex_invariant(f.at(2 * j), f.at(2 * j + 1)) >= z * z);
  }
}

TEST_CASE("closed polygon E and O") {
  for (int n : {5, 6, 8}) {
    std::vector<ProjPoint<double>> reg;
    for (int i = 0; i < n; ++i) {
      double t = 2 * std::numbers::pi * i / n;
      reg.push_back(Pf(std::cos(t), std::sin(t)));
    }
    auto [E, O] = closed_EO(reg);
    CHECK(E == doctest::Approx(O).epsilon(1e-12));
  }

  Rng rng(909);
  for (int t = 0; t < 10; ++t) {
    auto poly = random_convex_polygon(7, rng);
    auto img = pentagram_map_closed(poly);
    auto [E, O] = closed_EO(poly, 0);
    auto [E1, O1] = closed_EO(img, 1);
    CHECK(E1 == O);
    CHECK(O1 == E);
    // parity by index alone is preserved
    auto [Ei, Oi] = closed_EO(img, 0);
    CHECK(Ei == E);
    CHECK(Oi == O);

    auto T = testutil::random_transform(rng);
    std::vector<ProjPoint<Rational>> moved;
    for (auto& p : poly) moved.push_back(apply(T, p));
    CHECK(closed_EO(moved) == closed_EO(poly));

    auto fpoly = std::vector<ProjPoint<double>>();
    for (auto& p : poly) fpoly.push_back(to_float(p));
    auto [Ef, Of] = closed_EO(pentagram_map_closed(fpoly), 1);
    CHECK(std::fabs(Ef - O.get_d()) < 1e-9);
    CHECK(std::fabs(Of - E.get_d()) < 1e-9);
  }
}
