#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "penta/projective.hpp"

using namespace penta;
using testutil::P;
using testutil::Pf;
using testutil::Q;

TEST_CASE("canonical forms") {
  ProjPoint<Rational> p(Q("2"), Q("4"), Q("2"));
  CHECK(p[0] == 1);
  CHECK(p[1] == 2);
  CHECK(p[2] == 1);
  ProjPoint<Rational> inf(Q("-3"), Q("6"), Q("0"));
  CHECK(inf[1] == 1);
  CHECK(inf[0] == Q("-1/2"));

  ProjPoint<double> f(-2.0, 4.0, 1.0);
  CHECK(f[1] == doctest::Approx(-1.0));  // max magnitude scaled to +-1, first nonzero positive
  CHECK(f[0] > 0);
  CHECK(ProjPoint<double>(1.0, 2.0, 3.0) == ProjPoint<double>(-2.0, -4.0, -6.0));
  CHECK_THROWS_AS(ProjPoint<Rational>(Q("0"), Q("0"), Q("0")), ZeroVector);
}

TEST_CASE("join examples") {
  CHECK(join(ProjPoint<Rational>(0, 0, 1), ProjPoint<Rational>(1, 0, 1)) == ProjLine<Rational>(0, 1, 0));
  CHECK(join(ProjPoint<Rational>(1, 0, 0), ProjPoint<Rational>(0, 1, 0)) == ProjLine<Rational>(0, 0, 1));
  auto l = join(ProjPoint<Rational>(2, 3, 1), ProjPoint<Rational>(5, 7, 1));
  CHECK(l == ProjLine<Rational>(-4, 3, -1));
  CHECK(incident(ProjPoint<Rational>(2, 3, 1), l));
  CHECK(incident(ProjPoint<Rational>(5, 7, 1), l));
  CHECK_THROWS_AS(join(P("1/2", "1/3"), P("1/2", "1/3")), CoincidentPoints);

  auto lf = join(Pf(2, 3), Pf(5, 7));
  CHECK(std::fabs(dot(lf.h(), Pf(2, 3).h())) < 1e-12);
  CHECK_THROWS_AS(join(Pf(0.25, 0.5), Pf(0.25, 0.5)), CoincidentPoints);
}

TEST_CASE("meet examples") {
  CHECK(meet(ProjLine<Rational>(1, 0, 0), ProjLine<Rational>(0, 1, 0)) == ProjPoint<Rational>(0, 0, 1));
  // y = 0 and y = 1
  auto inf = meet(ProjLine<Rational>(0, 1, 0), ProjLine<Rational>(0, 1, -1));
  CHECK(inf == ProjPoint<Rational>(1, 0, 0));
  CHECK_FALSE(is_finite(inf));
  CHECK_THROWS_AS(affine(inf), PointAtInfinity);
  auto c = meet(join(P("0", "0"), P("1", "1")), join(P("1", "0"), P("0", "1")));
  CHECK(c == P("1/2", "1/2"));
  CHECK_THROWS_AS(meet(ProjLine<Rational>(1, 2, 3), ProjLine<Rational>(2, 4, 6)), CoincidentLines);
}

TEST_CASE("meet of join with another line through p returns p") {
  auto p = P("3/7", "-2/5");
  auto q = P("1", "4/3");
  auto r = P("-5/2", "1/9");
  CHECK(meet(join(p, q), join(p, r)) == p);
  // duality: both are the same triple product
  auto pq = join(p, q);
  auto pr = join(p, r);
  CHECK(meet(pq, pr).h() == ProjPoint<Rational>(cross(pq.h(), pr.h())).h());
  CHECK(join(p, q).h() == ProjLine<Rational>(cross(p.h(), q.h())).h());
}

TEST_CASE("cross ratio examples") {
  CHECK(cross_ratio(P("0", "0"), P("1", "0"), P("2", "0"), P("3", "0")) == Q("1/4"));
  // vertical carrier line exercises the other projection
  CHECK(cross_ratio(P("5", "0"), P("5", "1"), P("5", "2"), P("5", "3")) == Q("1/4"));
  CHECK(cross_ratio(Pf(0, 0), Pf(1, 1), Pf(2, 2), Pf(3, 3)) == doctest::Approx(0.25));
  CHECK_THROWS_AS(cross_ratio(P("0", "0"), P("1", "0"), P("0", "0"), P("3", "0")), DegenerateQuadruple);
  CHECK_THROWS_AS(cross_ratio(P("0", "0"), P("1", "0"), P("2", "0"), P("1", "0")), DegenerateQuadruple);
  CHECK_THROWS_AS(cross_ratio(P("0", "0"), P("1", "0"), P("2", "1"), P("3", "0")), NotCollinear);

  // ordered quadruples land in (0,1)
  Rng rng(7);
  std::uniform_int_distribution<int> u(-50, 50);
  for (int t = 0; t < 200; ++t) {
    std::array<int, 4> v{};
    for (;;) {
      for (int& x : v) x = u(rng);
      std::sort(v.begin(), v.end());
      if (std::adjacent_find(v.begin(), v.end()) == v.end()) break;
    }
    auto pt = [&](int s) { return P(std::to_string(s), std::to_string(2 * s + 1)); };
    Rational x = cross_ratio(pt(v[0]), pt(v[1]), pt(v[2]), pt(v[3]));
    CHECK(x > 0);
    CHECK(x < 1);
  }
}

TEST_CASE("cross ratio is projectively invariant") {
  auto a = P("0", "1"), b = P("1/3", "2"), c = P("1", "4"), d = P("7/2", "23/2");
  Rational x = cross_ratio(a, b, c, d);
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    auto T = testutil::random_transform(rng);
    CHECK(cross_ratio(apply(T, a), apply(T, b), apply(T, c), apply(T, d)) == x);
  }
  auto Tf = ProjTransform<double>(Mat3<double>{{{1.5, 0.2, -1}, {0.1, 2, 0.3}, {0.05, -0.02, 1}}});
  auto f = [&](const ProjPoint<Rational>& p) { return apply(Tf, to_float(p)); };
  CHECK(std::fabs(cross_ratio(f(a), f(b), f(c), f(d)) - x.get_d()) < 1e-9);
}

TEST_CASE("transform_from_quads") {
  auto sq = unit_square<Rational>();
  auto m = transform_from_quads(sq, sq).matrix();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(m[i][j] == (i == j ? m[0][0] : Rational(0)));
  auto same = transform_from_quads(sq, sq);
  for (auto& p : {P("1/3", "2/7"), P("-4", "9")}) CHECK(apply(same, p) == p);

  std::array<ProjPoint<Rational>, 4> rot{sq[1], sq[2], sq[3], sq[0]};
  auto R = transform_from_quads(sq, rot);
  ProjTransform<Rational> R4 = R * R * R * R;
  auto p = P("1/5", "3/8");
  CHECK(apply(R4, p) == p);
  CHECK(apply(R * R, p) != p);
  CHECK(apply(R, P("1/2", "1/2")) == P("1/2", "1/2"));

  std::array<ProjPoint<Rational>, 4> src{P("1", "2"), P("7/3", "1"), P("4", "5"), P("-1/2", "3")};
  auto T = transform_from_quads(src, sq);
  for (int i = 0; i < 4; ++i) CHECK(apply(T, src[i]) == sq[i]);
  auto Ti = T.inverse();
  for (int i = 0; i < 4; ++i) CHECK(apply(Ti, sq[i]) == src[i]);

  std::array<ProjPoint<Rational>, 4> bad{P("0", "0"), P("1", "1"), P("2", "2"), P("0", "1")};
  CHECK_THROWS_AS(transform_from_quads(bad, sq), DegenerateQuad);
  CHECK_THROWS_AS(transform_from_quads(sq, bad), DegenerateQuad);

  std::array<ProjPoint<double>, 4> fs{Pf(1, 2), Pf(2.3, 1), Pf(4, 5), Pf(-0.5, 3)};
  auto fsq = unit_square<double>();
  auto Tf = transform_from_quads(fs, fsq);
  for (int i = 0; i < 4; ++i) CHECK(apply(Tf, fs[i]) == fsq[i]);
}

TEST_CASE("apply") {
  ProjTransform<Rational> id;
  CHECK(apply(id, P("2/3", "-1")) == P("2/3", "-1"));
  auto T = testutil::sample_transform();
  auto p = P("5/4", "1/6");
  CHECK(apply(T.inverse(), apply(T, p)) == p);
  Mat3<Rational> tr{{{Q("1"), Q("0"), Q("3/2")}, {Q("0"), Q("1"), Q("-2")}, {Q("0"), Q("0"), Q("1")}}};
  CHECK(apply(ProjTransform<Rational>(tr), p) == P("11/4", "-11/6"));
  Mat3<Rational> sing{{{Q("1"), Q("2"), Q("3")}, {Q("2"), Q("4"), Q("6")}, {Q("0"), Q("0"), Q("1")}}};
  CHECK_THROWS_AS(ProjTransform<Rational>{sing}, SingularTransform);
}

TEST_CASE("orientation") {
  CHECK(orientation(P("0", "0"), P("1", "0"), P("0", "1")) == 1);
  CHECK(orientation(P("0", "0"), P("0", "1"), P("1", "0")) == -1);
  CHECK(orientation(P("0", "0"), P("1", "1"), P("2", "2")) == 0);
  CHECK(orientation(Pf(0, 0), Pf(1, 1), Pf(2, 2 + 1e-14)) == 0);
  CHECK_THROWS_AS(orientation(P("0", "0"), ProjPoint<Rational>(1, 0, 0), P("0", "1")), PointAtInfinity);
}

TEST_CASE("rational parsing") {
  CHECK(Q("3/6") == Rational(1, 2));
  CHECK(Q("-7") == -7);
  CHECK(Q("0.125") == Rational(1, 8));
  CHECK(Q("1e-3") == Rational(1, 1000));
  CHECK_THROWS_AS(Q("1/0"), ParseError);
  CHECK_THROWS_AS(Q("abc"), ParseError);
}
