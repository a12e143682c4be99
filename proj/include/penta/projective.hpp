#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <utility>

#include "penta/errors.hpp"
#include "penta/scalar.hpp"

namespace penta {

template <typename S>
using Vec3 = std::array<S, 3>;

template <typename S>
using Mat3 = std::array<std::array<S, 3>, 3>;

template <typename S>
Vec3<S> cross(const Vec3<S>& a, const Vec3<S>& b) {
  return {S(a[1] * b[2] - a[2] * b[1]), S(a[2] * b[0] - a[0] * b[2]),
          S(a[0] * b[1] - a[1] * b[0])};
}

template <typename S>
S dot(const Vec3<S>& a, const Vec3<S>& b) {
  return S(a[0] * b[0] + a[1] * b[1] + a[2] * b[2]);
}

template <typename S>
S det3(const Vec3<S>& a, const Vec3<S>& b, const Vec3<S>& c) {
  return dot(a, cross(b, c));
}

// Canonical representative of a homogeneous triple.
template <typename S>
Vec3<S> canonical(Vec3<S> h) {
  using T = ScalarTraits<S>;
  if constexpr (T::exact) {
    for (int i = 2; i >= 0; --i) {
      if (T::sign(h[i]) != 0) {
        S d = h[i];
        for (auto& v : h) v /= d;
        return h;
      }
    }
    throw ZeroVector();
  } else {
    double m = 0.0;
    int at = -1;
    for (int i = 0; i < 3; ++i) {
      if (std::fabs(h[i]) > m) {
        m = std::fabs(h[i]);
        at = i;
      }
    }
    if (at < 0 || !(m > 0.0) || !std::isfinite(m)) throw ZeroVector();
    for (auto& v : h) v /= m;
    // Sign: first coordinate that is not negligible is made positive.
    int lead = at;
    for (int i = 0; i < 3; ++i) {
      if (std::fabs(h[i]) > kEpsilon) {
        lead = i;
        break;
      }
    }
    if (h[lead] < 0)
      for (auto& v : h) v = -v;
    for (auto& v : h)
      if (v == 0.0) v = 0.0;  // drop negative zero
    return h;
  }
}

template <typename S>
bool same_ray(const Vec3<S>& a, const Vec3<S>& b) {
  using T = ScalarTraits<S>;
  for (int i = 0; i < 3; ++i)
    if (!T::equal(a[i], b[i])) return false;
  return true;
}

struct point_tag {};
struct line_tag {};

template <typename S, typename Tag>
class Homogeneous {
 public:
  using scalar_type = S;

  Homogeneous() : h_{S(0), S(0), S(1)} {}
  explicit Homogeneous(const Vec3<S>& h) : h_(canonical(h)) {}
  Homogeneous(S x, S y, S z) : h_(canonical(Vec3<S>{x, y, z})) {}

  const Vec3<S>& h() const { return h_; }
  const S& operator[](std::size_t i) const { return h_[i]; }

  friend bool operator==(const Homogeneous& a, const Homogeneous& b) {
    return same_ray(a.h_, b.h_);
  }
  friend bool operator!=(const Homogeneous& a, const Homogeneous& b) { return !(a == b); }

 private:
  Vec3<S> h_;
};

template <typename S>
using ProjPoint = Homogeneous<S, point_tag>;

template <typename S>
using ProjLine = Homogeneous<S, line_tag>;

template <typename S>
ProjPoint<S> affine_point(S x, S y) {
  return ProjPoint<S>(std::move(x), std::move(y), S(1));
}

template <typename S>
bool is_finite(const ProjPoint<S>& p) {
  return !ScalarTraits<S>::is_zero(p[2]);
}

// Affine coordinates in the z = 1 chart.
template <typename S>
std::pair<S, S> affine(const ProjPoint<S>& p) {
  if (!is_finite(p)) throw PointAtInfinity();
  if constexpr (is_exact_v<S>) {
    return {p[0], p[1]};  // canonical form already has z = 1
  } else {
    return {p[0] / p[2], p[1] / p[2]};
  }
}

template <typename S>
ProjLine<S> join(const ProjPoint<S>& p, const ProjPoint<S>& q) {
  if (p == q) throw CoincidentPoints();
  Vec3<S> l = cross(p.h(), q.h());
  try {
    return ProjLine<S>(l);
  } catch (const ZeroVector&) {
    throw CoincidentPoints();
  }
}

template <typename S>
ProjPoint<S> meet(const ProjLine<S>& l, const ProjLine<S>& m) {
  if (l == m) throw CoincidentLines();
  Vec3<S> p = cross(l.h(), m.h());
  try {
    return ProjPoint<S>(p);
  } catch (const ZeroVector&) {
    throw CoincidentLines();
  }
}

template <typename S>
bool incident(const ProjPoint<S>& p, const ProjLine<S>& l) {
  return ScalarTraits<S>::is_zero(dot(p.h(), l.h()));
}

// (ab) meet (cd), rethrowing any degeneracy as ConstructionDegenerate.
template <typename S>
ProjPoint<S> intersect(const ProjPoint<S>& a, const ProjPoint<S>& b, const ProjPoint<S>& c,
                       const ProjPoint<S>& d) {
  try {
    return meet(join(a, b), join(c, d));
  } catch (const CoincidentPoints&) {
    throw ConstructionDegenerate("coincident points in construction");
  } catch (const CoincidentLines&) {
    throw ConstructionDegenerate("coincident lines in construction");
  }
}

namespace detail {

// 2x2 minor of two homogeneous triples after dropping coordinate `drop`.
template <typename S>
S minor2(const Vec3<S>& a, const Vec3<S>& b, int drop) {
  int i = drop == 0 ? 1 : 0;
  int j = drop == 2 ? 1 : 2;
  return S(a[i] * b[j] - a[j] * b[i]);
}

template <typename S>
int largest_component(const Vec3<S>& v) {
  using T = ScalarTraits<S>;
  int at = 0;
  for (int i = 1; i < 3; ++i)
    if (T::abs(v[i]) > T::abs(v[at])) at = i;
  return at;
}

}  // namespace detail

// Inverse cross ratio (a-b)(c-d)/((a-c)(b-d)) of four collinear points.
template <typename S>
S cross_ratio(const ProjPoint<S>& a, const ProjPoint<S>& b, const ProjPoint<S>& c,
              const ProjPoint<S>& d) {
  const ProjPoint<S>* pts[4] = {&a, &b, &c, &d};
  int distinct = 0;
  for (int i = 0; i < 4; ++i) {
    bool fresh = true;
    for (int j = 0; j < i; ++j)
      if (*pts[i] == *pts[j]) fresh = false;
    if (fresh) ++distinct;
  }
  if (distinct < 3) throw DegenerateQuadruple("fewer than three distinct points");
  if (a == c || b == d) throw DegenerateQuadruple();

  // Carrier line through the first distinct pair.
  ProjLine<S> line;
  bool found = false;
  for (int i = 0; i < 4 && !found; ++i)
    for (int j = i + 1; j < 4 && !found; ++j)
      if (*pts[i] != *pts[j]) {
        line = join(*pts[i], *pts[j]);
        found = true;
      }
  for (auto* p : pts)
    if (!incident(*p, line)) throw NotCollinear();

  // Dropping the coordinate where the line is largest keeps the
  // projection onto the remaining pair injective on the line.
  int drop = detail::largest_component(line.h());
  S num = detail::minor2(a.h(), b.h(), drop) * detail::minor2(c.h(), d.h(), drop);
  S den = detail::minor2(a.h(), c.h(), drop) * detail::minor2(b.h(), d.h(), drop);
  if (ScalarTraits<S>::sign(den) == 0 && (is_exact_v<S> || den == 0))
    throw DegenerateQuadruple();
  return S(num / den);
}

// Sign of the orientation determinant in the z = 1 chart.
template <typename S>
int orientation(const ProjPoint<S>& p, const ProjPoint<S>& q, const ProjPoint<S>& r) {
  auto [px, py] = affine(p);
  auto [qx, qy] = affine(q);
  auto [rx, ry] = affine(r);
  S d = (qx - px) * (ry - py) - (qy - py) * (rx - px);
  return ScalarTraits<S>::sign(d);
}

template <typename S>
Mat3<S> identity_matrix() {
  Mat3<S> m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = S(i == j ? 1 : 0);
  return m;
}

template <typename S>
Mat3<S> multiply(const Mat3<S>& a, const Mat3<S>& b) {
  Mat3<S> r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      S acc(0);
      for (int t = 0; t < 3; ++t) acc += a[i][t] * b[t][j];
      r[i][j] = acc;
    }
  return r;
}

template <typename S>
Vec3<S> multiply(const Mat3<S>& m, const Vec3<S>& v) {
  return {dot(m[0], v), dot(m[1], v), dot(m[2], v)};
}

template <typename S>
S determinant(const Mat3<S>& m) {
  Vec3<S> c0{m[0][0], m[1][0], m[2][0]};
  Vec3<S> c1{m[0][1], m[1][1], m[2][1]};
  Vec3<S> c2{m[0][2], m[1][2], m[2][2]};
  return det3(c0, c1, c2);
}

// Adjugate; a projective inverse since scale does not matter.
template <typename S>
Mat3<S> adjugate(const Mat3<S>& m) {
  Mat3<S> a{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
      int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      a[i][j] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
    }
  return a;
}

// Scales a float matrix so its largest entry has magnitude 1.
inline void rescale(Mat3<double>& m) {
  double s = 0.0;
  for (auto& row : m)
    for (double v : row) s = std::max(s, std::fabs(v));
  if (s > 0)
    for (auto& row : m)
      for (double& v : row) v /= s;
}

template <typename S>
class ProjTransform {
 public:
  ProjTransform() : m_(identity_matrix<S>()) {}
  explicit ProjTransform(const Mat3<S>& m) : m_(m) {
    if constexpr (is_exact_v<S>) {
      if (sgn(determinant(m_)) == 0) throw SingularTransform();
    } else {
      Mat3<double> n = m_;
      for (auto& row : n) {
        double s = 0.0;
        for (double v : row) s = std::max(s, std::fabs(v));
        if (s == 0.0) throw SingularTransform();
        for (double& v : row) v /= s;
      }
      if (std::fabs(determinant(n)) <= kEpsilon) throw SingularTransform();
    }
  }

  const Mat3<S>& matrix() const { return m_; }

  ProjTransform inverse() const { return ProjTransform(adjugate(m_)); }

  friend ProjTransform operator*(const ProjTransform& a, const ProjTransform& b) {
    return ProjTransform(multiply(a.m_, b.m_));
  }

 private:
  Mat3<S> m_;
};

template <typename S>
ProjPoint<S> apply(const ProjTransform<S>& t, const ProjPoint<S>& p) {
  return ProjPoint<S>(multiply(t.matrix(), p.h()));
}

template <typename S>
ProjPoint<S> apply_matrix(const Mat3<S>& m, const ProjPoint<S>& p) {
  return ProjPoint<S>(multiply(m, p.h()));
}

namespace detail {

template <typename S>
void require_general_position(const std::array<ProjPoint<S>, 4>& q) {
  static constexpr int triples[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  for (auto& t : triples)
    if (ScalarTraits<S>::sign(det3(q[t[0]].h(), q[t[1]].h(), q[t[2]].h())) == 0)
      throw DegenerateQuad();
}

// Matrix sending the standard frame e1,e2,e3,(1,1,1) to q.
template <typename S>
Mat3<S> frame_matrix(const std::array<ProjPoint<S>, 4>& q) {
  Mat3<S> m{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = q[j][i];
  Vec3<S> lambda = multiply(adjugate(m), q[3].h());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] *= lambda[j];
  return m;
}

}  // namespace detail

template <typename S>
ProjTransform<S> transform_from_quads(const std::array<ProjPoint<S>, 4>& src,
                                      const std::array<ProjPoint<S>, 4>& dst) {
  detail::require_general_position(src);
  detail::require_general_position(dst);
  Mat3<S> m = multiply(detail::frame_matrix(dst), adjugate(detail::frame_matrix(src)));
  if constexpr (!is_exact_v<S>) rescale(m);
  return ProjTransform<S>(m);
}

template <typename S>
std::array<ProjPoint<S>, 4> unit_square() {
  return {affine_point<S>(S(0), S(0)), affine_point<S>(S(1), S(0)),
          affine_point<S>(S(1), S(1)), affine_point<S>(S(0), S(1))};
}

template <typename S>
ProjPoint<double> to_float(const ProjPoint<S>& p) {
  using T = ScalarTraits<S>;
  return ProjPoint<double>(T::to_double(p[0]), T::to_double(p[1]), T::to_double(p[2]));
}

}  // namespace penta
