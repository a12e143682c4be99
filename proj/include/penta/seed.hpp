#pragma once

#include <string>
#include <vector>

#include "penta/errors.hpp"
#include "penta/projective.hpp"

namespace penta {

// Convex n-gon A_1..A_n with marked points B_{n-k+1}..B_n, B_j on edge A_j A_{j+1}.
template <typename S>
struct Seed {
  int n = 0;
  int k = 0;
  std::vector<ProjPoint<S>> A;
  std::vector<ProjPoint<S>> B;

  // 1-based, cyclic.
  const ProjPoint<S>& a(int i) const { return A[static_cast<std::size_t>(((i - 1) % n + n) % n)]; }
  // j in [n-k+1, n].
  const ProjPoint<S>& b(int j) const { return B[static_cast<std::size_t>(j - (n - k + 1))]; }

  friend bool operator==(const Seed& x, const Seed& y) {
    return x.n == y.n && x.k == y.k && x.A == y.A && x.B == y.B;
  }
  friend bool operator!=(const Seed& x, const Seed& y) { return !(x == y); }
};

struct SeedCheck {
  enum class Kind { Ok, BadRange, NotConvex, BNotInterior };
  Kind kind = Kind::Ok;
  int index = 0;
  std::string message;

  bool ok() const { return kind == Kind::Ok; }
  std::string kind_name() const;
};

class InvalidSeed : public Error {
 public:
  explicit InvalidSeed(SeedCheck check)
      : Error("InvalidSeed", check.message), check_(std::move(check)) {}
  const SeedCheck& check() const { return check_; }

 private:
  SeedCheck check_;
};

namespace detail {

template <typename S>
SeedCheck fail(SeedCheck::Kind kind, int index, std::string message) {
  return SeedCheck{kind, index, std::move(message)};
}

// Coefficients (alpha, beta) with p = alpha*u + beta*v for collinear triples.
template <typename S>
std::pair<S, S> pencil_coefficients(const Vec3<S>& u, const Vec3<S>& v, const Vec3<S>& p) {
  Vec3<S> l = cross(u, v);
  int drop = largest_component(l);
  S d = minor2(u, v, drop);
  return {S(minor2(p, v, drop) / d), S(minor2(u, p, drop) / d)};
}

}  // namespace detail

// Convexity in the z = 1 chart.  Each vertex is lifted with positive third
// coordinate, so float canonical forms with z = -1 need no special casing.
// Besides the turn signs at every vertex, every vertex must lie on the inner
// side of every edge, which rules out star polygons.
template <typename S>
SeedCheck validate_seed(const Seed<S>& s) {
  using T = ScalarTraits<S>;
  using K = SeedCheck::Kind;
  const int n = s.n, k = s.k;
  if (n < 4 || k < 1 || k > n - 1)
    return detail::fail<S>(K::BadRange, 0, "need n >= 4 and 1 <= k <= n-1");
  if (static_cast<int>(s.A.size()) != n || static_cast<int>(s.B.size()) != k)
    return detail::fail<S>(K::BadRange, 0, "A must hold n points and B must hold k points");

  std::vector<Vec3<S>> lift(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) {
    Vec3<S> h = s.A[static_cast<std::size_t>(l)].h();
    int sz = T::sign(h[2]);
    if (sz == 0) return detail::fail<S>(K::NotConvex, l + 1, "vertex " + std::to_string(l + 1) + " is at infinity");
    if (sz < 0)
      for (auto& v : h) v = -v;
    lift[static_cast<std::size_t>(l)] = h;
  }
  auto L = [&](int i) -> const Vec3<S>& { return lift[static_cast<std::size_t>(((i % n) + n) % n)]; };
  const int sigma = T::sign(det3(L(0), L(1), L(2)));
  if (sigma == 0) return detail::fail<S>(K::NotConvex, 2, "vertices 1,2,3 are collinear");
  for (int i = 0; i < n; ++i)
    if (T::sign(det3(L(i), L(i + 1), L(i + 2))) != sigma)
      return detail::fail<S>(K::NotConvex, (i + 1) % n + 1,
                             "turn at vertex " + std::to_string((i + 1) % n + 1) + " is not strict");
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < n; ++l) {
      if (l == i || l == (i + 1) % n) continue;
      if (T::sign(det3(L(i), L(i + 1), L(l))) != sigma)
        return detail::fail<S>(K::NotConvex, i + 1,
                               "vertex " + std::to_string(l + 1) + " is not on the inner side of edge " +
                                   std::to_string(i + 1));
    }

  for (int j = n - k + 1; j <= n; ++j) {
    const Vec3<S>& u = L(j - 1);
    const Vec3<S>& v = L(j);
    const Vec3<S>& p = s.b(j).h();
    std::string where = "B" + std::to_string(j) + " is not interior to edge A" + std::to_string(j) +
                        "A" + std::to_string(j % n + 1);
    if (T::sign(det3(u, v, p)) != 0) return detail::fail<S>(K::BNotInterior, j, where);
    auto [alpha, beta] = detail::pencil_coefficients(u, v, p);
    int sa = T::sign(alpha), sb = T::sign(beta);
    if constexpr (!T::exact) {
      double tot = std::fabs(alpha) + std::fabs(beta);
      sa = std::fabs(alpha) > kEpsilon * tot ? (alpha > 0 ? 1 : -1) : 0;
      sb = std::fabs(beta) > kEpsilon * tot ? (beta > 0 ? 1 : -1) : 0;
    }
    if (sa == 0 || sb == 0 || sa != sb) return detail::fail<S>(K::BNotInterior, j, where);
  }
  return {};
}

template <typename S>
void require_valid(const Seed<S>& s) {
  SeedCheck c = validate_seed(s);
  if (!c.ok()) throw InvalidSeed(c);
}

// One application of the shift map.  B* points are built from the largest
// index down, each one depending on the previous.
template <typename S>
Seed<S> step(const Seed<S>& s) {
  const int n = s.n, k = s.k;
  std::vector<ProjPoint<S>> As(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i)
    As[static_cast<std::size_t>(i - 1)] = i <= n - k ? s.a(i + 1) : s.b(i);
  auto as = [&](int i) -> const ProjPoint<S>& { return As[static_cast<std::size_t>(((i - 1) % n + n) % n)]; };

  std::vector<ProjPoint<S>> Bs(static_cast<std::size_t>(k));
  auto bs = [&](int j) -> ProjPoint<S>& { return Bs[static_cast<std::size_t>(j - (n - k + 1))]; };
  bs(n) = intersect(s.a(1), as(2), as(n), as(1));
  for (int j = n - 1; j >= n - k + 1; --j) bs(j) = intersect(s.a(j + 1), bs(j + 1), as(j), as(j + 1));
  return Seed<S>{n, k, std::move(As), std::move(Bs)};
}

// Inverse of step.  Unstarred A_i for i > n-k+1 are built in ascending order, A_1 last.
template <typename S>
Seed<S> step_inverse(const Seed<S>& s) {
  const int n = s.n, k = s.k;
  std::vector<ProjPoint<S>> A(static_cast<std::size_t>(n));
  std::vector<ProjPoint<S>> B(static_cast<std::size_t>(k));
  auto a = [&](int i) -> ProjPoint<S>& { return A[static_cast<std::size_t>(i - 1)]; };
  auto b = [&](int j) -> ProjPoint<S>& { return B[static_cast<std::size_t>(j - (n - k + 1))]; };
  for (int i = 2; i <= n - k + 1; ++i) a(i) = s.a(i - 1);
  for (int j = n - k + 1; j <= n; ++j) b(j) = s.a(j);
  for (int i = n - k + 2; i <= n; ++i) a(i) = intersect(a(i - 1), b(i - 1), s.b(i - 1), s.b(i));
  a(1) = intersect(a(n), b(n), s.a(2), s.b(n));
  return Seed<S>{n, k, std::move(A), std::move(B)};
}

template <typename S>
Seed<S> apply(const ProjTransform<S>& t, const Seed<S>& s) {
  Seed<S> r{s.n, s.k, {}, {}};
  for (auto& p : s.A) r.A.push_back(apply(t, p));
  for (auto& p : s.B) r.B.push_back(apply(t, p));
  return r;
}

template <typename S>
Seed<S> apply_matrix(const Mat3<S>& m, const Seed<S>& s) {
  Seed<S> r{s.n, s.k, {}, {}};
  for (auto& p : s.A) r.A.push_back(apply_matrix(m, p));
  for (auto& p : s.B) r.B.push_back(apply_matrix(m, p));
  return r;
}

// Transform sending A_1..A_4 to the unit square.
template <typename S>
ProjTransform<S> normalizing_transform(const Seed<S>& s) {
  return transform_from_quads<S>({s.A[0], s.A[1], s.A[2], s.A[3]}, unit_square<S>());
}

template <typename S>
Seed<S> normalize(const Seed<S>& s) {
  Seed<S> r = apply(normalizing_transform(s), s);
  // Pin the square exactly; float rounding would otherwise leave 1e-16 noise.
  auto sq = unit_square<S>();
  for (int i = 0; i < 4; ++i) r.A[static_cast<std::size_t>(i)] = sq[static_cast<std::size_t>(i)];
  return r;
}

// d_j = |A_j - B_j| / |A_j - A_{j+1}| in the z = 1 chart.
template <typename S>
std::vector<S> d_ratios(const Seed<S>& s) {
  using T = ScalarTraits<S>;
  std::vector<S> d;
  for (int j = s.n - s.k + 1; j <= s.n; ++j) {
    auto [ax, ay] = affine(s.a(j));
    auto [cx, cy] = affine(s.a(j + 1));
    auto [bx, by] = affine(s.b(j));
    S ex = cx - ax, ey = cy - ay;
    // Collinear points: the ratio is read off the dominant coordinate.
    if (T::abs(ex) >= T::abs(ey))
      d.push_back(S((bx - ax) / ex));
    else
      d.push_back(S((by - ay) / ey));
  }
  return d;
}

template <typename S>
bool is_plc_window(const std::array<ProjPoint<S>, 5>& p) {
  int first = 0;
  for (int i = 0; i < 5; ++i) {
    int o = 0;
    try {
      o = orientation(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>((i + 1) % 5)],
                      p[static_cast<std::size_t>((i + 2) % 5)]);
    } catch (const PointAtInfinity&) {
      return false;
    }
    if (o == 0) return false;
    if (i == 0) first = o;
    if (o != first) return false;
  }
  return true;
}

// Pentagram map on a closed polygon, right convention: v'_j = (v_{j-1} v_{j+1})(v_j v_{j+2}).
template <typename S>
std::vector<ProjPoint<S>> pentagram_map_closed(const std::vector<ProjPoint<S>>& poly) {
  const int n = static_cast<int>(poly.size());
  if (n < 5) throw ConstructionDegenerate("closed polygon needs at least 5 vertices");
  auto v = [&](int i) -> const ProjPoint<S>& { return poly[static_cast<std::size_t>(((i % n) + n) % n)]; };
  std::vector<ProjPoint<S>> out;
  out.reserve(poly.size());
  for (int j = 0; j < n; ++j) out.push_back(intersect(v(j - 1), v(j + 1), v(j), v(j + 2)));
  return out;
}

// Same construction on an open path; the image of P_j exists for interior j.
template <typename S>
std::vector<ProjPoint<S>> pentagram_map_path(const std::vector<ProjPoint<S>>& path) {
  std::vector<ProjPoint<S>> out;
  for (std::size_t j = 1; j + 2 < path.size(); ++j)
    out.push_back(intersect(path[j - 1], path[j + 1], path[j], path[j + 2]));
  return out;
}

template <typename S>
Seed<double> to_float(const Seed<S>& s) {
  Seed<double> r{s.n, s.k, {}, {}};
  for (auto& p : s.A) r.A.push_back(to_float(p));
  for (auto& p : s.B) r.B.push_back(to_float(p));
  return r;
}

}  // namespace penta
