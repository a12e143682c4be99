#include "penta/analysis.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>

#include "penta/tiling.hpp"

namespace penta {

namespace {

constexpr double kPi = std::numbers::pi;

Point2 xy(const ProjPoint<double>& p) {
  auto [x, y] = affine(p);
  return {x, y};
}

double cross2(const Point2& a, const Point2& b) { return a[0] * b[1] - a[1] * b[0]; }
Point2 sub(const Point2& a, const Point2& b) { return {a[0] - b[0], a[1] - b[1]}; }

double signed_area(const std::vector<Point2>& poly) {
  double s = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) s += cross2(poly[i], poly[(i + 1) % poly.size()]);
  return 0.5 * s;
}

// Strictly inside a convex polygon of orientation sigma.
bool strictly_inside(const std::vector<Point2>& poly, double sigma, const Point2& p) {
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2& a = poly[i];
    const Point2& b = poly[(i + 1) % poly.size()];
    if (!(sigma * cross2(sub(b, a), sub(p, a)) > 0.0)) return false;
  }
  return true;
}

Mat3<double> translation(double dx, double dy) {
  return Mat3<double>{{{1.0, 0.0, dx}, {0.0, 1.0, dy}, {0.0, 0.0, 1.0}}};
}

// Seed iterated in the unit-square chart; `frame` maps it back to the
// caller's chart.  Rows of the frame only ever multiply on the right, so a
// chart centred near the limit keeps relative precision for tiny polygons.
class NormalizedWalk {
 public:
  NormalizedWalk(const Seed<double>& s, const Mat3<double>& left) {
    Mat3<double> back = adjugate(normalizing_transform(s).matrix());
    frame_ = multiply(left, back);
    rescale(frame_);
    state_ = normalize(s);
  }

  void forward(int steps) {
    for (int t = 0; t < steps; ++t) {
      Seed<double> next = step(state_);
      Mat3<double> nt = normalizing_transform(next).matrix();
      frame_ = multiply(frame_, adjugate(nt));
      rescale(frame_);
      state_ = normalize(next);
    }
  }

  std::vector<Point2> polygon() const {
    std::vector<Point2> out;
    for (auto& p : state_.A) out.push_back(xy(apply_matrix(frame_, p)));
    return out;
  }

  Point2 vertex() const { return xy(apply_matrix(frame_, state_.A[0])); }

  // True when the A-polygon `steps` ahead lies strictly inside the current
  // one.  Tested in the unit-square chart, where both are well scaled.
  bool nests(int steps) const {
    std::vector<Point2> outer, inner;
    for (auto& p : state_.A) outer.push_back(xy(p));
    Seed<double> t = state_;
    for (int i = 0; i < steps; ++i) t = step(t);
    const double sigma = signed_area(outer) > 0 ? 1.0 : -1.0;
    for (auto& p : t.A)
      if (!strictly_inside(outer, sigma, xy(p))) return false;
    return true;
  }

 private:
  Seed<double> state_;
  Mat3<double> frame_{};
};

LimitPoint limit_point_in(const Seed<double>& seed, const Mat3<double>& left, double tol, int max_iterations) {
  require_valid(seed);
  LimitPoint out;
  out.stride = nesting_stride(seed.n, seed.k);
  NormalizedWalk walk(seed, left);
  std::vector<Point2> K = walk.polygon();
  out.diameters.push_back(diameter(K));
  for (int m = 0;; ++m) {
    if (out.diameters.back() < tol) {
      out.point = centroid(K);
      out.radius = out.diameters.back() / 2.0;
      out.iterations = m;
      return out;
    }
    if (m >= max_iterations)
      throw MaxIterations("diameter " + std::to_string(out.diameters.back()) + " after " +
                          std::to_string(m) + " iterations");
    if (!walk.nests(out.stride))
      throw NestingViolated("K_" + std::to_string(m + 1) + " leaves K_" + std::to_string(m));
    walk.forward(out.stride);
    K = walk.polygon();
    out.diameters.push_back(diameter(K));
  }
}

}  // namespace

double diameter(const std::vector<Point2>& pts) {
  double d = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      d = std::max(d, std::hypot(pts[i][0] - pts[j][0], pts[i][1] - pts[j][1]));
  return d;
}

Point2 centroid(const std::vector<Point2>& pts) {
  Point2 c{0.0, 0.0};
  for (auto& p : pts) {
    c[0] += p[0];
    c[1] += p[1];
  }
  c[0] /= static_cast<double>(pts.size());
  c[1] /= static_cast<double>(pts.size());
  return c;
}

double hilbert_distance(const std::vector<ProjPoint<double>>& K, const ProjPoint<double>& b,
                        const ProjPoint<double>& c) {
  std::vector<Point2> poly;
  for (auto& p : K) poly.push_back(xy(p));
  if (poly.size() < 3) throw PointNotInterior("polygon has fewer than 3 vertices");
  const double sigma = signed_area(poly) > 0 ? 1.0 : -1.0;
  Point2 pb = xy(b), pc = xy(c);
  if (!strictly_inside(poly, sigma, pb) || !strictly_inside(poly, sigma, pc)) throw PointNotInterior();
  // Fixed argument order makes d(b,c) and d(c,b) bitwise equal.
  if (pc < pb) std::swap(pb, pc);
  Point2 d = sub(pc, pb);
  if (d[0] == 0.0 && d[1] == 0.0) return 0.0;

  // Line b + t d; b sits at t = 0 and c at t = 1.
  double ta = -std::numeric_limits<double>::infinity();
  double td = std::numeric_limits<double>::infinity();
  bool found_a = false, found_d = false;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2& p = poly[i];
    Point2 e = sub(poly[(i + 1) % poly.size()], p);
    double den = cross2(d, e);
    if (den == 0.0) continue;
    Point2 w = sub(p, pb);
    double t = cross2(w, e) / den;
    double s = cross2(w, d) / den;
    if (s < -1e-12 || s > 1.0 + 1e-12) continue;
    if (t < 0.0 && (!found_a || t > ta)) {
      ta = t;
      found_a = true;
    }
    if (t > 1.0 && (!found_d || t < td)) {
      td = t;
      found_d = true;
    }
  }
  if (!found_a || !found_d) throw PointNotInterior("line misses the boundary");
  double cr = (ta - 0.0) * (1.0 - td) / ((ta - 1.0) * (0.0 - td));
  return -std::log(cr);
}

int nesting_stride(int n, int k) { return k == 1 ? n + 1 : n; }

LimitPoint limit_point(const Seed<double>& seed, double tol, int max_iterations) {
  return limit_point_in(seed, identity_matrix<double>(), tol, max_iterations);
}

namespace {

struct ZPoint {
  mpz_class x, y, z;
};

Rational dyadic(const Rational& q) {
  return Rational(mpf_class(q, 128));
}

Mat3<Rational> dyadic(const Mat3<Rational>& m) {
  Mat3<Rational> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = dyadic(m[i][j]);
  return r;
}

ProjPoint<Rational> dyadic(const ProjPoint<Rational>& p) {
  auto [x, y] = affine(p);
  return affine_point<Rational>(dyadic(x), dyadic(y));
}

// Denominators cleared; same projective action.
template <std::size_t N>
std::array<mpz_class, N> integer_scaled(const std::array<Rational, N>& v) {
  mpz_class l = 1;
  for (auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::array<mpz_class, N> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = v[i].get_num() * (l / v[i].get_den());
  return r;
}

Mat3<mpz_class> integer_matrix(const Mat3<Rational>& m) {
  std::array<Rational, 9> flat;
  for (int i = 0; i < 9; ++i) flat[i] = m[i / 3][i % 3];
  auto z = integer_scaled(flat);
  Mat3<mpz_class> r;
  for (int i = 0; i < 9; ++i) r[i / 3][i % 3] = z[i];
  return r;
}

// Spiral walk for angle measurements deep in the spiral, where vertices agree
// with the centre to far more digits than a double holds.  Local states are
// exact steps rounded to 128-bit dyadics in a near unit-square chart; the
// frame back to the caller's chart is an exact integer product.
class DeepWalk {
 public:
  explicit DeepWalk(const Seed<double>& s) : state_(to_exact(s)) { renormalize(state_); }

  void forward() { renormalize(step(state_)); }

  ZPoint point(const ProjPoint<Rational>& p) const {
    Vec3<mpz_class> v = multiply(frame_, integer_scaled(p.h()));
    return {v[0], v[1], v[2]};
  }
  ZPoint vertex() const { return point(state_.A[0]); }
  std::vector<ZPoint> polygon() const {
    std::vector<ZPoint> out;
    for (auto& p : state_.A) out.push_back(point(p));
    return out;
  }

 private:
  static Seed<Rational> to_exact(const Seed<double>& s) {
    Seed<Rational> r{s.n, s.k, {}, {}};
    for (auto& p : s.A) r.A.push_back(affine_point<Rational>(Rational(affine(p).first), Rational(affine(p).second)));
    for (auto& p : s.B) r.B.push_back(affine_point<Rational>(Rational(affine(p).first), Rational(affine(p).second)));
    return r;
  }

  void renormalize(const Seed<Rational>& next) {
    Mat3<Rational> nt = dyadic(normalizing_transform(next).matrix());
    Mat3<mpz_class> back = integer_matrix(adjugate(nt));
    frame_ = started_ ? multiply(frame_, back) : back;
    started_ = true;
    mp_bitcnt_t twos = std::numeric_limits<mp_bitcnt_t>::max();
    for (auto& row : frame_)
      for (auto& v : row)
        if (sgn(v) != 0) twos = std::min(twos, mpz_scan1(v.get_mpz_t(), 0));
    if (twos > 0 && twos != std::numeric_limits<mp_bitcnt_t>::max())
      for (auto& row : frame_)
        for (auto& v : row) mpz_tdiv_q_2exp(v.get_mpz_t(), v.get_mpz_t(), twos);
    Seed<Rational> t = apply_matrix(nt, next);
    for (auto& p : t.A) p = dyadic(p);
    for (auto& p : t.B) p = dyadic(p);
    state_ = std::move(t);
  }

  Seed<Rational> state_;
  Mat3<mpz_class> frame_;
  bool started_ = false;
};

// a - b up to a positive factor, exactly.
struct Offset {
  mpz_class x, y;
};

Offset offset(const ZPoint& a, const ZPoint& b) {
  Offset o{a.x * b.z - b.x * a.z, a.y * b.z - b.y * a.z};
  if (sgn(a.z) * sgn(b.z) < 0) {
    o.x = -o.x;
    o.y = -o.y;
  }
  return o;
}

// atan2 of two big integers, scaled to a common exponent first.
double big_atan2(const mpz_class& y, const mpz_class& x) {
  long ey = 0, ex = 0;
  double my = mpz_get_d_2exp(&ey, y.get_mpz_t());
  double mx = mpz_get_d_2exp(&ex, x.get_mpz_t());
  long e = my == 0.0 ? ex : (mx == 0.0 ? ey : std::max(ex, ey));
  double t = std::atan2(std::ldexp(my, static_cast<int>(ey - e)), std::ldexp(mx, static_cast<int>(ex - e)));
  // keep the exact sign when the ratio underflows
  if (t == 0.0 && sgn(y) != 0) t = std::copysign(std::numeric_limits<double>::denorm_min(), sgn(y));
  return t;
}

// log2 of |a - b|.
double log2_distance(const ZPoint& a, const ZPoint& b) {
  Offset o = offset(a, b);
  mpz_class n2 = o.x * o.x + o.y * o.y;
  mpz_class d = a.z * b.z;
  if (sgn(n2) == 0) return -std::numeric_limits<double>::infinity();
  long en = 0, ed = 0;
  double mn = mpz_get_d_2exp(&en, n2.get_mpz_t());
  double md = mpz_get_d_2exp(&ed, d.get_mpz_t());
  return 0.5 * (static_cast<double>(en) + std::log2(mn)) - static_cast<double>(ed) - std::log2(std::fabs(md));
}

}  // namespace

WindingTurns winding_turns(const Seed<double>& seed, int steps) {
  WindingTurns out;
  if (steps < 1) return out;
  require_valid(seed);
  DeepWalk walk(seed);
  std::vector<ZPoint> P;
  for (int j = 1; j <= steps; ++j) {
    P.push_back(walk.vertex());
    walk.forward();
  }

  // Walk on until the nested polygon is tiny next to the closest vertex.
  const double margin = std::log2(1e-6);
  auto closest = [&](const ZPoint& c) {
    double d = std::numeric_limits<double>::infinity();
    for (auto& p : P) d = std::min(d, log2_distance(p, c));
    return d;
  };
  const int stride = nesting_stride(seed.n, seed.k);
  ZPoint c = walk.vertex();
  double dmin = closest(c);
  for (int m = 0;; ++m) {
    if (m > 4 * steps + 2000) throw MaxIterations("winding centre did not resolve");
    if (m % stride != 0) {
      walk.forward();
      continue;
    }
    auto K = walk.polygon();
    double diam = -std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < K.size(); ++a)
      for (std::size_t b = a + 1; b < K.size(); ++b) diam = std::max(diam, log2_distance(K[a], K[b]));
    if (diam < margin + dmin) {
      c = K[0];
      double fresh = closest(c);
      if (diam < margin + fresh) break;
      dmin = fresh;
    }
    walk.forward();
  }

  Offset prev = offset(P[0], c);
  out.start = big_atan2(prev.y, prev.x);
  for (std::size_t j = 1; j < P.size(); ++j) {
    Offset cur = offset(P[j], c);
    mpz_class cr = prev.x * cur.y - prev.y * cur.x;
    mpz_class dt = prev.x * cur.x + prev.y * cur.y;
    out.turns.push_back(big_atan2(cr, dt));
    prev = std::move(cur);
  }
  return out;
}

std::vector<double> winding_profile(const Seed<double>& seed, int steps) {
  WindingTurns w = winding_turns(seed, steps);
  std::vector<double> out;
  if (steps < 1) return out;
  double acc = w.start;
  out.push_back(acc);
  for (double t : w.turns) out.push_back(acc += t);
  return out;
}

namespace {

struct Residual {
  double modulus;
  double argument;
};

Residual spiral_residual(int n, int k, double r, double th) {
  const double psi = std::atan2(r * std::sin(th), 1.0 + r * std::cos(th));
  const double mod1 = std::hypot(1.0 + r * std::cos(th), r * std::sin(th));
  return {k * std::log(2.0 * r * std::cos(th)) - (n + k) * std::log(r) - k * std::log(mod1),
          (n + k) * th - k * psi - 2.0 * kPi};
}

double equation_residual(int n, int k, std::complex<double> z) {
  std::complex<double> zb = std::conj(z);
  return std::abs(std::pow(z + zb, k) - std::pow(z, n + k) * std::pow(1.0 + zb, k));
}

// r in (0,1) solving the modulus equation for fixed theta (it is monotone in r).
double modulus_root(int n, int k, double th) {
  double lo = 1e-12, hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (spiral_residual(n, k, mid, th).modulus > 0) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

bool newton(int n, int k, double& r, double& th, double lo, double hi, int& iterations) {
  double u = std::log(r);
  auto F = [&](double uu, double tt) {
    Residual res = spiral_residual(n, k, std::exp(uu), tt);
    return std::array<double, 2>{res.modulus, res.argument};
  };
  auto norm = [](const std::array<double, 2>& v) { return std::hypot(v[0], v[1]); };
  std::array<double, 2> f = F(u, th);
  for (int it = 0; it < 100; ++it) {
    ++iterations;
    if (norm(f) < 1e-15) break;
    const double h = 1e-7;
    std::array<double, 2> fu1 = F(u + h, th), fu0 = F(u - h, th);
    std::array<double, 2> ft1 = F(u, th + h), ft0 = F(u, th - h);
    double a = (fu1[0] - fu0[0]) / (2 * h), b = (ft1[0] - ft0[0]) / (2 * h);
    double c = (fu1[1] - fu0[1]) / (2 * h), d = (ft1[1] - ft0[1]) / (2 * h);
    double det = a * d - b * c;
    if (!std::isfinite(det) || det == 0.0) return false;
    double du = -(d * f[0] - b * f[1]) / det;
    double dt = -(-c * f[0] + a * f[1]) / det;
    double lambda = 1.0;
    bool improved = false;
    for (int half = 0; half < 40; ++half, lambda *= 0.5) {
      double nu = u + lambda * du, nt = th + lambda * dt;
      if (nu >= 0.0 || nt <= lo || nt >= hi) continue;
      std::array<double, 2> nf = F(nu, nt);
      if (std::isfinite(nf[0]) && std::isfinite(nf[1]) && norm(nf) < norm(f)) {
        u = nu;
        th = nt;
        f = nf;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  r = std::exp(u);
  return norm(f) < 1e-13;
}

}  // namespace

LogSpiral log_spiral_parameter(int n, int k) {
  if (n < 4 || k < 1 || k > n - 1) throw InvalidSeed(SeedCheck{SeedCheck::Kind::BadRange, 0, "need n >= 4 and 1 <= k <= n-1"});
  const double lo = 2.0 * kPi / (n + k), hi = 2.0 * kPi / n;
  LogSpiral out;
  double r = 0.8, th = 0.5 * (lo + hi);
  bool ok = newton(n, k, r, th, lo, hi, out.iterations);
  if (!ok) {
    // Nested bisection: the argument residual changes sign across the band.
    out.bisection = true;
    double a = lo, b = hi;
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (a + b);
      double g = spiral_residual(n, k, modulus_root(n, k, mid), mid).argument;
      if (g < 0) a = mid;
      else b = mid;
    }
    th = 0.5 * (a + b);
    r = modulus_root(n, k, th);
    newton(n, k, r, th, lo, hi, out.iterations);
  }
  out.z = std::polar(r, th);
  out.residual = equation_residual(n, k, out.z);
  std::complex<double> zb = std::conj(out.z);
  std::complex<double> w = out.z * (out.z + zb) / (1.0 + zb);
  out.w_residual = std::abs(std::pow(w, k) - std::pow(out.z, n + 2 * k));
  if (!(r < 1.0) || !(th > lo && th < hi) || !(out.residual < 1e-10))
    throw NoConvergence("best residual " + std::to_string(out.residual));
  return out;
}

Seed<double> theta_average(const Seed<double>& seed, int m) {
  if (m < 1) throw NoConvergence("averaging window must be positive");
  const int n = seed.n, k = seed.k;
  std::vector<Point2> sumA(static_cast<std::size_t>(n), Point2{0.0, 0.0});
  std::vector<double> sumD(static_cast<std::size_t>(k), 0.0);
  Seed<double> cur = normalize(seed);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < n; ++i) {
      Point2 p = xy(cur.A[static_cast<std::size_t>(i)]);
      sumA[static_cast<std::size_t>(i)][0] += p[0];
      sumA[static_cast<std::size_t>(i)][1] += p[1];
    }
    std::vector<double> d = d_ratios(cur);
    for (int t = 0; t < k; ++t) sumD[static_cast<std::size_t>(t)] += d[static_cast<std::size_t>(t)];
    if (j + 1 < m) cur = normalize(step(cur));
  }
  Seed<double> out{n, k, {}, {}};
  for (auto& p : sumA) out.A.push_back(affine_point(p[0] / m, p[1] / m));
  for (auto& d : sumD) d /= m;
  out.B = place_marks(out.A, k, sumD);
  SeedCheck check = validate_seed(out);
  if (!check.ok()) throw AverageNotValidSeed(check.message);
  return out;
}

namespace {

double seed_distance(const Seed<double>& a, const Seed<double>& b) {
  double d = 0.0;
  auto cmp = [&](const std::vector<ProjPoint<double>>& x, const std::vector<ProjPoint<double>>& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      Point2 p = xy(x[i]), q = xy(y[i]);
      d = std::max({d, std::fabs(p[0] - q[0]), std::fabs(p[1] - q[1])});
    }
  };
  cmp(a.A, b.A);
  cmp(a.B, b.B);
  return d;
}

}  // namespace

LpsResult lps_from(const Seed<double>& start, double tol, int m, int max_iterations) {
  LpsResult out{normalize(start), 0, 0.0};
  if (m <= 0) m = 2 * start.n + start.k;
  for (int it = 1; it <= max_iterations; ++it) {
    Seed<double> next = theta_average(out.seed, m);
    out.delta = seed_distance(next, out.seed);
    out.seed = std::move(next);
    out.iterations = it;
    if (out.delta < tol) return out;
  }
  throw NoConvergence("averaging delta " + std::to_string(out.delta) + " after " +
                      std::to_string(max_iterations) + " iterations");
}

LpsResult lps_seed(int n, int k, double tol, int m, int max_iterations) {
  return lps_from(regular_seed(n, k), tol, m, max_iterations);
}

ShiftSimilarity shift_similarity(const Seed<double>& seed, int samples) {
  ShiftSimilarity out;
  SpiralOrbit<double> orbit(seed, 1, std::max(samples + 1, 5));
  std::array<ProjPoint<double>, 4> q0{orbit.vertex(1), orbit.vertex(2), orbit.vertex(3), orbit.vertex(4)};
  std::array<ProjPoint<double>, 4> q1{orbit.vertex(2), orbit.vertex(3), orbit.vertex(4), orbit.vertex(5)};
  Mat3<double> h0 = transform_from_quads(q0, unit_square<double>()).matrix();
  Mat3<double> h1 = transform_from_quads(q1, unit_square<double>()).matrix();
  out.shift = multiply(adjugate(h1), h0);
  rescale(out.shift);

  Eigen::Matrix3d S;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) S(i, j) = out.shift[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  Eigen::EigenSolver<Eigen::Matrix3d> es(S);
  int real_at = -1, cplx_at = -1;
  for (int i = 0; i < 3; ++i) {
    if (std::fabs(es.eigenvalues()[i].imag()) < 1e-12 * std::abs(es.eigenvalues()[i])) real_at = i;
    else if (es.eigenvalues()[i].imag() > 0) cplx_at = i;
  }
  if (real_at < 0 || cplx_at < 0) throw NoConvergence("shift map is not of spiral type");
  std::complex<double> lambda = es.eigenvalues()[real_at];
  std::complex<double> mu = es.eigenvalues()[cplx_at];
  out.rho = std::abs(mu) / std::abs(lambda);
  out.phi = std::fabs(std::arg(mu / lambda));

  Eigen::Vector3cd w = es.eigenvectors().col(cplx_at);
  Eigen::Vector3d e = es.eigenvectors().col(real_at).real();
  Mat3<double> basis{};
  for (int i = 0; i < 3; ++i) {
    basis[static_cast<std::size_t>(i)] = {w[i].real(), w[i].imag(), e[i]};
  }
  out.to_frame = adjugate(basis);
  out.fixed_point = {e[0] / e[2], e[1] / e[2]};

  auto radius = [&](const ProjPoint<double>& p) {
    Vec3<double> v = multiply(out.to_frame, p.h());
    return std::hypot(v[0], v[1]) / std::fabs(v[2]);
  };
  double prev = radius(orbit.vertex(1));
  for (int j = 2; j <= samples + 1; ++j) {
    double cur = radius(orbit.vertex(j));
    out.ratios.push_back(cur / prev);
    prev = cur;
  }
  return out;
}

bool PeriodicityReport::all_pass() const {
  return std::all_of(trials.begin(), trials.end(), [](const PeriodicityTrial& t) { return t.pass; });
}

int PeriodicityReport::passed() const {
  return static_cast<int>(std::count_if(trials.begin(), trials.end(), [](const PeriodicityTrial& t) { return t.pass; }));
}

namespace {

std::string first_difference(const Seed<Rational>& a, const Seed<Rational>& b) {
  auto scan = [](const char* tag, const std::vector<ProjPoint<Rational>>& x,
                 const std::vector<ProjPoint<Rational>>& y, int base) -> std::string {
    for (std::size_t i = 0; i < x.size(); ++i)
      for (int c = 0; c < 3; ++c)
        if (x[i][static_cast<std::size_t>(c)] != y[i][static_cast<std::size_t>(c)])
          return std::string(tag) + std::to_string(base + static_cast<int>(i)) + "." + "xyz"[c];
    return {};
  };
  std::string d = scan("A", a.A, b.A, 1);
  if (d.empty()) d = scan("B", a.B, b.B, a.n - a.k + 1);
  return d;
}

PeriodicityTrial run_trial(int n, int k, int order, int trial, std::uint64_t rng_seed) {
  Rng rng(rng_seed * 1000003ULL + static_cast<std::uint64_t>(trial));
  Seed<Rational> s = random_seed(n, k, rng);
  Seed<Rational> lhs = normalize(iterate(s, order));
  Seed<Rational> rhs = normalize(s);
  PeriodicityTrial t;
  t.trial = trial;
  t.first_difference = first_difference(lhs, rhs);
  t.pass = t.first_difference.empty();
  return t;
}

}  // namespace

PeriodicityReport periodicity_check(int n, int k, int order, int trials, std::uint64_t rng_seed) {
  PeriodicityReport rep{n, k, order, {}};
  std::vector<std::future<PeriodicityTrial>> jobs;
  for (int t = 0; t < trials; ++t) jobs.push_back(std::async(std::launch::async, run_trial, n, k, order, t, rng_seed));
  for (auto& j : jobs) rep.trials.push_back(j.get());
  return rep;
}

std::vector<OrbitPoint> limit_point_orbit(const Seed<double>& seed, int m_max, double tol) {
  std::vector<OrbitPoint> out;
  Seed<double> cur = normalize(seed);
  for (int m = 0; m <= m_max; ++m) {
    out.push_back({m, limit_point(cur, tol).point});
    if (m < m_max) cur = normalize(step(cur));
  }
  return out;
}

ZProbeReport z_maximization_probe(int n, int k, int samples, double perturbation, std::uint64_t rng_seed) {
  ZProbeReport rep;
  rep.n = n;
  rep.k = k;
  Seed<double> lps = lps_seed(n, k).seed;
  rep.z_lps = z_invariant(lps);
  Rng rng(rng_seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> d0 = d_ratios(lps);
  int attempts = 0;
  while (static_cast<int>(rep.samples.size()) < samples && attempts < 100 * std::max(samples, 1)) {
    ++attempts;
    Seed<double> s{n, k, {}, {}};
    for (auto& p : lps.A) {
      Point2 q = xy(p);
      s.A.push_back(affine_point(q[0] + perturbation * u(rng), q[1] + perturbation * u(rng)));
    }
    std::vector<double> d = d0;
    for (auto& v : d) v = std::clamp(v + perturbation * u(rng), 0.02, 0.98);
    s.B = place_marks(s.A, k, d);
    if (!validate_seed(s).ok()) {
      ++rep.rejected;
      continue;
    }
    rep.samples.push_back(z_invariant(s));
  }
  rep.max_sample = rep.samples.empty() ? 0.0 : *std::max_element(rep.samples.begin(), rep.samples.end());
  rep.gap = rep.z_lps - rep.max_sample;
  rep.lps_is_max = rep.samples.empty() || rep.gap >= -1e-12 * std::max(1.0, std::fabs(rep.z_lps));
  return rep;
}

}  // namespace penta
