#include "penta/api.hpp"

namespace penta::api {

namespace {

template <typename S>
json invariants_of(const Seed<S>& s) {
  const int n = s.n, k = s.k, span = 2 * n + k;
  SpiralOrbit<S> orbit(s, -1, span + 2);
  FlagSequence<S> f = flag_sequence(orbit, 1, span);
  json flags = json::array(), chi = json::array();
  for (int i = f.first; i <= f.last(); ++i) flags.push_back(io::scalar_json(f.at(i)));
  for (int j = 1; j <= span; ++j) chi.push_back(io::scalar_json(vertex_invariant(f.at(2 * j), f.at(2 * j + 1))));
  S z = z_invariant(s);
  json out{{"Z", io::scalar_json(z)}, {"flag_first_index", f.first}, {"flags", flags}, {"chi", chi}};
  if constexpr (is_exact_v<S>) out["Z_float"] = z.get_d();
  return out;
}

json point_json(const Point2& p) { return json::array({p[0], p[1]}); }

}  // namespace

io::AnySeed checked_seed(const json& seed) {
  io::AnySeed s = io::seed_from_json(seed);
  std::visit([](const auto& x) { require_valid(x); }, s);
  return s;
}

json validate(const json& seed) {
  io::AnySeed s = io::seed_from_json(seed);
  return std::visit([](const auto& x) { return io::check_to_json(validate_seed(x)); }, s);
}

json step(const json& seed, int power, bool inverse, bool force_float) {
  io::AnySeed s = checked_seed(seed);
  const int q = inverse ? -power : power;
  if (force_float || !io::is_rational(s)) return io::seed_to_json(iterate(io::as_float(s), q));
  return io::seed_to_json(iterate(std::get<Seed<Rational>>(s), q));
}

json normalize(const json& seed, bool force_float) {
  io::AnySeed s = checked_seed(seed);
  if (force_float || !io::is_rational(s)) return io::seed_to_json(penta::normalize(io::as_float(s)));
  return io::seed_to_json(penta::normalize(std::get<Seed<Rational>>(s)));
}

json spiral_window(const json& seed, int j_min, int j_max) {
  Seed<double> s = io::as_float(checked_seed(seed));
  SpiralOrbit<double> orbit(s, j_min, j_max);
  json out = json::array();
  for (int j = j_min; j <= j_max; ++j) {
    ProjPoint<double> p = orbit.vertex(j);
    json v{{"j", j}, {"h", json::array({p[0], p[1], p[2]})}};
    if (is_finite(p)) {
      auto [x, y] = affine(p);
      v["x"] = x;
      v["y"] = y;
    }
    out.push_back(v);
  }
  return json{{"vertices", out}};
}

json invariants(const json& seed, bool force_float) {
  io::AnySeed s = checked_seed(seed);
  if (force_float || !io::is_rational(s)) return invariants_of(io::as_float(s));
  return invariants_of(std::get<Seed<Rational>>(s));
}

json limit_point(const json& seed, double tol) {
  LimitPoint lp = penta::limit_point(io::as_float(checked_seed(seed)), tol);
  return json{{"point", point_json(lp.point)}, {"radius", lp.radius}, {"iterations", lp.iterations},
              {"stride", lp.stride}};
}

json limit_point_orbit(const json& seed, int m_max, double tol) {
  auto orbit = penta::limit_point_orbit(io::as_float(checked_seed(seed)), m_max, tol);
  json out = json::array();
  for (auto& p : orbit) out.push_back(json{{"m", p.m}, {"x", p.c[0]}, {"y", p.c[1]}});
  return json{{"orbit", out}};
}

json winding(const json& seed, int steps) {
  return json{{"profile", winding_profile(io::as_float(checked_seed(seed)), steps)}};
}

json log_spiral(int n, int k) {
  LogSpiral z = log_spiral_parameter(n, k);
  return json{{"re", z.z.real()}, {"im", z.z.imag()}, {"r", std::abs(z.z)}, {"theta", std::arg(z.z)},
              {"residual", z.residual}, {"w_residual", z.w_residual}};
}

json lps(int n, int k, double tol) {
  LpsResult r = lps_seed(n, k, tol);
  json out{{"seed", io::seed_to_json(r.seed)}, {"iterations", r.iterations}, {"delta", r.delta}};
  out["z"] = log_spiral(n, k);
  return out;
}

json periodicity(int n, int k, int order, int trials, std::uint64_t rng_seed) {
  PeriodicityReport rep = periodicity_check(n, k, order, trials, rng_seed);
  json t = json::array();
  for (auto& tr : rep.trials)
    t.push_back(json{{"trial", tr.trial}, {"pass", tr.pass}, {"first_differing_coordinate", tr.first_difference}});
  return json{{"n", n}, {"k", k}, {"order", order}, {"passed", rep.passed()}, {"trials", t}};
}

json z_probe(int n, int k, int samples, double perturbation, std::uint64_t rng_seed) {
  ZProbeReport r = z_maximization_probe(n, k, samples, perturbation, rng_seed);
  return json{{"n", n},
              {"k", k},
              {"Z_lps", r.z_lps},
              {"samples", r.samples},
              {"rejected", r.rejected},
              {"max_sample", r.max_sample},
              {"gap", r.gap},
              {"lps_is_max", r.lps_is_max}};
}

}  // namespace penta::api
