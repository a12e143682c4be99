// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "penta/analysis.hpp"
#include "penta/random.hpp"
#include "penta/tiling.hpp"

using namespace penta;

namespace {

using Types = std::vector<std::pair<int, int>>;

// k <= 3: exact orbits for k = n-1 grow to 1e5-bit denominators within 5(2n+k) vertices
const Types kTested{{4, 1}, {4, 2}, {4, 3}, {5, 1}, {5, 2}, {5, 3}, {6, 1}, {6, 2}, {7, 2}, {7, 3}};
const Types kZTypes{{4, 1}, {4, 3}, {5, 2}, {6, 2}, {7, 3}};

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates the first failure message and a count of checks.
struct Checker {
  long checks = 0;
  std::string first;
  void operator()(bool ok, const std::string& what) {
    ++checks;
    if (!ok && first.empty()) first = what;
  }
  Outcome done() const {
    if (!first.empty()) return {false, first};
    return {true, std::to_string(checks) + " checks"};
  }
};

std::string type_str(int n, int k) { return "(" + std::to_string(n) + "," + std::to_string(k) + ")"; }

Outcome periodicity() {
  std::ostringstream msg;
  bool ok = true;
  struct Case {
    int n, k, order;
  };
  for (auto c : {Case{4, 1, 2}, Case{4, 2, 2}, Case{5, 1, 8}}) {
    auto rep = periodicity_check(c.n, c.k, c.order, 20);
    msg << type_str(c.n, c.k) << "^" << c.order << " " << rep.passed() << "/20 ";
    if (!rep.all_pass()) ok = false;
  }
  return {ok, msg.str()};
}

Outcome z_invariance() {
  Checker check;
  Rng rng(4201);
  for (auto [n, k] : kZTypes)
    for (int t = 0; t < 50; ++t) {
      auto s = random_seed(n, k, rng);
      Rational z = z_invariant(s);
      check(z_invariant(step(s)) == z, "exact Z changed for " + type_str(n, k));
      double zf = z_invariant(to_float(s));
      double zf1 = z_invariant(step(to_float(s)));
      check(std::fabs(zf - z.get_d()) <= 1e-12 * z.get_d(), "float Z off for " + type_str(n, k));
      check(std::fabs(zf1 - zf) <= 1e-12 * zf, "float Z changed for " + type_str(n, k));
    }
  return check.done();
}

Outcome geometry_algebra() {
  Checker check;
  Rng rng(4202);
  for (int n : {7, 9, 11})
    for (int t = 0; t < 25; ++t) {
      auto poly = random_convex_polygon(n, rng);
      auto geo = closed_corner_invariants(pentagram_map_closed(poly));
      check(geo == pentagram_row_update_cyclic(closed_corner_invariants(poly)),
            std::to_string(n) + "-gon rows differ");
    }
  return check.done();
}

Outcome eo_swap() {
  Checker check;
  Rng rng(4203);
  for (int n = 5; n <= 9; ++n)
    for (int t = 0; t < 25; ++t) {
      auto poly = random_convex_polygon(n, rng);
      auto [E, O] = closed_EO(poly, 0);
      auto [E1, O1] = closed_EO(pentagram_map_closed(poly), 1);
      check(E1 == O && O1 == E, std::to_string(n) + "-gon E/O not swapped");
    }
  return check.done();
}

Outcome inverse_roundtrip() {
  Checker check;
  Rng rng(4204);
  for (auto [n, k] : kTested)
    for (int t = 0; t < 10; ++t) {
      auto s = random_seed(n, k, rng);
      check(step_inverse(step(s)) == s, "inverse(step(s)) != s for " + type_str(n, k));
      check(step(step_inverse(s)) == s, "step(inverse(s)) != s for " + type_str(n, k));
    }
  std::uniform_int_distribution<std::size_t> pick(0, kTested.size() - 1);
  for (int t = 0; t < 1000; ++t) {
    auto [n, k] = kTested[pick(rng)];
    auto s = random_seed(n, k, rng);
    check(validate_seed(step(s)).ok(), "step(s) invalid for " + type_str(n, k));
  }
  return check.done();
}

// Window convexity, flag range and the chi bound share one exact orbit per seed.
struct PlcOutcome {
  Outcome windows, chi;
};

PlcOutcome plc_windows() {
  Checker win, chi;
  Rng rng(4205);
  for (auto [n, k] : kTested) {
    if (n == 4 && k == 1) continue;
    const int len = 5 * (2 * n + k);
    for (int t = 0; t < 10; ++t) {
      auto s = random_seed(n, k, rng);
      SpiralOrbit<Rational> orb(s, 1, len);
      for (int j = 3; j <= len - 2; ++j)
        win(is_plc_window(orb.window5(j)), "non-convex window at j=" + std::to_string(j) + " for " + type_str(n, k));
      auto f = flag_sequence(orb, 3, len - 2);
      for (const auto& v : f.values) win(v > 0 && v < 1, "flag outside (0,1) for " + type_str(n, k));
      Rational z = z_invariant(s);
      Rational z2 = z * z;
      for (int j = 3; j <= len - 2; ++j)
        chi(vertex_invariant(f.at(2 * j), f.at(2 * j + 1)) >= z2, "chi < Z^2 at j=" + std::to_string(j) + " for " + type_str(n, k));
    }
  }
  return {win.done(), chi.done()};
}

Outcome zigzag() {
  Checker check;
  Rng rng(4206);
  std::uniform_int_distribution<int> coin(0, 1);
  for (auto [n, k] : kZTypes) {
    auto lab = fill_labeling(random_seed(n, k, rng), LabelingRegion{-8, 8, -4, 30});
    for (int t = 0; t < 100; ++t) {
      std::vector<ZigStep> a(10, ZigStep::Down);
      const int ups = 3 + coin(rng) + coin(rng) + coin(rng) + coin(rng);
      std::fill_n(a.begin(), ups, ZigStep::Up);
      std::shuffle(a.begin(), a.end(), rng);
      std::vector<ZigStep> b = a;
      std::shuffle(b.begin(), b.end(), rng);
      Zigzag pa{{0, 4}, a}, pb{{0, 4}, b};
      check(pa.end() == pb.end() && zigzag_monomial(lab, pa) == zigzag_monomial(lab, pb),
            "zigzag monomials differ for " + type_str(n, k));
    }
  }
  return check.done();
}

struct DynamicsOutcome {
  Outcome contraction, winding;
};

DynamicsOutcome dynamics() {
  Checker con, wind;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0, min_turn = 4, winding_secs = 0;
  int max_iter = 0;
  Rng rng(4207);
  for (auto [n, k] : Types{{4, 3}, {5, 2}})
    for (int t = 0; t < 10; ++t) {
      auto s = to_float(random_seed(n, k, rng));
      try {
        auto lp = limit_point(s, 1e-8, 200);
        con(lp.radius < 1e-8, "radius not below 1e-8 for " + type_str(n, k));
        max_iter = std::max(max_iter, lp.iterations);
        for (std::size_t m = 3; m + 1 < lp.diameters.size(); ++m) {
          double r = lp.diameters[m + 1] / lp.diameters[m];
          worst = std::max(worst, r);
          con(r <= 0.999, "diameter ratio " + std::to_string(r) + " for " + type_str(n, k));
        }
      } catch (const std::exception& e) {
        con(false, std::string("limit_point failed: ") + e.what());
      }
      const auto w0 = std::chrono::steady_clock::now();
      try {
        const int steps = 10 * (2 * n + k);
        auto w = winding_turns(s, steps);
        double total = 0;
        for (double t : w.turns) {
          wind(t > 0, "winding not increasing for " + type_str(n, k));
          total += t;
          min_turn = std::min(min_turn, t);
        }
        wind(total > 4 * std::numbers::pi, "winding total below 4 pi for " + type_str(n, k));
      } catch (const std::exception& e) {
        wind(false, std::string("winding failed: ") + e.what());
      }
      winding_secs += std::chrono::duration<double>(std::chrono::steady_clock::now() - w0).count();
    }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() - winding_secs;
  con(secs < 60, "took " + std::to_string(secs) + " s");
  auto c = con.done();
  if (c.pass) {
    std::ostringstream m;
    m << "max ratio " << worst << ", max iterations " << max_iter << ", " << secs << " s";
    c.detail = m.str();
  }
  auto w = wind.done();
  if (w.pass) {
    std::ostringstream m;
    m << "smallest turn " << min_turn << " rad";
    w.detail = m.str();
  }
  return {c, w};
}

Outcome lps() {
  Checker check;
  std::ostringstream msg;
  for (auto [n, k] : Types{{4, 1}, {5, 2}, {5, 3}}) {
    auto z = log_spiral_parameter(n, k);
    check(z.residual < 1e-10, "residual " + std::to_string(z.residual) + " for " + type_str(n, k));
    check(z.w_residual < 1e-9, "w residual for " + type_str(n, k));
    auto res = lps_seed(n, k);
    check(res.delta < 1e-9, "lps delta for " + type_str(n, k));
    auto sim = shift_similarity(res.seed, 3 * (2 * n + k));
    double err = std::fabs(sim.rho - std::abs(z.z));
    for (double r : sim.ratios) err = std::max(err, std::fabs(r - std::abs(z.z)));
    check(err < 1e-4, "contraction ratio vs |z| off by " + std::to_string(err) + " for " + type_str(n, k));
    msg << type_str(n, k) << " |z|=" << std::abs(z.z) << " ";
  }
  auto o = check.done();
  if (o.pass) o.detail = msg.str();
  return o;
}

Outcome cli_only() {
#ifdef PENTA_CLI
  const std::string cli = PENTA_CLI;
  const std::string cmd = "\"" + cli + "\" periodicity --n 4 --k 1 --order 2 --trials 20 --strict > /dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  if (rc != 0) return {false, "CLI periodicity exited with " + std::to_string(rc)};
  return {true, "core library and CLI only"};
#else
  return {false, "CLI path not configured"};
#endif
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](const std::string& name, const Outcome& o) {
    std::printf("%s  %-34s %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  };
  auto guarded = [&](const std::string& name, const std::function<Outcome()>& f) {
    try {
      report(name, f());
    } catch (const std::exception& e) {
      report(name, {false, std::string("exception: ") + e.what()});
    }
  };

  guarded("periodicity", periodicity);
  guarded("Z invariance", z_invariance);
  guarded("geometry/algebra cross-check", geometry_algebra);
  guarded("E/O swap", eo_swap);
  guarded("inverse roundtrip and validity", inverse_roundtrip);
  try {
    auto p = plc_windows();
    report("PLC windows and flag range", p.windows);
    report("chi bound", p.chi);
  } catch (const std::exception& e) {
    report("PLC windows and flag range", {false, e.what()});
    report("chi bound", {false, e.what()});
  }
  guarded("zigzag", zigzag);
  try {
    auto d = dynamics();
    report("contraction", d.contraction);
    report("winding", d.winding);
  } catch (const std::exception& e) {
    report("contraction", {false, e.what()});
    report("winding", {false, e.what()});
  }
  guarded("LPS consistency", lps);
  guarded("CLI-only build", cli_only);

  std::printf("%s: %d failing\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
