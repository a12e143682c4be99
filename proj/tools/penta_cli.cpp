// penta: command-line front end for the pentagram spiral engine.

#include <csignal>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "penta/api.hpp"
#include "penta/service.hpp"
#include "penta/svg.hpp"

using penta::io::json;

namespace {

int fail(const std::exception& e) {
  std::cerr << penta::io::error_json(e).dump() << std::endl;
  return 2;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw penta::ParseError("cannot write '" + path + "'");
  out << text;
}

json load_seed(const std::string& path) {
  return penta::io::seed_to_json(penta::io::read_seed_file(path));
}

penta::Service* g_service = nullptr;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pentagram spirals: seeds, shift maps, invariants and experiments"};
  app.require_subcommand(1);
  std::string seed_path, out_path;

  auto* spiral = app.add_subcommand("spiral", "render or export a spiral window");
  int steps = 60;
  std::string format = "svg", frame = "unit-square";
  bool diagonals = false, no_overlay = false;
  spiral->add_option("--seed", seed_path, "seed JSON file")->required();
  spiral->add_option("--steps", steps, "number of spiral vertices")->check(CLI::Range(2, 100000));
  spiral->add_option("--out", format, "output format")->check(CLI::IsMember({"svg", "csv"}));
  spiral->add_option("--frame", frame, "svg chart")->check(CLI::IsMember({"unit-square", "unit-circle"}));
  spiral->add_flag("--diagonals", diagonals, "draw shortest diagonals");
  spiral->add_flag("--no-overlay", no_overlay, "omit the seed overlay");
  spiral->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* stepc = app.add_subcommand("step", "apply a power of the shift map");
  int power = 1;
  bool inverse = false, as_float = false;
  stepc->add_option("--seed", seed_path, "seed JSON file")->required();
  stepc->add_option("--power", power, "exponent")->check(CLI::NonNegativeNumber);
  stepc->add_flag("--inverse", inverse, "apply the inverse map");
  stepc->add_flag("--float", as_float, "convert to floating point first");
  stepc->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* inv = app.add_subcommand("invariant", "print Z, flags and vertex invariants");
  bool csv = false;
  int rows = 2;
  inv->add_option("--seed", seed_path, "seed JSON file")->required();
  inv->add_flag("--float", as_float, "evaluate in floating point");
  inv->add_flag("--csv", csv, "export labeling rows as CSV instead");
  inv->add_option("--rows", rows, "rows below and above the base row for --csv")->check(CLI::Range(0, 50));
  inv->add_option("-o,--output", out_path, "output file (default stdout)");

  auto* per = app.add_subcommand("periodicity", "exact periodicity check on random rational seeds");
  int n = 4, k = 1, order = 2, trials = 20;
  unsigned long long rng_seed = 1;
  bool strict = false, per_json = false;
  per->add_option("--n", n)->required();
  per->add_option("--k", k)->required();
  per->add_option("--order", order)->required()->check(CLI::PositiveNumber);
  per->add_option("--trials", trials)->check(CLI::PositiveNumber);
  per->add_option("--rng-seed", rng_seed);
  per->add_flag("--strict", strict, "exit 1 when a trial fails");
  per->add_flag("--json", per_json, "JSON report instead of CSV");
  per->add_option("-o,--output", out_path);

  auto* logs = app.add_subcommand("logspiral", "solve for z and build the logarithmic spiral seed");
  double lps_tol = 1e-11;
  logs->add_option("--n", n)->required();
  logs->add_option("--k", k)->required();
  logs->add_option("--tol", lps_tol);
  logs->add_option("-o,--output", out_path);

  auto* lim = app.add_subcommand("limitpoint", "limit point, or c_m orbit as CSV");
  int orbit_m = -1;
  double tol = 1e-9;
  lim->add_option("--seed", seed_path)->required();
  lim->add_option("--orbit", orbit_m, "export c_0..c_M");
  lim->add_option("--tol", tol);
  lim->add_option("-o,--output", out_path);

  auto* wind = app.add_subcommand("winding", "cumulative argument around the limit point as CSV");
  wind->add_option("--seed", seed_path)->required();
  wind->add_option("--steps", steps)->check(CLI::Range(1, 100000));
  wind->add_option("-o,--output", out_path);

  auto* probe = app.add_subcommand("probe-zmax", "compare Z at the logarithmic spiral with random seeds");
  int samples = 50;
  double perturbation = 0.05;
  probe->add_option("--n", n)->required();
  probe->add_option("--k", k)->required();
  probe->add_option("--samples", samples)->check(CLI::NonNegativeNumber);
  probe->add_option("--perturbation", perturbation);
  probe->add_option("--rng-seed", rng_seed);
  probe->add_option("-o,--output", out_path);

  auto* serve = app.add_subcommand("serve", "run the local JSON service");
  int port = 8765;
  std::string host = "127.0.0.1";
  serve->add_option("--port", port, "port (PENTA_PORT overrides)");
  serve->add_option("--host", host, "bind address");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*spiral) {
      json seed = load_seed(seed_path);
      if (format == "csv") {
        json w = penta::api::spiral_window(seed, 1, steps);
        std::string text = "j,x,y\n";
        for (auto& v : w["vertices"]) {
          text += std::to_string(v["j"].get<int>()) + ",";
          if (v.contains("x"))
            text += penta::ScalarTraits<double>::to_string(v["x"].get<double>()) + "," +
                    penta::ScalarTraits<double>::to_string(v["y"].get<double>()) + "\n";
          else
            text += "inf,inf\n";
        }
        emit(text, out_path);
      } else {
        penta::SvgOptions opt;
        opt.frame = frame == "unit-circle" ? penta::SvgOptions::Frame::UnitCircle : penta::SvgOptions::Frame::UnitSquare;
        opt.diagonals = diagonals;
        opt.seed_overlay = !no_overlay;
        auto res = penta::render_svg(penta::io::as_float(penta::api::checked_seed(seed)), steps, opt);
        for (auto& w : res.warnings) std::cerr << json{{"warning", w}}.dump() << "\n";
        emit(res.svg, out_path);
      }
    } else if (*stepc) {
      emit(penta::api::step(load_seed(seed_path), power, inverse, as_float).dump(2) + "\n", out_path);
    } else if (*inv) {
      json seed = load_seed(seed_path);
      if (csv) {
        auto any = penta::api::checked_seed(seed);
        std::string text;
        std::visit(
            [&](const auto& s) {
              penta::LabelingRegion region{-rows, rows, 0, 2 * (2 * s.n + s.k) + 1};
              auto lab = penta::fill_labeling(s, region);
              text = penta::io::flag_rows_csv(lab.rows());
            },
            as_float ? penta::io::AnySeed(penta::io::as_float(any)) : any);
        emit(text, out_path);
      } else {
        emit(penta::api::invariants(seed, as_float).dump(2) + "\n", out_path);
      }
    } else if (*per) {
      auto rep = penta::periodicity_check(n, k, order, trials, rng_seed);
      if (per_json)
        emit(penta::api::periodicity(n, k, order, trials, rng_seed).dump(2) + "\n", out_path);
      else
        emit(penta::io::periodicity_csv(rep), out_path);
      std::cerr << json{{"passed", rep.passed()}, {"trials", trials}}.dump() << "\n";
      if (strict && !rep.all_pass()) return 1;
    } else if (*logs) {
      emit(penta::api::lps(n, k, lps_tol).dump(2) + "\n", out_path);
    } else if (*lim) {
      json seed = load_seed(seed_path);
      if (orbit_m >= 0) {
        auto orbit = penta::limit_point_orbit(penta::io::as_float(penta::api::checked_seed(seed)), orbit_m, tol);
        emit(penta::io::orbit_csv(orbit), out_path);
      } else {
        emit(penta::api::limit_point(seed, tol).dump(2) + "\n", out_path);
      }
    } else if (*wind) {
      auto seed = penta::io::as_float(penta::api::checked_seed(load_seed(seed_path)));
      emit(penta::io::winding_csv(penta::winding_profile(seed, steps)), out_path);
    } else if (*probe) {
      emit(penta::api::z_probe(n, k, samples, perturbation, rng_seed).dump(2) + "\n", out_path);
    } else if (*serve) {
      penta::Service service;
      g_service = &service;
      std::signal(SIGINT, [](int) {
        if (g_service) g_service->stop();
      });
      int p = penta::service_port(port);
      std::cerr << json{{"listening", host + ":" + std::to_string(p)}}.dump() << std::endl;
      if (!service.listen(host, p)) throw penta::Error("BindFailed", "cannot bind " + host + ":" + std::to_string(p));
    }
  } catch (const std::exception& e) {
    return fail(e);
  }
  return 0;
}
