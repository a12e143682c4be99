#include "penta/svg.hpp"

#include <cmath>
#include <cstdio>
#include <optional>

#include "penta/analysis.hpp"
#include "penta/orbit.hpp"

namespace penta {

namespace {

const char* kPalette[] = {"#1f4e9c", "#c2410c", "#15803d", "#7e22ce", "#b91c1c", "#0e7490", "#a16207", "#be185d"};

struct View {
  double x0, y0, span, size;
  std::string fmt(double x, double y) const {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f,%.4f", (x - x0) / span * size, (y0 + span - y) / span * size);
    return buf;
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

}  // namespace

SvgResult render_svg(const Seed<double>& seed, int steps, const SvgOptions& opt) {
  SvgResult res;
  require_valid(seed);
  if (steps < 2) steps = 2;
  const Seed<double> base = normalize(seed);
  const int k = base.k;
  SpiralOrbit<double> orbit(base, 1, steps);

  Point2 centre{0.0, 0.0};
  double scale = 1.0;
  View view{-0.25, -0.25, 1.5, static_cast<double>(opt.size)};
  if (opt.frame == SvgOptions::Frame::UnitCircle) {
    centre = limit_point(base, 1e-10).point;
    auto [x, y] = affine(orbit.vertex(1));
    scale = 1.0 / std::hypot(x - centre[0], y - centre[1]);
    view = View{-1.3, -1.3, 2.6, static_cast<double>(opt.size)};
  }
  auto place = [&](const ProjPoint<double>& p, int j) -> std::optional<Point2> {
    if (!is_finite(p)) {
      res.warnings.push_back("vertex " + std::to_string(j) + " is at infinity; clipped");
      return std::nullopt;
    }
    auto [x, y] = affine(p);
    return Point2{(x - centre[0]) * scale, (y - centre[1]) * scale};
  };

  // strands[s] holds the s-th pentagram image of the spiral path.
  std::vector<std::vector<Point2>> strands(static_cast<std::size_t>(k));
  for (int s = 0; s < k; ++s) {
    for (int j = 1 + s; j + 2 * s <= steps; ++j) {
      std::vector<ProjPoint<double>> local = orbit.local_points(j - s, 3 * s + 1);
      for (int t = 0; t < s; ++t) local = pentagram_map_path(local);
      if (auto q = place(apply_matrix(orbit.frame(j - s), local.front()), j))
        strands[static_cast<std::size_t>(s)].push_back(*q);
    }
  }

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(opt.size) +
         "\" height=\"" + std::to_string(opt.size) + "\" viewBox=\"0 0 " + std::to_string(opt.size) + " " +
         std::to_string(opt.size) + "\">\n";
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (opt.frame == SvgOptions::Frame::UnitCircle) {
    auto c = view.fmt(0.0, 0.0);
    out += "<circle class=\"unit-circle\" cx=\"" + c.substr(0, c.find(',')) + "\" cy=\"" + c.substr(c.find(',') + 1) +
           "\" r=\"" + num(opt.size / view.span) + "\" fill=\"none\" stroke=\"#999\" stroke-dasharray=\"4 4\"/>\n";
  }
  if (opt.seed_overlay) {
    std::string poly;
    for (auto& p : base.A)
      if (auto q = place(p, 0)) poly += view.fmt((*q)[0], (*q)[1]) + " ";
    out += "<polygon class=\"seed\" points=\"" + poly + "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    std::string thick;
    for (int j = 1; j <= std::min(steps, base.n + 1); ++j)
      if (auto q = place(orbit.vertex(j), j)) thick += view.fmt((*q)[0], (*q)[1]) + " ";
    out += "<polyline class=\"seed-spiral\" points=\"" + thick +
           "\" fill=\"none\" stroke=\"#111\" stroke-width=\"3\"/>\n";
    for (int j = base.n - k + 1; j <= base.n; ++j)
      if (auto q = place(base.b(j), 0)) {
        auto c = view.fmt((*q)[0], (*q)[1]);
        out += "<circle class=\"mark\" cx=\"" + c.substr(0, c.find(',')) + "\" cy=\"" + c.substr(c.find(',') + 1) +
               "\" r=\"3\" fill=\"#111\"/>\n";
      }
  }
  if (opt.diagonals) {
    const auto& P = strands[0];
    for (std::size_t j = 0; j + 2 < P.size(); ++j)
      out += "<polyline class=\"diagonal\" points=\"" + view.fmt(P[j][0], P[j][1]) + " " +
             view.fmt(P[j + 2][0], P[j + 2][1]) + "\" fill=\"none\" stroke=\"#bbb\" stroke-width=\"0.5\"/>\n";
  }
  for (int s = 0; s < k; ++s) {
    std::string pts;
    for (auto& p : strands[static_cast<std::size_t>(s)]) pts += view.fmt(p[0], p[1]) + " ";
    out += "<polyline class=\"strand\" data-strand=\"" + std::to_string(s) + "\" points=\"" + pts +
           "\" fill=\"none\" stroke=\"" + kPalette[s % 8] + "\" stroke-width=\"1.2\"/>\n";
  }
  out += "</svg>\n";
  res.svg = std::move(out);
  return res;
}

}  // namespace penta
