#pragma once

#include <string>
#include <vector>

#include "penta/seed.hpp"

namespace penta {

struct SvgOptions {
  enum class Frame { UnitSquare, UnitCircle };
  Frame frame = Frame::UnitSquare;
  bool seed_overlay = true;
  bool diagonals = false;
  int size = 800;
};

struct SvgResult {
  std::string svg;
  std::vector<std::string> warnings;
};

// Spiral P_1..P_steps and its pentagram images (one strand per image, k in
// total), drawn in the unit-square chart or the homothety chart that puts
// P_1 on the unit circle around the limit point.
SvgResult render_svg(const Seed<double>& seed, int steps, const SvgOptions& options = {});

}  // namespace penta
