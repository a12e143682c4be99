#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "penta/analysis.hpp"
#include "penta/tiling.hpp"

namespace penta::io {

using json = nlohmann::json;
using AnySeed = std::variant<Seed<Rational>, Seed<double>>;

// Seed JSON: {"n", "k", "field": "rational"|"float", "A": [[x, y], ...], "B": [...]}
// with affine coordinates; rationals as "p/q" strings.
AnySeed seed_from_json(const json& j);
json seed_to_json(const Seed<Rational>& s);
json seed_to_json(const Seed<double>& s);
json seed_to_json(const AnySeed& s);

AnySeed read_seed_file(const std::string& path);

Seed<double> as_float(const AnySeed& s);
bool is_rational(const AnySeed& s);
int seed_n(const AnySeed& s);
int seed_k(const AnySeed& s);

json scalar_json(const Rational& x);
json scalar_json(double x);
json check_to_json(const SeedCheck& c);

// {"error": code, "message": ..., "violation": {...}?}
json error_json(const std::exception& e);

// CSV exports.
template <typename S>
std::string flag_rows_csv(const std::map<int, FlagRow<S>>& rows) {
  std::string out = "row,flag_index,value\n";
  for (auto& [r, row] : rows)
    for (int i = row.first; i <= row.last(); ++i)
      out += std::to_string(r) + "," + std::to_string(i) + "," + ScalarTraits<S>::to_string(row.at(i)) + "\n";
  return out;
}

std::string winding_csv(const std::vector<double>& profile);
std::string orbit_csv(const std::vector<OrbitPoint>& orbit);
std::string periodicity_csv(const PeriodicityReport& rep);
std::string spiral_csv(const std::vector<ProjPoint<double>>& pts, int j_min);

}  // namespace penta::io
