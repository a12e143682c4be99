#include "penta/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace penta::io {

namespace {

template <typename S>
S read_scalar(const json& v);

template <>
Rational read_scalar<Rational>(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(mpz_class(std::to_string(v.get<long long>())));
  if (v.is_number_unsigned()) return Rational(mpz_class(std::to_string(v.get<unsigned long long>())));
  if (v.is_number_float()) {
    double d = v.get<double>();
    if (!std::isfinite(d)) throw ParseError("non-finite coordinate");
    return Rational(d);
  }
  throw ParseError("coordinate must be a number or a \"p/q\" string");
}

template <>
double read_scalar<double>(const json& v) {
  if (v.is_number()) {
    double d = v.get<double>();
    if (!std::isfinite(d)) throw ParseError("non-finite coordinate");
    return d;
  }
  if (v.is_string()) return parse_rational(v.get<std::string>()).get_d();
  throw ParseError("coordinate must be a number or a \"p/q\" string");
}

template <typename S>
std::vector<ProjPoint<S>> read_points(const json& arr, const char* name) {
  if (!arr.is_array()) throw ParseError(std::string("field ") + name + " must be an array");
  std::vector<ProjPoint<S>> out;
  for (auto& p : arr) {
    if (!p.is_array() || p.size() != 2) throw ParseError(std::string(name) + " entries must be [x, y] pairs");
    out.push_back(affine_point<S>(read_scalar<S>(p[0]), read_scalar<S>(p[1])));
  }
  return out;
}

template <typename S>
Seed<S> read_seed(const json& j) {
  Seed<S> s;
  s.n = j.at("n").get<int>();
  s.k = j.at("k").get<int>();
  s.A = read_points<S>(j.at("A"), "A");
  s.B = read_points<S>(j.at("B"), "B");
  return s;
}

template <typename S>
json write_points(const std::vector<ProjPoint<S>>& pts) {
  json arr = json::array();
  for (auto& p : pts) {
    auto [x, y] = affine(p);
    arr.push_back(json::array({scalar_json(x), scalar_json(y)}));
  }
  return arr;
}

}  // namespace

json scalar_json(const Rational& x) { return x.get_str(); }
json scalar_json(double x) { return x; }

AnySeed seed_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("seed must be a JSON object");
  try {
    std::string field = j.value("field", std::string("float"));
    if (field == "rational") return read_seed<Rational>(j);
    if (field == "float") return read_seed<double>(j);
    throw ParseError("field must be \"rational\" or \"float\"");
  } catch (const json::exception& e) {
    throw ParseError(std::string("seed JSON: ") + e.what());
  }
}

json seed_to_json(const Seed<Rational>& s) {
  return json{{"n", s.n}, {"k", s.k}, {"field", "rational"}, {"A", write_points(s.A)}, {"B", write_points(s.B)}};
}

json seed_to_json(const Seed<double>& s) {
  return json{{"n", s.n}, {"k", s.k}, {"field", "float"}, {"A", write_points(s.A)}, {"B", write_points(s.B)}};
}

json seed_to_json(const AnySeed& s) {
  return std::visit([](const auto& x) { return seed_to_json(x); }, s);
}

AnySeed read_seed_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open seed file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return seed_from_json(json::parse(ss.str()));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("seed file: ") + e.what());
  }
}

Seed<double> as_float(const AnySeed& s) {
  if (auto* r = std::get_if<Seed<Rational>>(&s)) return to_float(*r);
  return std::get<Seed<double>>(s);
}

bool is_rational(const AnySeed& s) { return std::holds_alternative<Seed<Rational>>(s); }
int seed_n(const AnySeed& s) { return std::visit([](const auto& x) { return x.n; }, s); }
int seed_k(const AnySeed& s) { return std::visit([](const auto& x) { return x.k; }, s); }

json check_to_json(const SeedCheck& c) {
  if (c.ok()) return json{{"ok", true}};
  return json{{"ok", false},
              {"violation", {{"kind", c.kind_name()}, {"index", c.index}, {"message", c.message}}}};
}

json error_json(const std::exception& e) {
  if (auto* inv = dynamic_cast<const InvalidSeed*>(&e)) {
    json j = check_to_json(inv->check());
    return json{{"error", "InvalidSeed"}, {"message", e.what()}, {"violation", j["violation"]}};
  }
  if (auto* pe = dynamic_cast<const Error*>(&e)) return json{{"error", pe->code()}, {"message", e.what()}};
  return json{{"error", "InternalError"}, {"message", e.what()}};
}

std::string winding_csv(const std::vector<double>& profile) {
  std::string out = "j,cumulative_arg\n";
  for (std::size_t i = 0; i < profile.size(); ++i)
    out += std::to_string(i + 1) + "," + ScalarTraits<double>::to_string(profile[i]) + "\n";
  return out;
}

std::string orbit_csv(const std::vector<OrbitPoint>& orbit) {
  std::string out = "m,x,y\n";
  for (auto& p : orbit)
    out += std::to_string(p.m) + "," + ScalarTraits<double>::to_string(p.c[0]) + "," +
           ScalarTraits<double>::to_string(p.c[1]) + "\n";
  return out;
}

std::string periodicity_csv(const PeriodicityReport& rep) {
  std::string out = "trial,pass,first_differing_coordinate\n";
  for (auto& t : rep.trials)
    out += std::to_string(t.trial) + "," + (t.pass ? "true" : "false") + "," + t.first_difference + "\n";
  return out;
}

std::string spiral_csv(const std::vector<ProjPoint<double>>& pts, int j_min) {
  std::string out = "j,x,y\n";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    out += std::to_string(j_min + static_cast<int>(i)) + ",";
    if (is_finite(pts[i])) {
      auto [x, y] = affine(pts[i]);
      out += ScalarTraits<double>::to_string(x) + "," + ScalarTraits<double>::to_string(y) + "\n";
    } else {
      out += "inf,inf\n";
    }
  }
  return out;
}

}  // namespace penta::io
