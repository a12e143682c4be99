#include <pybind11/pybind11.h>

#include "penta/api.hpp"
#include "penta/errors.hpp"

namespace py = pybind11;
using penta::io::json;

namespace {

// Every entry point takes and returns JSON text; the Python package does the
// dict conversion so the wire format is shared with the CLI and the service.
template <typename F>
std::string call(F&& f) {
  json out;
  {
    py::gil_scoped_release release;
    out = f();
  }
  return out.dump();
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw penta::ParseError(e.what());
  }
}

}  // namespace

PYBIND11_MODULE(_penta, m) {
  m.doc() = "pentagram spiral engine (JSON in, JSON out)";

  // the message carries the same error JSON the service returns; the object
  // lives for the interpreter's lifetime
  static auto* error = new py::exception<penta::Error>(m, "PentaError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const penta::Error& e) {
      PyErr_SetString(error->ptr(), penta::io::error_json(e).dump().c_str());
    }
  });

  m.def("validate", [](const std::string& s) { return call([&] { return penta::api::validate(parse(s)); }); });
  m.def("step", [](const std::string& s, int power, bool inverse, bool force_float) {
    return call([&] { return penta::api::step(parse(s), power, inverse, force_float); });
  });
  m.def("normalize", [](const std::string& s, bool force_float) {
    return call([&] { return penta::api::normalize(parse(s), force_float); });
  });
  m.def("spiral_window", [](const std::string& s, int j_min, int j_max) {
    return call([&] { return penta::api::spiral_window(parse(s), j_min, j_max); });
  });
  m.def("invariants", [](const std::string& s, bool force_float) {
    return call([&] { return penta::api::invariants(parse(s), force_float); });
  });
  m.def("limit_point", [](const std::string& s, double tol) {
    return call([&] { return penta::api::limit_point(parse(s), tol); });
  });
  m.def("limit_point_orbit", [](const std::string& s, int m_max, double tol) {
    return call([&] { return penta::api::limit_point_orbit(parse(s), m_max, tol); });
  });
  m.def("winding", [](const std::string& s, int steps) {
    return call([&] { return penta::api::winding(parse(s), steps); });
  });
  m.def("log_spiral", [](int n, int k) { return call([&] { return penta::api::log_spiral(n, k); }); });
  m.def("lps", [](int n, int k, double tol) { return call([&] { return penta::api::lps(n, k, tol); }); });
  m.def("periodicity", [](int n, int k, int order, int trials, std::uint64_t rng_seed) {
    return call([&] { return penta::api::periodicity(n, k, order, trials, rng_seed); });
  });
  m.def("z_probe", [](int n, int k, int samples, double perturbation, std::uint64_t rng_seed) {
    return call([&] { return penta::api::z_probe(n, k, samples, perturbation, rng_seed); });
  });
}
