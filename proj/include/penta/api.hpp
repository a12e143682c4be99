#pragma once

#include "penta/io.hpp"

// JSON-level operations shared by the CLI, the HTTP service and the Python
// module, so all three return identical numbers for identical input.
namespace penta::api {

using io::json;

json validate(const json& seed);
// Rational seeds stay exact unless force_float.
json step(const json& seed, int power, bool inverse, bool force_float);
json normalize(const json& seed, bool force_float);
json spiral_window(const json& seed, int j_min, int j_max);
// Z, flags for vertices 1..2n+k, chi for the same vertices.
json invariants(const json& seed, bool force_float);
json limit_point(const json& seed, double tol);
json limit_point_orbit(const json& seed, int m_max, double tol);
json winding(const json& seed, int steps);
json log_spiral(int n, int k);
json lps(int n, int k, double tol);
json periodicity(int n, int k, int order, int trials, std::uint64_t rng_seed);
json z_probe(int n, int k, int samples, double perturbation, std::uint64_t rng_seed);

// Throws InvalidSeed unless the seed validates.
io::AnySeed checked_seed(const json& seed);

}  // namespace penta::api
