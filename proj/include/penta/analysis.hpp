#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "penta/orbit.hpp"
#include "penta/random.hpp"

namespace penta {

using Point2 = std::array<double, 2>;

// Hilbert distance -log[a,b,c,d] inside a convex polygon.
double hilbert_distance(const std::vector<ProjPoint<double>>& K, const ProjPoint<double>& b,
                        const ProjPoint<double>& c);

struct LimitPoint {
  Point2 point{};
  double radius = 0.0;
  int iterations = 0;
  int stride = 0;
  std::vector<double> diameters;  // diam K_0, diam K_1, ...
};

// Steps between successive nested polygons: n, or n+1 when k = 1 (with k = 1
// a marked point survives exactly n steps and would sit on the old boundary).
int nesting_stride(int n, int k);

// Centroid of the first K_m with diameter < tol; K_m is the A-polygon of T^{stride*m}(seed).
LimitPoint limit_point(const Seed<double>& seed, double tol = 1e-9, int max_iterations = 200);

// Argument of P_1 - c and the signed turns from P_j - c to P_{j+1} - c, each
// in (-pi, pi].  Turn signs are exact even where the cumulative sum in a
// double no longer moves.
struct WindingTurns {
  double start = 0.0;
  std::vector<double> turns;
};

WindingTurns winding_turns(const Seed<double>& seed, int steps);

// Cumulative argument of P_j - c for j = 1..steps (continuous lift).
std::vector<double> winding_profile(const Seed<double>& seed, int steps);

struct LogSpiral {
  std::complex<double> z;
  double residual = 0.0;    // |(z+zbar)^k - z^{n+k}(1+zbar)^k|
  double w_residual = 0.0;  // |w^k - z^{n+2k}|, w = z(z+zbar)/(1+zbar)
  int iterations = 0;
  bool bisection = false;
};

LogSpiral log_spiral_parameter(int n, int k);

// Vertexwise average of normalize(T^j(seed)), j = 0..m-1, marks at averaged ratios.
Seed<double> theta_average(const Seed<double>& seed, int m);

struct LpsResult {
  Seed<double> seed;
  int iterations = 0;
  double delta = 0.0;  // max coordinate change of the last averaging step
};

// Fixed point of theta_average (default m = 2n+k) from the regular seed.
LpsResult lps_seed(int n, int k, double tol = 1e-11, int m = 0, int max_iterations = 500);
LpsResult lps_from(const Seed<double>& start, double tol, int m, int max_iterations);

// The projective map S with S(P_j) = P_{j+1} on the spiral of a seed,
// conjugated to a similarity x -> rho e^{i phi} x about its fixed point.
struct ShiftSimilarity {
  Mat3<double> shift{};      // P_j -> P_{j+1}
  Mat3<double> to_frame{};   // base chart -> similarity frame
  double rho = 0.0;
  double phi = 0.0;
  Point2 fixed_point{};      // in the base chart
  std::vector<double> ratios;  // |Q_{j+1}| / |Q_j| in the similarity frame
};

ShiftSimilarity shift_similarity(const Seed<double>& seed, int samples);

struct PeriodicityTrial {
  int trial = 0;
  bool pass = false;
  std::string first_difference;  // "A2.x", "B4.y", or empty
};

struct PeriodicityReport {
  int n = 0, k = 0, order = 0;
  std::vector<PeriodicityTrial> trials;
  bool all_pass() const;
  int passed() const;
};

// normalize(T^order(s)) == normalize(s) exactly for random rational seeds.
PeriodicityReport periodicity_check(int n, int k, int order, int trials, std::uint64_t rng_seed = 1);

struct OrbitPoint {
  int m = 0;
  Point2 c{};
};

std::vector<OrbitPoint> limit_point_orbit(const Seed<double>& seed, int m_max, double tol = 1e-9);

struct ZProbeReport {
  int n = 0, k = 0;
  double z_lps = 0.0;
  std::vector<double> samples;
  int rejected = 0;
  double max_sample = 0.0;
  double gap = 0.0;  // z_lps - max_sample
  bool lps_is_max = true;
};

ZProbeReport z_maximization_probe(int n, int k, int samples, double perturbation = 0.05,
                                  std::uint64_t rng_seed = 1);

// Diameter and centroid of a finite vertex list.
double diameter(const std::vector<Point2>& pts);
Point2 centroid(const std::vector<Point2>& pts);

}  // namespace penta
