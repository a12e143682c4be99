#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "penta/seed.hpp"

namespace penta {

using Rng = std::mt19937_64;

// Regular n-gon on a grid of step 1/64, vertices perturbed by j/64 with
// |j| <= 4, rejected until strictly convex.
std::vector<ProjPoint<Rational>> random_convex_polygon(int n, Rng& rng);

// Random valid rational seed; B_j at d = u/64 with u in [8, 56].
Seed<Rational> random_seed(int n, int k, Rng& rng);

// Regular n-gon on the unit circle with midpoint B's (float).
Seed<double> regular_seed(int n, int k);

// Places B_j at ratio d_j along A_j A_{j+1}, j = n-k+1..n.
template <typename S>
std::vector<ProjPoint<S>> place_marks(const std::vector<ProjPoint<S>>& A, int k, const std::vector<S>& d) {
  const int n = static_cast<int>(A.size());
  std::vector<ProjPoint<S>> B;
  for (int j = n - k + 1; j <= n; ++j) {
    auto [ax, ay] = affine(A[static_cast<std::size_t>(j - 1)]);
    auto [cx, cy] = affine(A[static_cast<std::size_t>(j % n)]);
    const S& t = d[static_cast<std::size_t>(j - (n - k + 1))];
    B.push_back(affine_point<S>(S(ax + t * (cx - ax)), S(ay + t * (cy - ay))));
  }
  return B;
}

}  // namespace penta
