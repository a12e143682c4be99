#pragma once

#include <array>
#include <vector>

#include "penta/seed.hpp"

namespace penta {

// Seeds T^{j-1}(base) for j in [j_min, j_max] and the vertex P_j = A_1 of each.
//
// Exact orbits store raw iterates.  Float orbits store the normalized iterate
// together with the projective frame mapping it back to the base chart; raw
// float iteration loses every digit after a few dozen inward steps.
template <typename S>
class SpiralOrbit {
 public:
  SpiralOrbit(Seed<S> base, int j_min, int j_max) : base_(std::move(base)), lo_(j_min), hi_(j_max) {
    if (j_min > j_max) throw WindowTooSmall("empty window");
    const int first = std::min(j_min, 1), last = std::max(j_max, 1);
    states_.resize(static_cast<std::size_t>(last - first + 1));
    frames_.resize(states_.size());
    origin_ = first;

    auto put = [&](int j, Seed<S> s, Mat3<S> f) {
      states_[static_cast<std::size_t>(j - origin_)] = std::move(s);
      frames_[static_cast<std::size_t>(j - origin_)] = f;
    };
    if constexpr (is_exact_v<S>) {
      put(1, base_, identity_matrix<S>());
    } else {
      ProjTransform<S> nt = normalizing_transform(base_);
      Mat3<S> f = adjugate(nt.matrix());
      rescale(f);
      put(1, normalize(base_), f);
    }
    for (int j = 2; j <= last; ++j) advance(j, j - 1, false);
    for (int j = 0; j >= first; --j) advance(j, j + 1, true);
  }

  const Seed<S>& base() const { return base_; }
  int j_min() const { return lo_; }
  int j_max() const { return hi_; }
  bool covers(int j) const { return j >= lo_ && j <= hi_; }

  // Stored representative of T^{j-1}(base); normalized for float orbits.
  const Seed<S>& state(int j) const { return states_[slot(j)]; }
  const Mat3<S>& frame(int j) const { return frames_[slot(j)]; }

  // T^{j-1}(base) in the base chart.
  Seed<S> seed_at(int j) const {
    if constexpr (is_exact_v<S>) return state(j);
    else return apply_matrix(frame(j), state(j));
  }

  ProjPoint<S> vertex(int j) const {
    if constexpr (is_exact_v<S>) return state(j).A[0];
    else return apply_matrix(frame(j), state(j).A[0]);
  }

  std::vector<ProjPoint<S>> window(int j_from, int j_to) const {
    std::vector<ProjPoint<S>> out;
    for (int j = j_from; j <= j_to; ++j) out.push_back(vertex(j));
    return out;
  }

  // P_anchor .. P_{anchor+count-1} expressed in the frame of state(anchor).
  // Only the anchor needs to be inside the window.
  std::vector<ProjPoint<S>> local_points(int anchor, int count) const {
    std::vector<ProjPoint<S>> out;
    if constexpr (is_exact_v<S>) {
      for (int t = 0; t < count; ++t) {
        int j = anchor + t;
        if (covers(j)) {
          out.push_back(vertex(j));
        } else {
          Seed<S> s = state(anchor);
          for (int u = 0; u < t; ++u) s = step(s);
          out.push_back(s.A[0]);
        }
      }
    } else {
      Seed<S> s = state(anchor);
      for (int t = 0; t < count; ++t) {
        out.push_back(s.A[0]);
        if (t + 1 < count) s = step(s);
      }
    }
    return out;
  }

  // The five points P_{j-2}..P_{j+2} in a common, well-conditioned frame.
  std::array<ProjPoint<S>, 5> window5(int j) const {
    if (!covers(j - 2) || !covers(j + 2)) throw WindowTooSmall("five-point window leaves the orbit");
    auto pts = local_points(j - 2, 5);
    return {pts[0], pts[1], pts[2], pts[3], pts[4]};
  }

 private:
  std::size_t slot(int j) const {
    if (j < origin_ || j - origin_ >= static_cast<int>(states_.size()))
      throw WindowTooSmall("index " + std::to_string(j) + " outside orbit");
    return static_cast<std::size_t>(j - origin_);
  }

  void advance(int j, int from, bool backward) {
    const Seed<S>& src = states_[static_cast<std::size_t>(from - origin_)];
    Seed<S> next = backward ? step_inverse(src) : step(src);
    if constexpr (is_exact_v<S>) {
      states_[static_cast<std::size_t>(j - origin_)] = std::move(next);
      frames_[static_cast<std::size_t>(j - origin_)] = identity_matrix<S>();
    } else {
      ProjTransform<S> nt = normalizing_transform(next);
      Mat3<S> f = multiply(frames_[static_cast<std::size_t>(from - origin_)], adjugate(nt.matrix()));
      rescale(f);
      states_[static_cast<std::size_t>(j - origin_)] = normalize(next);
      frames_[static_cast<std::size_t>(j - origin_)] = f;
    }
  }

  Seed<S> base_;
  int lo_, hi_, origin_ = 1;
  std::vector<Seed<S>> states_;
  std::vector<Mat3<S>> frames_;
};

template <typename S>
std::vector<ProjPoint<S>> spiral_window(const Seed<S>& s, int j_min, int j_max) {
  return SpiralOrbit<S>(s, j_min, j_max).window(j_min, j_max);
}

// T^q(s) for any integer q, in the chart of s.
template <typename S>
Seed<S> iterate(const Seed<S>& s, int q) {
  if constexpr (is_exact_v<S>) {
    Seed<S> r = s;
    for (int t = 0; t < q; ++t) r = step(r);
    for (int t = 0; t < -q; ++t) r = step_inverse(r);
    return r;
  } else {
    if (q == 0) return s;
    return SpiralOrbit<S>(s, std::min(1, q + 1), std::max(1, q + 1)).seed_at(q + 1);
  }
}

}  // namespace penta
