#pragma once

#include <map>
#include <utility>
#include <vector>

#include "penta/orbit.hpp"

namespace penta {

// Corner invariants (x3, x4) of the window v0..v4:
//   x3 = [v0, v1, (v0v1)(v2v3), (v0v1)(v3v4)]
//   x4 = [v4, v3, (v4v3)(v2v1), (v4v3)(v1v0)]
template <typename S>
std::pair<S, S> corner_invariants(const std::array<ProjPoint<S>, 5>& v) {
  try {
    ProjLine<S> l01 = join(v[0], v[1]);
    ProjLine<S> l43 = join(v[4], v[3]);
    ProjPoint<S> p = meet(l01, join(v[2], v[3]));
    ProjPoint<S> q = meet(l01, join(v[3], v[4]));
    ProjPoint<S> r = meet(l43, join(v[2], v[1]));
    ProjPoint<S> t = meet(l43, join(v[1], v[0]));
    return {cross_ratio(v[0], v[1], p, q), cross_ratio(v[4], v[3], r, t)};
  } catch (const CoincidentPoints&) {
    throw ConstructionDegenerate("corner window has coincident points");
  } catch (const CoincidentLines&) {
    throw ConstructionDegenerate("corner window has coincident lines");
  } catch (const DegenerateQuadruple&) {
    throw ConstructionDegenerate("corner window is not in general position");
  }
}

// Contiguous run of labels indexed by consecutive integers.
template <typename S>
struct FlagRow {
  int first = 0;
  std::vector<S> values;

  int last() const { return first + static_cast<int>(values.size()) - 1; }
  bool has(int i) const { return i >= first && i <= last(); }
  const S& at(int i) const {
    if (!has(i)) throw EdgeOutsideRegion("flag index " + std::to_string(i) + " not in row");
    return values[static_cast<std::size_t>(i - first)];
  }
  friend bool operator==(const FlagRow& a, const FlagRow& b) {
    return a.first == b.first && a.values == b.values;
  }
};

template <typename S>
using FlagSequence = FlagRow<S>;

// Flags 2j, 2j+1 are the corner invariants of P_{j-2}..P_{j+2}, for j in [j_lo, j_hi].
template <typename S>
FlagSequence<S> flag_sequence(const SpiralOrbit<S>& orbit, int j_lo, int j_hi) {
  if (j_lo > j_hi || !orbit.covers(j_lo - 2) || !orbit.covers(j_hi + 2))
    throw WindowTooSmall("orbit must cover P_{j-2}..P_{j+2} for every requested j");
  FlagSequence<S> f;
  f.first = 2 * j_lo;
  for (int j = j_lo; j <= j_hi; ++j) {
    auto [x, y] = corner_invariants(orbit.window5(j));
    f.values.push_back(x);
    f.values.push_back(y);
  }
  return f;
}

// Flag sequence of an open path; index 2j is attached to path[j].
template <typename S>
FlagSequence<S> path_flags(const std::vector<ProjPoint<S>>& path, int index_of_first) {
  FlagSequence<S> f;
  f.first = 2 * (index_of_first + 2);
  for (std::size_t j = 2; j + 2 < path.size(); ++j) {
    auto [x, y] = corner_invariants<S>({path[j - 2], path[j - 1], path[j], path[j + 1], path[j + 2]});
    f.values.push_back(x);
    f.values.push_back(y);
  }
  return f;
}

template <typename S>
S vertex_invariant(const S& f1, const S& f2) {
  return S(f1 * f2);
}

namespace detail {

template <typename S>
S one_minus(const S& v) {
  S g = S(1) - v;
  if (ScalarTraits<S>::sign(g) == 0 && (is_exact_v<S> || g == 0))
    throw UnitProductDenominator();
  return g;
}

// Row update by index: Forward gives the next pentagram row, otherwise the previous one.
template <typename S, typename Get>
S update_label(int i, bool forward, Get&& f) {
  const int j = (i >= 0) ? i / 2 : -((-i + 1) / 2);
  auto prod = [&](int m) { return S(f(2 * m) * f(2 * m + 1)); };
  if (forward) {
    if (i - 2 * j == 0) return S(f(2 * j) * one_minus(prod(j - 1)) / one_minus(prod(j + 1)));
    return S(f(2 * j + 3) * one_minus(prod(j + 2)) / one_minus(prod(j)));
  }
  auto psi = [&](int m) { return S(f(2 * m + 1) * f(2 * m + 2)); };
  if (i - 2 * j == 0) return S(f(2 * j) * one_minus(psi(j)) / one_minus(psi(j - 2)));
  return S(f(2 * j - 1) * one_minus(psi(j - 2)) / one_minus(psi(j)));
}

// Index footprint [lo, hi] of the inputs needed for output index i.
inline std::pair<int, int> footprint(int i, bool forward) {
  bool even = ((i % 2) + 2) % 2 == 0;
  if (forward) return even ? std::pair{i - 2, i + 3} : std::pair{i - 1, i + 4};
  return even ? std::pair{i - 3, i + 2} : std::pair{i - 4, i + 1};
}

template <typename S>
FlagRow<S> row_step(const FlagRow<S>& row, bool forward) {
  FlagRow<S> out;
  int lo = 0, hi = -1;
  bool any = false;
  for (int i = row.first; i <= row.last(); ++i) {
    auto [a, b] = footprint(i, forward);
    if (a >= row.first && b <= row.last()) {
      if (!any) lo = i;
      hi = i;
      any = true;
    }
  }
  if (!any) throw WindowTooSmall("row too short for an update");
  out.first = lo;
  auto get = [&](int t) -> const S& { return row.at(t); };
  for (int i = lo; i <= hi; ++i) out.values.push_back(update_label<S>(i, forward, get));
  return out;
}

}  // namespace detail

// Next pentagram row (right convention) on an open run of labels:
//   f'_{2j}   = f_{2j}   (1 - chi_{j-1}) / (1 - chi_{j+1})
//   f'_{2j+1} = f_{2j+3} (1 - chi_{j+2}) / (1 - chi_j),   chi_m = f_{2m} f_{2m+1}
template <typename S>
FlagRow<S> pentagram_row_update(const FlagRow<S>& row) {
  return detail::row_step(row, true);
}

template <typename S>
FlagRow<S> pentagram_row_inverse(const FlagRow<S>& row) {
  return detail::row_step(row, false);
}

// Cyclic rows: values[i] = f_i, indices mod the (even) row length.
template <typename S>
std::vector<S> pentagram_row_update_cyclic(const std::vector<S>& x) {
  const int m = static_cast<int>(x.size());
  if (m < 2 || m % 2 != 0) throw WindowTooSmall("cyclic row needs an even length");
  auto get = [&](int t) -> const S& { return x[static_cast<std::size_t>(((t % m) + m) % m)]; };
  std::vector<S> out;
  for (int i = 0; i < m; ++i) out.push_back(detail::update_label<S>(i, true, get));
  return out;
}

template <typename S>
std::vector<S> pentagram_row_inverse_cyclic(const std::vector<S>& x) {
  const int m = static_cast<int>(x.size());
  if (m < 2 || m % 2 != 0) throw WindowTooSmall("cyclic row needs an even length");
  auto get = [&](int t) -> const S& { return x[static_cast<std::size_t>(((t % m) + m) % m)]; };
  std::vector<S> out;
  for (int i = 0; i < m; ++i) out.push_back(detail::update_label<S>(i, false, get));
  return out;
}

// Corner invariants of a closed polygon: f_{2j}, f_{2j+1} from v_{j-2}..v_{j+2}.
template <typename S>
std::vector<S> closed_corner_invariants(const std::vector<ProjPoint<S>>& poly) {
  const int n = static_cast<int>(poly.size());
  if (n < 5) throw ConstructionDegenerate("closed polygon needs at least 5 vertices");
  auto v = [&](int i) -> const ProjPoint<S>& { return poly[static_cast<std::size_t>(((i % n) + n) % n)]; };
  std::vector<S> f;
  for (int j = 0; j < n; ++j) {
    auto [x, y] = corner_invariants<S>({v(j - 2), v(j - 1), v(j), v(j + 1), v(j + 2)});
    f.push_back(x);
    f.push_back(y);
  }
  return f;
}

// Products of the corner invariants split by lattice column parity c = i + row.
// Row 0 gives the index-parity products; the pentagram image sits one row
// lower, which exchanges the two classes.
template <typename S>
std::pair<S, S> closed_EO(const std::vector<ProjPoint<S>>& poly, int tiling_row = 0) {
  std::vector<S> f = closed_corner_invariants(poly);
  S E(1), O(1);
  for (int i = 0; i < static_cast<int>(f.size()); ++i) {
    if (((i + tiling_row) % 2 + 2) % 2 == 0) E *= f[static_cast<std::size_t>(i)];
    else O *= f[static_cast<std::size_t>(i)];
  }
  return {E, O};
}

struct LatticeVertex {
  int r = 0;
  int c = 0;
  friend bool operator==(const LatticeVertex&, const LatticeVertex&) = default;
};

enum class ZigStep { Up, Down };

// A rightward path along diagonal edges; each step advances the column by one.
struct Zigzag {
  LatticeVertex start;
  std::vector<ZigStep> steps;

  LatticeVertex end() const {
    LatticeVertex v = start;
    for (ZigStep s : steps) {
      v.r += s == ZigStep::Up ? -1 : 1;
      v.c += 1;
    }
    return v;
  }
};

// Edge labels on the lattice.  Label (r, i) has column c = i + r; rows grow
// in the pentagram direction.  Lattice vertices satisfy c = r (mod 2).  The
// up-step from (r, c) crosses edge (r, c); the down-step crosses edge (r+1, c).
// Even flag indices are the forward-slanting edges.
template <typename S>
class TilingLabeling {
 public:
  TilingLabeling(int n, int k, std::map<int, FlagRow<S>> rows) : n_(n), k_(k), rows_(std::move(rows)) {}

  int n() const { return n_; }
  int k() const { return k_; }
  const std::map<int, FlagRow<S>>& rows() const { return rows_; }
  int row_min() const { return rows_.begin()->first; }
  int row_max() const { return rows_.rbegin()->first; }

  bool has(int r, int i) const {
    auto it = rows_.find(r);
    return it != rows_.end() && it->second.has(i);
  }
  const S& label(int r, int i) const {
    auto it = rows_.find(r);
    if (it == rows_.end() || !it->second.has(i))
      throw EdgeOutsideRegion("edge (" + std::to_string(r) + ", " + std::to_string(i) + ") not filled");
    return it->second.at(i);
  }
  const S& at_column(int r, int c) const { return label(r, c - r); }

  // Translation by V_{n,k} in (row, index) terms: (r, i) ~ (r - k, i + 2n + 2k).
  std::pair<int, int> translate(int r, int i, int times = 1) const {
    return {r - times * k_, i + times * (2 * n_ + 2 * k_)};
  }

 private:
  int n_, k_;
  std::map<int, FlagRow<S>> rows_;
};

struct LabelingRegion {
  int r_min = 0;
  int r_max = 0;
  int flag_lo = 0;
  int flag_hi = 0;
};

// Base row from the seed's orbit, rows below by the pentagram update, rows
// above by the inverse update.  Every row covers at least [flag_lo, flag_hi].
template <typename S>
TilingLabeling<S> fill_labeling(const Seed<S>& seed, const LabelingRegion& region) {
  if (region.r_min > 0 || region.r_max < 0 || region.flag_lo > region.flag_hi)
    throw WindowTooSmall("labeling region must contain row 0");
  const int depth = std::max(-region.r_min, region.r_max);
  const int base_lo = region.flag_lo - 4 * depth - 2;
  const int base_hi = region.flag_hi + 4 * depth + 2;
  const int j_lo = base_lo >= 0 ? base_lo / 2 : -((-base_lo + 1) / 2);
  const int j_hi = base_hi >= 0 ? base_hi / 2 : -((-base_hi + 1) / 2);
  SpiralOrbit<S> orbit(seed, j_lo - 2, j_hi + 2);
  std::map<int, FlagRow<S>> rows;
  rows[0] = flag_sequence(orbit, j_lo, j_hi);
  for (int r = 1; r <= region.r_max; ++r) rows[r] = pentagram_row_update(rows[r - 1]);
  for (int r = -1; r >= region.r_min; --r) rows[r] = pentagram_row_inverse(rows[r + 1]);
  return TilingLabeling<S>(seed.n, seed.k, std::move(rows));
}

template <typename S>
S zigzag_monomial(const TilingLabeling<S>& lab, const Zigzag& path) {
  S z(1);
  LatticeVertex v = path.start;
  if (((v.c - v.r) % 2 + 2) % 2 != 0) throw EdgeOutsideRegion("start is not a lattice vertex");
  for (ZigStep s : path.steps) {
    if (s == ZigStep::Up) {
      z *= lab.at_column(v.r, v.c);
      v.r -= 1;
    } else {
      z *= lab.at_column(v.r + 1, v.c);
      v.r += 1;
    }
    v.c += 1;
  }
  return z;
}

// The closed path: n+k up-steps then n down-steps from `start`.
inline Zigzag z_path(int n, int k, LatticeVertex start = {}) {
  Zigzag p{start, {}};
  p.steps.assign(static_cast<std::size_t>(n + k), ZigStep::Up);
  p.steps.insert(p.steps.end(), static_cast<std::size_t>(n), ZigStep::Down);
  return p;
}

// Region large enough for z_path from any start with r in [-extra, 0] and
// c in [-extra, extra].
inline LabelingRegion z_region(int n, int k, int extra = 0) {
  return LabelingRegion{-(n + k) - extra, 0, -2 * extra - 2, 3 * n + 2 * k + 3 * extra + 2};
}

template <typename S>
S z_invariant(const TilingLabeling<S>& lab, LatticeVertex start = {}) {
  return zigzag_monomial(lab, z_path(lab.n(), lab.k(), start));
}

template <typename S>
S z_invariant(const Seed<S>& seed) {
  return z_invariant(fill_labeling(seed, z_region(seed.n, seed.k)));
}

// First failing relation, if any, over all complete cells of the labeling:
// diamonds f_{2j} f_{2j+1} (row r) = f_{2j-1} f_{2j} (row r+1), and the
// horizontal-edge relations that carry row r to row r+1.
struct CompatibilityReport {
  bool ok = true;
  int cells = 0;
  std::string first_failure;
};

template <typename S>
CompatibilityReport check_compatibility(const TilingLabeling<S>& lab, double tol = 1e-9) {
  using T = ScalarTraits<S>;
  CompatibilityReport rep;
  auto same = [&](const S& a, const S& b) {
    if constexpr (T::exact) return a == b;
    else return std::fabs(a - b) <= tol * std::max(1.0, std::fabs(a));
  };
  for (auto it = lab.rows().begin(); it != lab.rows().end(); ++it) {
    auto nx = std::next(it);
    if (nx == lab.rows().end() || nx->first != it->first + 1) continue;
    const FlagRow<S>& up = it->second;
    const FlagRow<S>& dn = nx->second;
    const int r = it->first;
    for (int i = up.first; i <= up.last(); ++i) {
      if (((i % 2) + 2) % 2 != 0) continue;
      const int j = i / 2 - (i < 0 && i % 2 != 0);
      // diamond
      if (up.has(2 * j + 1) && dn.has(2 * j - 1) && dn.has(2 * j)) {
        ++rep.cells;
        if (!same(S(up.at(2 * j) * up.at(2 * j + 1)), S(dn.at(2 * j - 1) * dn.at(2 * j))) && rep.ok) {
          rep.ok = false;
          rep.first_failure = "diamond at row " + std::to_string(r) + ", j=" + std::to_string(j);
        }
      }
      auto chi = [&](int m) { return S(S(1) - up.at(2 * m) * up.at(2 * m + 1)); };
      // forward-slanting edge across the horizontal edges G_{j-1}, G_{j+1}
      if (up.has(2 * j - 2) && up.has(2 * j + 3) && dn.has(2 * j)) {
        ++rep.cells;
        if (!same(S(dn.at(2 * j) * chi(j + 1)), S(up.at(2 * j) * chi(j - 1))) && rep.ok) {
          rep.ok = false;
          rep.first_failure = "even relation at row " + std::to_string(r) + ", j=" + std::to_string(j);
        }
      }
      // backward-slanting edge across G_j, G_{j+2}
      if (up.has(2 * j) && up.has(2 * j + 5) && dn.has(2 * j + 1)) {
        ++rep.cells;
        if (!same(S(dn.at(2 * j + 1) * chi(j)), S(up.at(2 * j + 3) * chi(j + 2))) && rep.ok) {
          rep.ok = false;
          rep.first_failure = "odd relation at row " + std::to_string(r) + ", j=" + std::to_string(j);
        }
      }
    }
  }
  return rep;
}

}  // namespace penta
