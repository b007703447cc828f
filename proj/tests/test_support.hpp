#pragma once

// Shared helpers and independent oracles for the test suites. Everything here
// is deliberately implemented from first principles (orient only), separate
// from the library code paths it checks.

#include "polyreg/error.hpp"
#include "polyreg/harness.hpp"
#include "polyreg/point_arrangement.hpp"
#include "polyreg/rng.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <vector>

namespace testsupport {

using namespace polyreg;

inline Point2 int_point(long long x, long long y) { return {Rational(x), Rational(y)}; }

// Random arrangement of n labeled integer points, no three collinear.
inline PointArrangement random_arrangement(int n, Rng& rng, int span = 1000) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Point2> pts;
    while (static_cast<int>(pts.size()) < n) {
      const Point2 p = int_point(rng.next_int(0, span), rng.next_int(0, span));
      bool ok = std::find(pts.begin(), pts.end(), p) == pts.end();
      for (std::size_t a = 0; ok && a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b)
          if (orient(pts[a], pts[b], p) == 0) {
            ok = false;
            break;
          }
      if (!ok) break;
      pts.push_back(p);
    }
    if (static_cast<int>(pts.size()) == n) return PointArrangement{std::move(pts)};
  }
  throw RetryExhausted("random_arrangement: could not find a general position sample");
}

// Gift wrapping. Returns the set of labels on the convex hull boundary.
inline std::set<int> gift_wrap_hull(const PointArrangement& arr) {
  const int n = arr.n();
  int start = 1;
  for (int i = 2; i <= n; ++i) {
    const Point2& p = arr.point(i);
    const Point2& s = arr.point(start);
    if (p.x < s.x || (p.x == s.x && p.y < s.y)) start = i;
  }
  std::set<int> hull;
  int current = start;
  do {
    hull.insert(current);
    int candidate = current == 1 ? 2 : 1;
    for (int i = 1; i <= n; ++i) {
      if (i == current || i == candidate) continue;
      if (orient(arr.point(current), arr.point(candidate), arr.point(i)) < 0) candidate = i;
    }
    current = candidate;
  } while (current != start);
  return hull;
}

// Strictly inside the triangle, by orientation signs alone.
inline bool inside_triangle_orient(const Point2& q, const Point2& a, const Point2& b,
                                   const Point2& c) {
  const int o = orient(a, b, c);
  if (o == 0) return false;
  const Point2& bb = o > 0 ? b : c;
  const Point2& cc = o > 0 ? c : b;
  return orient(a, bb, q) == 1 && orient(bb, cc, q) == 1 && orient(cc, a, q) == 1;
}

struct AffineMap {
  Rational a, b, c, d;  // linear part rows (a b; c d)
  Rational tx, ty;

  Point2 operator()(const Point2& p) const {
    return {a * p.x + b * p.y + tx, c * p.x + d * p.y + ty};
  }
  Rational det() const { return a * d - b * c; }
};

inline AffineMap random_affine(Rng& rng, bool positive_det) {
  while (true) {
    AffineMap m{Rational(rng.next_int(-5, 5), rng.next_int(1, 4)),
                Rational(rng.next_int(-5, 5), rng.next_int(1, 4)),
                Rational(rng.next_int(-5, 5), rng.next_int(1, 4)),
                Rational(rng.next_int(-5, 5), rng.next_int(1, 4)),
                Rational(rng.next_int(-20, 20)), Rational(rng.next_int(-20, 20))};
    const int s = sign_of(m.det());
    if (s == 0) continue;
    if ((s > 0) != positive_det) std::swap(m.a, m.c), std::swap(m.b, m.d);
    return m;
  }
}

inline PointArrangement apply_map(const PointArrangement& arr, const AffineMap& m) {
  std::vector<Point2> pts;
  pts.reserve(arr.points.size());
  for (const Point2& p : arr.points) pts.push_back(m(p));
  return PointArrangement{std::move(pts)};
}

// Independent census oracle: filter every permutation starting at 1.
inline std::vector<CycleN> brute_force_two_standard(int n) {
  std::vector<int> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 2);
  std::vector<CycleN> out;
  do {
    std::vector<int> seq(1, 1);
    seq.insert(seq.end(), rest.begin(), rest.end());
    CycleN c = CycleN::canonicalize(std::move(seq));
    if (is_two_standard(c)) out.push_back(std::move(c));
  } while (std::next_permutation(rest.begin(), rest.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// Rank normalization used to validate pattern witnesses independently.
inline std::array<int, 6> rank_cycle(const std::array<int, 6>& vals) {
  std::array<int, 6> ranks{};
  int min_at = 0;
  for (int t = 0; t < 6; ++t) {
    int r = 1;
    for (int s = 0; s < 6; ++s) r += vals[s] < vals[t];
    ranks[t] = r;
    if (vals[t] < vals[min_at]) min_at = t;
  }
  std::array<int, 6> rotated{};
  for (int t = 0; t < 6; ++t) rotated[t] = ranks[(min_at + t) % 6];
  return rotated;
}

// Exhaustive test-side pattern search, independent of the library's witness
// selection.
inline bool has_pattern(const CycleN& c, const std::array<int, 6>& pattern) {
  const int n = c.size();
  std::array<int, 6> pos{};
  std::array<int, 6> vals{};
  const auto step = [&](auto&& self, int depth, int from) -> bool {
    if (depth == 6) {
      for (int t = 0; t < 6; ++t) vals[t] = c.at(pos[t]);
      return rank_cycle(vals) == pattern;
    }
    for (int p = from; p < n - (5 - depth); ++p) {
      pos[depth] = p;
      if (self(self, depth + 1, p + 1)) return true;
    }
    return false;
  };
  return step(step, 0, 0);
}

// Heptagon with near-uniform angles and a tiny radius jitter; its central
// region carries the cycle (1 5 2 6 3 7 4) with seven sides.
inline PolygonSpec near_regular_heptagon(std::uint64_t seed) {
  Rng rng(seed);
  for (int attempt = 0; attempt < 200; ++attempt) {
    PolygonSpec poly;
    for (int k = 0; k < 7; ++k) {
      const double half = std::numbers::pi * ((k + 0.5) / 7.0 - 0.5);
      const Rational t = dyadic_from_double(std::tan(half), 20);
      const Rational d = 1 + t * t;
      const Rational r((1 << 22) + rng.next_int(-64, 64), 1 << 22);
      poly.vertices.push_back({r * (1 - t * t) / d, r * (2 * t) / d});
    }
    if (!is_strictly_convex_acw(poly.vertices) || !is_generic(poly)) continue;
    return poly;
  }
  throw RetryExhausted("near_regular_heptagon: no generic sample");
}

// Centrally symmetric rational hexagon; its three long diagonals concur at
// the origin, so the diagonals are not generic.
inline PolygonSpec symmetric_hexagon() {
  PolygonSpec poly;
  poly.vertices = {int_point(2, 0),  int_point(1, 2),   int_point(-1, 2),
                   int_point(-2, 0), int_point(-1, -2), int_point(1, -2)};
  return poly;
}

// Interior point of some polygon face: which label (if any) lies strictly
// inside the triangle of the other three. 0 means none (convex position).
inline int containment_profile(const PointArrangement& arr) {
  for (int inner = 1; inner <= 4; ++inner) {
    std::vector<int> others;
    for (int j = 1; j <= 4; ++j)
      if (j != inner) others.push_back(j);
    if (inside_triangle_orient(arr.point(inner), arr.point(others[0]), arr.point(others[1]),
                               arr.point(others[2])))
      return inner;
  }
  return 0;
}

// Searches seeded random 4-point integer arrangements for two with identical
// point cycles at every label under the identity map but different
// interior-of-triangle incidence.
inline std::pair<PointArrangement, PointArrangement> find_same_point_cycles_pair(
    std::uint64_t seed) {
  Rng rng(seed);
  std::map<std::vector<std::vector<int>>, std::vector<PointArrangement>> buckets;
  for (int iter = 0; iter < 20000; ++iter) {
    PointArrangement arr = random_arrangement(4, rng, 12);
    std::vector<std::vector<int>> key;
    for (int i = 1; i <= 4; ++i) key.push_back(point_cycle_at(arr, i).labels());
    auto& bucket = buckets[key];
    const int profile = containment_profile(arr);
    for (const PointArrangement& other : bucket) {
      if (containment_profile(other) != profile) return {other, arr};
    }
    bucket.push_back(std::move(arr));
  }
  throw RetryExhausted("find_same_point_cycles_pair: no witness found");
}

}  // namespace testsupport
