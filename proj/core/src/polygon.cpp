#include "polyreg/polygon.hpp"

#include "polyreg/error.hpp"
#include "polyreg/rng.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

namespace polyreg {

bool is_side(const Chord& c, int n) {
  return c.j - c.i == 1 || (c.i == 1 && c.j == n);
}

bool is_strictly_convex_acw(const std::vector<Point2>& vertices) {
  const int n = static_cast<int>(vertices.size());
  if (n < 3) return false;
  for (int k = 0; k < n; ++k) {
    if (orient(vertices[k], vertices[(k + 1) % n], vertices[(k + 2) % n]) != 1) return false;
  }
  return true;
}

std::vector<Chord> all_chords(int n) {
  std::vector<Chord> out;
  out.reserve(n * (n - 1) / 2);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) out.push_back({i, j});
  return out;
}

std::vector<Chord> diagonal_chords(int n) {
  std::vector<Chord> out;
  for (const Chord& c : all_chords(n))
    if (!is_side(c, n)) out.push_back(c);
  return out;
}

std::map<Point2, std::vector<Chord>, Point2Less> diagonal_crossings(const PolygonSpec& poly) {
  std::map<Point2, std::vector<Chord>, Point2Less> out;
  const auto diags = diagonal_chords(poly.n());
  for (std::size_t a = 0; a < diags.size(); ++a) {
    for (std::size_t b = a + 1; b < diags.size(); ++b) {
      const auto p = proper_intersection(poly.vertex(diags[a].i), poly.vertex(diags[a].j),
                                         poly.vertex(diags[b].i), poly.vertex(diags[b].j));
      if (!p) continue;
      auto& through = out[*p];
      for (const Chord& c : {diags[a], diags[b]}) {
        bool present = false;
        for (const Chord& q : through) present = present || q == c;
        if (!present) through.push_back(c);
      }
    }
  }
  return out;
}

bool is_generic(const PolygonSpec& poly) {
  if (poly.n() < 4) return true;
  for (const auto& [point, through] : diagonal_crossings(poly)) {
    (void)point;
    if (through.size() > 2) return false;
  }
  return true;
}

int retry_budget() {
  if (const char* env = std::getenv("POLYREG_RETRY_BUDGET")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1000;
}

PolygonSpec random_generic_polygon(int n, std::uint64_t seed) {
  if (n < 3) throw BadInput("random_generic_polygon: need n >= 3, got " + std::to_string(n));
  Rng rng(mix_seed(seed, static_cast<std::uint64_t>(n)));
  const int budget = retry_budget();
  for (int attempt = 0; attempt < budget; ++attempt) {
    // Strictly increasing angles in (-pi, pi), one per jittered slot, realized
    // as exact tan-half-angle parameters. Points on a circle are automatically
    // in strictly convex position; the radius perturbation below is what can
    // break convexity, hence the re-check.
    std::vector<Rational> t(n);
    bool monotone = true;
    for (int k = 0; k < n; ++k) {
      const double frac = (k + 0.1 + 0.8 * rng.next_unit()) / n;
      const double half_angle = std::numbers::pi * (frac - 0.5);
      t[k] = dyadic_from_double(std::tan(half_angle), 14);
      if (k > 0 && t[k] <= t[k - 1]) monotone = false;
    }
    if (!monotone) continue;

    PolygonSpec poly;
    poly.vertices.reserve(n);
    for (int k = 0; k < n; ++k) {
      const Rational d = 1 + t[k] * t[k];
      const Rational r(4096 + rng.next_int(-64, 64), 4096);
      poly.vertices.push_back({r * (1 - t[k] * t[k]) / d, r * (2 * t[k]) / d});
    }
    if (!is_strictly_convex_acw(poly.vertices)) continue;
    if (!is_generic(poly)) continue;
    return poly;
  }
  throw RetryExhausted("random_generic_polygon: no generic polygon for n=" + std::to_string(n) +
                       " within " + std::to_string(budget) + " attempts");
}

}  // namespace polyreg
