#include "polyreg/realize.hpp"

#include "polyreg/error.hpp"
#include "polyreg/rng.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace polyreg {

namespace {

bool face_contains(const ChordArrangement& arr, int face, const Point2& q) {
  for (const int h : arr.faces[face]) {
    if (orient(arr.nodes[arr.half_edges[h].origin], arr.nodes[arr.half_edges[h].target], q) != 1)
      return false;
  }
  return true;
}

}  // namespace

PolygonSpec realize_cycle(const CycleN& c, std::uint64_t seed) {
  const auto decomposition = standard_decomposition(c);
  if (decomposition.row_count() != 2)
    throw BadInput("realize_cycle: cycle is not two-standard consecutive: " + c.to_string());
  const int n = c.size();
  const int l = decomposition.first_row_end();
  const Point2 anchor{0, 0};

  Rng rng(mix_seed(seed, 0x5245414CULL));
  const int budget = retry_budget();
  for (int attempt = 0; attempt < budget; ++attempt) {
    // One line angle per written position, strictly increasing in (0, pi)
    // with spacing at least pi/(4n).
    std::vector<Rational> tan_half(n);
    bool monotone = true;
    for (int k = 0; k < n; ++k) {
      const double angle = std::numbers::pi * (k + 0.25 + 0.5 * rng.next_unit()) / n;
      tan_half[k] = dyadic_from_double(std::tan(angle / 2), 14);
      if (k > 0 && tan_half[k] <= tan_half[k - 1]) monotone = false;
    }
    if (!monotone) continue;

    // Vertex j rides the ray of its written position; the second row flips
    // to the opposite ray, which makes vertex angles increase with the label.
    PolygonSpec poly;
    poly.vertices.resize(n);
    for (int label = 1; label <= n; ++label) {
      const Rational& t = tan_half[c.position_of(label)];
      const Rational d = 1 + t * t;
      const Point2 dir{(1 - t * t) / d, (2 * t) / d};
      const Rational r(4096 + rng.next_int(-48, 48), 4096);
      poly.vertices[label - 1] = label <= l ? r * dir : (-r) * dir;
    }
    if (!is_strictly_convex_acw(poly.vertices)) continue;

    bool anchor_clear = true;
    for (int i = 1; i <= n && anchor_clear; ++i)
      for (int j = i + 1; j <= n && anchor_clear; ++j)
        anchor_clear = orient(poly.vertex(i), poly.vertex(j), anchor) != 0;
    if (!anchor_clear) continue;

    // Certify: the enumerated face holding the anchor carries exactly c.
    // build_arrangement itself rejects non-generic diagonals.
    bool verified = false;
    try {
      const ChordArrangement arr = build_arrangement(poly);
      for (const RegionInfo& region : enumerate_regions(arr)) {
        if (face_contains(arr, region.face_id, anchor)) {
          verified = region.cycle == c;
          break;
        }
      }
    } catch (const NonGeneric&) {
      continue;
    }
    if (!verified) continue;
    return poly;
  }
  throw RetryExhausted("realize_cycle: budget exhausted for cycle " + c.to_string());
}

RealizationSweep realization_sweep(int n, std::uint64_t seed) {
  if (n < 4) throw BadInput("realization_sweep: need n >= 4");
  RealizationSweep sweep;
  sweep.n = n;
  sweep.seed = seed;
  for (const CycleN& c : enumerate_two_standard(n)) {
    ++sweep.total;
    try {
      realize_cycle(c, mix_seed(seed, static_cast<std::uint64_t>(sweep.total)));
    } catch (const std::exception& e) {
      throw RetryExhausted("realization_sweep: cycle " + c.to_string() + " failed: " + e.what());
    }
    ++sweep.realized;
  }
  return sweep;
}

}  // namespace polyreg
