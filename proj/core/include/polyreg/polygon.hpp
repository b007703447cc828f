#pragma once

#include "polyreg/point.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

namespace polyreg {

// Vertex pair 1 <= i < j <= n. A chord is a side when the indices are
// cyclically adjacent, otherwise a diagonal.
struct Chord {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const Chord&, const Chord&) = default;
};

bool is_side(const Chord& c, int n);

// Convex polygon P_1 ... P_n listed anticlockwise. Labels are 1-based.
struct PolygonSpec {
  std::vector<Point2> vertices;

  int n() const { return static_cast<int>(vertices.size()); }
  const Point2& vertex(int label) const { return vertices[label - 1]; }
};

// True iff every cyclic consecutive vertex triple turns strictly left.
bool is_strictly_convex_acw(const std::vector<Point2>& vertices);

std::vector<Chord> all_chords(int n);
std::vector<Chord> diagonal_chords(int n);

// Proper pairwise crossings of the diagonals, deduped by exact coordinates.
// Each crossing lists every chord through it; three or more chords at one
// point means the diagonals are not generic.
std::map<Point2, std::vector<Chord>, Point2Less> diagonal_crossings(const PolygonSpec& poly);

bool is_generic(const PolygonSpec& poly);

// Rejection-sampling attempt budget; override with POLYREG_RETRY_BUDGET.
int retry_budget();

// Deterministic in (n, seed). Rational points near the unit circle with
// strictly increasing angles: strictly convex, anticlockwise, generic
// diagonals. Throws RetryExhausted when the budget runs out.
PolygonSpec random_generic_polygon(int n, std::uint64_t seed);

}  // namespace polyreg
