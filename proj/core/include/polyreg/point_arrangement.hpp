#pragma once

#include "polyreg/point.hpp"

#include <optional>
#include <vector>

namespace polyreg {

// Labeled points P_1 ... P_n, no three collinear.
struct PointArrangement {
  std::vector<Point2> points;

  int n() const { return static_cast<int>(points.size()); }
  const Point2& point(int label) const { return points[label - 1]; }
};

// Throws BadInput when some triple is collinear (O(n^3)).
void validate_arrangement(const PointArrangement& arr);

// Cyclic sequence of labels, stored rotation-canonical (smallest label first).
class LabelCycle {
 public:
  static LabelCycle from_order(std::vector<int> labels);

  const std::vector<int>& labels() const { return labels_; }

  // The same cyclic permutation traversed the other way.
  LabelCycle reversed() const;

  // Apply a label map pi (pi[label - 1] = new label).
  LabelCycle relabeled(const std::vector<int>& pi) const;

  friend bool operator==(const LabelCycle& a, const LabelCycle& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<int> labels_;
};

// Anticlockwise order in which a small circuit around the anchor crosses the
// lines joining it to the other points (directions modulo a half turn).
LabelCycle line_cycle_at(const PointArrangement& arr, int label);

// Anticlockwise order of the rays from the anchor to the other points.
LabelCycle point_cycle_at(const PointArrangement& arr, int label);

// Line cycle of an extra point q against labeled points 1..n, as the raw
// anticlockwise label order (not rotation-canonical).
std::vector<int> line_cycle_of(const Point2& q, const std::vector<Point2>& points);

// A point is a convex hull vertex iff its line cycle and point cycle agree.
bool on_hull_boundary(const PointArrangement& arr, int label);

enum class IsoKind { kPreserving, kReversing, kNone };

struct IsoResult {
  IsoKind kind = IsoKind::kNone;
  std::optional<std::vector<int>> pi;  // pi[i - 1] = image label of i
};

// Brute-force search for a permutation conjugating all line cycles of a1
// onto those of a2 (orientation preserving), or onto their inverses
// (orientation reversing). Throws BadInput on size mismatch or n > bound.
IsoResult find_isomorphism(const PointArrangement& a1, const PointArrangement& a2,
                           int brute_force_bound = 8);

// q strictly inside triangle abc, decided through the line cycle of q in the
// four-point arrangement. Must agree with the three-orientation sign test.
bool point_in_triangle_via_cycle(const Point2& q, const Point2& a, const Point2& b,
                                 const Point2& c);

}  // namespace polyreg
