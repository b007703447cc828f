#include "polyreg/point_arrangement.hpp"

#include "polyreg/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace polyreg {

void validate_arrangement(const PointArrangement& arr) {
  const int n = arr.n();
  if (n < 3) throw BadInput("point arrangement: need at least 3 points");
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        if (orient(arr.point(a), arr.point(b), arr.point(c)) == 0)
          throw BadInput("point arrangement: points " + std::to_string(a) + ", " +
                         std::to_string(b) + ", " + std::to_string(c) + " are collinear");
}

LabelCycle LabelCycle::from_order(std::vector<int> labels) {
  if (labels.empty()) throw BadInput("label cycle: empty");
  const auto smallest = std::min_element(labels.begin(), labels.end());
  std::rotate(labels.begin(), smallest, labels.end());
  LabelCycle out;
  out.labels_ = std::move(labels);
  return out;
}

LabelCycle LabelCycle::reversed() const {
  std::vector<int> rev(labels_.rbegin(), labels_.rend());
  return from_order(std::move(rev));
}

LabelCycle LabelCycle::relabeled(const std::vector<int>& pi) const {
  std::vector<int> mapped(labels_.size());
  for (std::size_t k = 0; k < labels_.size(); ++k) mapped[k] = pi[labels_[k] - 1];
  return from_order(std::move(mapped));
}

namespace {

std::vector<int> sorted_labels_around(const Point2& anchor, const std::vector<Point2>& points,
                                      const std::vector<int>& labels, bool modulo_half_turn) {
  std::vector<int> order = labels;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Point2 da = points[a - 1] - anchor;
    const Point2 db = points[b - 1] - anchor;
    const int c = modulo_half_turn ? cmp_line_angle(da, db) : cmp_full_angle(da, db);
    return c < 0;
  });
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    const Point2 da = points[order[k] - 1] - anchor;
    const Point2 db = points[order[k + 1] - 1] - anchor;
    const int c = modulo_half_turn ? cmp_line_angle(da, db) : cmp_full_angle(da, db);
    if (c == 0)
      throw BadInput("degenerate arrangement: collinear directions at the anchor point");
  }
  return order;
}

std::vector<int> other_labels(int n, int anchor) {
  std::vector<int> out;
  out.reserve(n - 1);
  for (int j = 1; j <= n; ++j)
    if (j != anchor) out.push_back(j);
  return out;
}

}  // namespace

LabelCycle line_cycle_at(const PointArrangement& arr, int label) {
  return LabelCycle::from_order(sorted_labels_around(arr.point(label), arr.points,
                                                     other_labels(arr.n(), label), true));
}

LabelCycle point_cycle_at(const PointArrangement& arr, int label) {
  return LabelCycle::from_order(sorted_labels_around(arr.point(label), arr.points,
                                                     other_labels(arr.n(), label), false));
}

std::vector<int> line_cycle_of(const Point2& q, const std::vector<Point2>& points) {
  std::vector<int> labels(points.size());
  std::iota(labels.begin(), labels.end(), 1);
  return sorted_labels_around(q, points, labels, true);
}

bool on_hull_boundary(const PointArrangement& arr, int label) {
  return line_cycle_at(arr, label) == point_cycle_at(arr, label);
}

IsoResult find_isomorphism(const PointArrangement& a1, const PointArrangement& a2,
                           int brute_force_bound) {
  const int n = a1.n();
  if (n != a2.n())
    throw BadInput("find_isomorphism: arrangements have different sizes");
  if (n > brute_force_bound)
    throw BadInput("find_isomorphism: n=" + std::to_string(n) + " above brute force bound " +
                   std::to_string(brute_force_bound));

  std::vector<LabelCycle> s1, s2;
  s1.reserve(n);
  s2.reserve(n);
  for (int i = 1; i <= n; ++i) {
    s1.push_back(line_cycle_at(a1, i));
    s2.push_back(line_cycle_at(a2, i));
  }

  // One pass in lexicographic order, testing each candidate for the
  // preserving identity first and the reversing one second. An arrangement
  // whose order type has a reflective relabeling admits both kinds; the
  // earliest witnessing permutation decides, so an image under a
  // label-preserving affine map always reports the map's own orientation.
  std::vector<int> pi(n);
  std::iota(pi.begin(), pi.end(), 1);
  do {
    bool preserving = true;
    bool reversing = true;
    for (int i = 1; i <= n && (preserving || reversing); ++i) {
      const LabelCycle mapped = s1[i - 1].relabeled(pi);
      const LabelCycle& target = s2[pi[i - 1] - 1];
      preserving = preserving && mapped == target;
      reversing = reversing && mapped.reversed() == target;
    }
    if (preserving) return {IsoKind::kPreserving, pi};
    if (reversing) return {IsoKind::kReversing, pi};
  } while (std::next_permutation(pi.begin(), pi.end()));
  return {IsoKind::kNone, std::nullopt};
}

bool point_in_triangle_via_cycle(const Point2& q, const Point2& a, const Point2& b,
                                 const Point2& c) {
  const int o = orient(a, b, c);
  if (o == 0) throw BadInput("point_in_triangle_via_cycle: degenerate triangle");
  // Normalize to an anticlockwise triangle; labels 1,2,3 for the corners, 4 for q.
  PointArrangement arr{{a, o > 0 ? b : c, o > 0 ? c : b, q}};
  // q lies inside iff it is not a hull vertex of the four points (line cycle
  // and point cycle disagree), and then its line cycle reads (1 3 2). The
  // hull test matters: a corner inside the hull of the other two and q also
  // puts (1 3 2) on q's line cycle, with q on the hull.
  const LabelCycle line = line_cycle_at(arr, 4);
  return !(line == point_cycle_at(arr, 4)) && line == LabelCycle::from_order({1, 3, 2});
}

}  // namespace polyreg
