#pragma once

#include "polyreg/rational.hpp"

#include <optional>

namespace polyreg {

struct Point2 {
  Rational x;
  Rational y;

  friend bool operator==(const Point2&, const Point2&) = default;
};

Point2 operator+(const Point2& a, const Point2& b);
Point2 operator-(const Point2& a, const Point2& b);
Point2 operator*(const Rational& s, const Point2& p);

Rational cross(const Point2& u, const Point2& v);
Rational dot(const Point2& u, const Point2& v);

// Strict weak order by (x, y), for exact dedup maps.
struct Point2Less {
  bool operator()(const Point2& a, const Point2& b) const;
};

// Sign of det(b - a, c - a): +1 anticlockwise, 0 collinear, -1 clockwise.
int orient(const Point2& a, const Point2& b, const Point2& c);

// Crossing point of the open interiors of segments ab and cd if they meet
// transversally; nothing for shared endpoints, disjoint segments or
// collinear overlap.
std::optional<Point2> proper_intersection(const Point2& a, const Point2& b,
                                          const Point2& c, const Point2& d);

// Three-way comparators on nonzero direction vectors (-1 / 0 / +1).
// cmp_full_angle orders by anticlockwise angle in [0, 2pi) from the +x axis.
// cmp_line_angle identifies opposite directions and orders by angle in [0, pi).
int cmp_full_angle(const Point2& u, const Point2& v);
int cmp_line_angle(const Point2& u, const Point2& v);

}  // namespace polyreg
