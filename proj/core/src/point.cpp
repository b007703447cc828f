#include "polyreg/point.hpp"

namespace polyreg {

Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
Point2 operator*(const Rational& s, const Point2& p) { return {s * p.x, s * p.y}; }

Rational cross(const Point2& u, const Point2& v) { return u.x * v.y - u.y * v.x; }
Rational dot(const Point2& u, const Point2& v) { return u.x * v.x + u.y * v.y; }

bool Point2Less::operator()(const Point2& a, const Point2& b) const {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

int orient(const Point2& a, const Point2& b, const Point2& c) {
  return sign_of(cross(b - a, c - a));
}

std::optional<Point2> proper_intersection(const Point2& a, const Point2& b,
                                          const Point2& c, const Point2& d) {
  const int o1 = orient(a, b, c);
  const int o2 = orient(a, b, d);
  const int o3 = orient(c, d, a);
  const int o4 = orient(c, d, b);
  if (o1 * o2 >= 0 || o3 * o4 >= 0) return std::nullopt;
  const Point2 r = b - a;
  const Point2 s = d - c;
  const Rational t = cross(c - a, s) / cross(r, s);
  return Point2{a.x + t * r.x, a.y + t * r.y};
}

namespace {

// 0 for directions with angle in [0, pi), 1 for [pi, 2pi). Zero vector is a
// caller bug; treated as half 0.
int half_turn(const Point2& u) {
  const int sy = sign_of(u.y);
  if (sy != 0) return sy > 0 ? 0 : 1;
  return sign_of(u.x) >= 0 ? 0 : 1;
}

}  // namespace

int cmp_full_angle(const Point2& u, const Point2& v) {
  const int hu = half_turn(u);
  const int hv = half_turn(v);
  if (hu != hv) return hu < hv ? -1 : 1;
  return -sign_of(cross(u, v));
}

int cmp_line_angle(const Point2& u, const Point2& v) {
  const Point2 nu = half_turn(u) == 0 ? u : Point2{-u.x, -u.y};
  const Point2 nv = half_turn(v) == 0 ? v : Point2{-v.x, -v.y};
  return -sign_of(cross(nu, nv));
}

}  // namespace polyreg
