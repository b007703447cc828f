#include "test_support.hpp"

#include <doctest.h>

using namespace polyreg;
using testsupport::int_point;

TEST_CASE("orient on canonical triples") {
  CHECK(orient(int_point(0, 0), int_point(1, 0), int_point(0, 1)) == 1);
  CHECK(orient(int_point(0, 0), int_point(1, 1), int_point(2, 2)) == 0);
  CHECK(orient(int_point(0, 0), int_point(0, 1), int_point(1, 0)) == -1);
}

TEST_CASE("orient is antisymmetric under argument swaps") {
  Rng rng(101);
  for (int k = 0; k < 200; ++k) {
    const Point2 a = int_point(rng.next_int(-50, 50), rng.next_int(-50, 50));
    const Point2 b = int_point(rng.next_int(-50, 50), rng.next_int(-50, 50));
    const Point2 c = int_point(rng.next_int(-50, 50), rng.next_int(-50, 50));
    const int o = orient(a, b, c);
    CHECK(orient(b, a, c) == -o);
    CHECK(orient(a, c, b) == -o);
    CHECK(orient(c, b, a) == -o);
    CHECK(orient(b, c, a) == o);
    CHECK(orient(c, a, b) == o);
  }
}

TEST_CASE("proper_intersection examples") {
  const auto p = proper_intersection(int_point(0, 0), int_point(2, 2), int_point(0, 2),
                                     int_point(2, 0));
  REQUIRE(p.has_value());
  CHECK(*p == int_point(1, 1));
  CHECK(!proper_intersection(int_point(0, 0), int_point(1, 0), int_point(0, 1), int_point(1, 1)));
  // shared endpoint is not a proper crossing
  CHECK(!proper_intersection(int_point(0, 0), int_point(1, 1), int_point(1, 1), int_point(2, 0)));
  // collinear overlap
  CHECK(!proper_intersection(int_point(0, 0), int_point(3, 0), int_point(1, 0), int_point(2, 0)));
}

TEST_CASE("proper_intersection is symmetric and lands inside both segments") {
  Rng rng(202);
  int found = 0;
  for (int k = 0; k < 300; ++k) {
    const Point2 a = int_point(rng.next_int(0, 40), rng.next_int(0, 40));
    const Point2 b = int_point(rng.next_int(0, 40), rng.next_int(0, 40));
    const Point2 c = int_point(rng.next_int(0, 40), rng.next_int(0, 40));
    const Point2 d = int_point(rng.next_int(0, 40), rng.next_int(0, 40));
    const auto p = proper_intersection(a, b, c, d);
    const auto q = proper_intersection(c, d, a, b);
    CHECK(p == q);
    if (!p) continue;
    ++found;
    for (const auto& [u, v] : {std::pair{a, b}, std::pair{c, d}}) {
      CHECK(orient(u, v, *p) == 0);
      CHECK(sign_of(dot(*p - u, v - u)) == 1);
      CHECK(sign_of(dot(*p - v, u - v)) == 1);
    }
  }
  CHECK(found > 20);
}

TEST_CASE("strict convexity test") {
  std::vector<Point2> square = {int_point(0, 0), int_point(1, 0), int_point(1, 1),
                                int_point(0, 1)};
  CHECK(is_strictly_convex_acw(square));
  std::reverse(square.begin(), square.end());
  CHECK(!is_strictly_convex_acw(square));
  CHECK(!is_strictly_convex_acw(
      {int_point(0, 0), int_point(1, 0), int_point(2, 0), int_point(0, 1)}));
}

TEST_CASE("any quadrilateral is generic") {
  const PolygonSpec quad{{int_point(0, 0), int_point(5, 1), int_point(6, 7), int_point(-1, 5)}};
  REQUIRE(is_strictly_convex_acw(quad.vertices));
  CHECK(is_generic(quad));
}

TEST_CASE("concurrent long diagonals are rejected") {
  const PolygonSpec hex = testsupport::symmetric_hexagon();
  REQUIRE(is_strictly_convex_acw(hex.vertices));
  // brute force: the three long diagonals meet pairwise at one common point
  const auto p14x25 = proper_intersection(hex.vertex(1), hex.vertex(4), hex.vertex(2), hex.vertex(5));
  const auto p14x36 = proper_intersection(hex.vertex(1), hex.vertex(4), hex.vertex(3), hex.vertex(6));
  const auto p25x36 = proper_intersection(hex.vertex(2), hex.vertex(5), hex.vertex(3), hex.vertex(6));
  REQUIRE(p14x25.has_value());
  CHECK(p14x25 == p14x36);
  CHECK(p14x25 == p25x36);
  CHECK(!is_generic(hex));
}

TEST_CASE("random generic polygons") {
  SUBCASE("triangles are trivially generic") {
    const PolygonSpec tri = random_generic_polygon(3, 5);
    CHECK(tri.n() == 3);
    CHECK(is_generic(tri));
  }
  SUBCASE("hexagon has one crossing per 4-subset of vertices") {
    const PolygonSpec hex = random_generic_polygon(6, 5);
    const auto crossings = diagonal_crossings(hex);
    CHECK(crossings.size() == 15);  // C(6,4)
    for (const auto& [p, through] : crossings) {
      (void)p;
      CHECK(through.size() == 2);
    }
  }
  SUBCASE("crossing count is C(n,4) for n = 5..8") {
    for (int n = 5; n <= 8; ++n) {
      const PolygonSpec poly = random_generic_polygon(n, 17);
      const long long expect =
          static_cast<long long>(n) * (n - 1) * (n - 2) * (n - 3) / 24;
      CHECK(static_cast<long long>(diagonal_crossings(poly).size()) == expect);
    }
  }
  SUBCASE("deterministic in (n, seed)") {
    const PolygonSpec a = random_generic_polygon(7, 99);
    const PolygonSpec b = random_generic_polygon(7, 99);
    const PolygonSpec c = random_generic_polygon(7, 100);
    CHECK(a.vertices == b.vertices);
    CHECK(a.vertices != c.vertices);
  }
  SUBCASE("output satisfies its own postconditions") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const PolygonSpec poly = random_generic_polygon(6, seed);
      CHECK(is_strictly_convex_acw(poly.vertices));
      CHECK(is_generic(poly));
    }
  }
  SUBCASE("n < 3 is rejected") {
    CHECK_THROWS_AS((void)random_generic_polygon(2, 1), BadInput);
  }
}
