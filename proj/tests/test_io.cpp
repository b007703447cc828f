#include "polyreg/json_io.hpp"
#include "polyreg/svg.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace polyreg;

TEST_CASE("rational helpers") {
  CHECK(rational_from_strings("4", "6") == Rational(2, 3));
  CHECK(rational_from_strings("-3", "9") == Rational(-1, 3));
  CHECK_THROWS_AS((void)rational_from_strings("12x", "5"), BadInput);
  CHECK_THROWS_AS((void)rational_from_strings("1", "0"), BadInput);
  CHECK_THROWS_AS((void)rational_from_strings("1", "-2"), BadInput);
  CHECK(to_decimal_string(Rational(1, 3), 5) == "0.33333");
  CHECK(to_decimal_string(Rational(-1, 2), 2) == "-0.50");
  CHECK(to_decimal_string(Rational(7), 0) == "7");
}

TEST_CASE("polygon json round trip") {
  for (std::uint64_t seed : {1, 2, 3}) {
    const PolygonSpec poly = random_generic_polygon(6, seed);
    const PolygonSpec back = polygon_from_json(polygon_to_json(poly));
    CHECK(back.vertices == poly.vertices);
    // serialization is canonical, so a second trip is byte identical
    CHECK(polygon_to_json(back) == polygon_to_json(poly));
  }
}

TEST_CASE("polygon json rejects malformed input") {
  CHECK_THROWS_AS((void)polygon_from_json("not json"), BadInput);
  CHECK_THROWS_AS((void)polygon_from_json("{\"n\": 3}"), BadInput);
  CHECK_THROWS_AS((void)polygon_from_json("{\"n\": 2, \"vertices\": [[\"0\",\"1\",\"0\",\"1\"]]}"),
                  BadInput);
  CHECK_THROWS_AS(
      (void)polygon_from_json(
          "{\"n\": 1, \"vertices\": [[\"0\",\"1\",\"0\"]]}"),
      BadInput);
}

TEST_CASE("region report embeds a polygon that re-ingests") {
  const PolygonSpec poly = random_generic_polygon(5, 9);
  const auto regions = enumerate_regions(poly);
  const std::string report = region_report_to_json(poly, regions);
  const PolygonSpec back = polygon_from_json(report);
  CHECK(back.vertices == poly.vertices);
  CHECK(region_report_to_json(back, enumerate_regions(back)) == report);
}

TEST_CASE("arrangement json validates general position") {
  const std::string collinear =
      "{\"n\": 3, \"vertices\": [[\"0\",\"1\",\"0\",\"1\"],[\"1\",\"1\",\"1\",\"1\"],"
      "[\"2\",\"1\",\"2\",\"1\"]]}";
  CHECK_THROWS_AS((void)arrangement_from_json(collinear), BadInput);
  const PointArrangement arr =
      arrangement_from_json(points_to_json({testsupport::int_point(0, 0),
                                            testsupport::int_point(4, 1),
                                            testsupport::int_point(2, 5)}));
  CHECK(arr.n() == 3);
}

TEST_CASE("svg rendering") {
  const PolygonSpec poly = random_generic_polygon(5, 4);
  const ChordArrangement arr = build_arrangement(poly);
  const auto regions = enumerate_regions(arr);
  const std::string svg = arrangement_svg(arr, regions, true);
  CHECK(svg.rfind("<svg", 0) == 0);
  std::size_t polygons = 0;
  for (std::size_t at = svg.find("<polygon"); at != std::string::npos;
       at = svg.find("<polygon", at + 1))
    ++polygons;
  CHECK(polygons == regions.size());
  CHECK(svg.find("<text") != std::string::npos);

  const std::string highlighted = arrangement_svg(arr, regions, false, &regions[0].cycle);
  CHECK(highlighted.find("#f2e394") != std::string::npos);
}
