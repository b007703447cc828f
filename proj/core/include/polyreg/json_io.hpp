#pragma once

#include "polyreg/chord_arrangement.hpp"
#include "polyreg/harness.hpp"
#include "polyreg/point_arrangement.hpp"

#include <string>

namespace polyreg {

// Polygon object { "n": int, "vertices": [[x_num, x_den, y_num, y_den], ...] }
// with decimal strings in lowest terms, listed anticlockwise.
std::string polygon_to_json(const PolygonSpec& poly);
PolygonSpec polygon_from_json(const std::string& text);

// Same vertex encoding without the convexity requirement.
std::string points_to_json(const std::vector<Point2>& points);
PointArrangement arrangement_from_json(const std::string& text);

// Region report; embeds the polygon so the report re-ingests as a polygon.
std::string region_report_to_json(const PolygonSpec& poly,
                                  const std::vector<RegionInfo>& regions);

std::string validation_report_to_json(const ValidationReport& report);

}  // namespace polyreg
