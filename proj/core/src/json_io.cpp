#include "polyreg/json_io.hpp"

#include "polyreg/error.hpp"

#include <json.hpp>

namespace polyreg {

namespace {

using nlohmann::json;

json point_to_json(const Point2& p) {
  return json::array({numer(p.x).str(), denom(p.x).str(), numer(p.y).str(), denom(p.y).str()});
}

std::vector<Point2> vertices_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("vertices"))
    throw BadInput("polygon json: expected an object with \"n\" and \"vertices\"");
  if (!j["n"].is_number_integer()) throw BadInput("polygon json: \"n\" must be an integer");
  const int n = j["n"].get<int>();
  const json& verts = j["vertices"];
  if (!verts.is_array() || static_cast<int>(verts.size()) != n)
    throw BadInput("polygon json: \"vertices\" must be an array of length n=" +
                   std::to_string(n));
  std::vector<Point2> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) {
    const json& v = verts[k];
    if (!v.is_array() || v.size() != 4 || !v[0].is_string() || !v[1].is_string() ||
        !v[2].is_string() || !v[3].is_string())
      throw BadInput("polygon json: vertex " + std::to_string(k + 1) +
                     " must be [x_num, x_den, y_num, y_den] strings");
    out.push_back({rational_from_strings(v[0].get<std::string>(), v[1].get<std::string>()),
                   rational_from_strings(v[2].get<std::string>(), v[3].get<std::string>())});
  }
  return out;
}

json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw BadInput(std::string("json parse error: ") + e.what());
  }
}

json polygon_body(const PolygonSpec& poly) {
  json j;
  j["n"] = poly.n();
  json verts = json::array();
  for (const Point2& p : poly.vertices) verts.push_back(point_to_json(p));
  j["vertices"] = verts;
  return j;
}

}  // namespace

std::string polygon_to_json(const PolygonSpec& poly) { return polygon_body(poly).dump(2); }

PolygonSpec polygon_from_json(const std::string& text) {
  return PolygonSpec{vertices_from_json(parse(text))};
}

std::string points_to_json(const std::vector<Point2>& points) {
  return polygon_body(PolygonSpec{points}).dump(2);
}

PointArrangement arrangement_from_json(const std::string& text) {
  PointArrangement arr{vertices_from_json(parse(text))};
  validate_arrangement(arr);
  return arr;
}

std::string region_report_to_json(const PolygonSpec& poly,
                                  const std::vector<RegionInfo>& regions) {
  json j = polygon_body(poly);
  j["region_count"] = regions.size();
  json rs = json::array();
  for (const RegionInfo& r : regions) {
    json e;
    e["cycle"] = r.cycle.to_string();
    e["classification"] =
        r.classification.verdict == Verdict::kIndefinite ? "indefinite" : "definite";
    e["sides"] = r.side_count;
    e["representative"] = point_to_json(r.representative);
    rs.push_back(e);
  }
  j["regions"] = rs;
  return j.dump(2);
}

std::string validation_report_to_json(const ValidationReport& report) {
  json j;
  j["n"] = report.n;
  j["trials"] = report.trials;
  j["formula_count"] = report.formula_count;
  j["census_count"] = report.census_count;
  j["definite_count"] = report.definite_count;
  j["indefinite_count"] = report.indefinite_count;
  json occ = json::array();
  for (const CycleStats& s : report.occurrence) {
    json e;
    e["cycle"] = s.cycle.to_string();
    e["verdict"] = s.verdict == Verdict::kIndefinite ? "indefinite" : "definite";
    e["present_in"] = s.present_in;
    occ.push_back(e);
  }
  j["occurrence"] = occ;
  j["violations"] = report.violations;
  return j.dump(2);
}

}  // namespace polyreg
