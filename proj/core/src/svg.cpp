#include "polyreg/svg.hpp"

#include <algorithm>
#include <sstream>

namespace polyreg {

namespace {

constexpr int kView = 1000;
constexpr int kMargin = 40;
constexpr int kDigits = 8;

struct Mapper {
  Rational min_x, min_y, scale;

  std::string x(const Rational& v) const {
    return to_decimal_string(kMargin + scale * (v - min_x), kDigits);
  }
  // SVG y axis points down.
  std::string y(const Rational& v) const {
    return to_decimal_string(kView - (kMargin + scale * (v - min_y)), kDigits);
  }
};

Mapper fit(const std::vector<Point2>& nodes) {
  Rational min_x = nodes[0].x, max_x = nodes[0].x;
  Rational min_y = nodes[0].y, max_y = nodes[0].y;
  for (const Point2& p : nodes) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  Rational extent = std::max(max_x - min_x, max_y - min_y);
  if (extent == 0) extent = 1;
  return Mapper{min_x, min_y, Rational(kView - 2 * kMargin) / extent};
}

}  // namespace

std::string arrangement_svg(const ChordArrangement& arr, const std::vector<RegionInfo>& regions,
                            bool cycle_labels, const CycleN* highlight) {
  const Mapper m = fit(arr.nodes);
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << kView << " " << kView
      << "\">\n";

  for (const RegionInfo& r : regions) {
    const char* fill = r.classification.verdict == Verdict::kIndefinite ? "#f4b6ad" : "#b9d3f2";
    if (highlight && r.cycle == *highlight) fill = "#f2e394";
    out << "  <polygon fill=\"" << fill << "\" stroke=\"none\" points=\"";
    bool first = true;
    for (const int h : arr.faces[r.face_id]) {
      const Point2& p = arr.nodes[arr.half_edges[h].origin];
      if (!first) out << ' ';
      out << m.x(p.x) << ',' << m.y(p.y);
      first = false;
    }
    out << "\"/>\n";
  }

  for (const Chord& c : arr.chords) {
    const Point2& a = arr.nodes[c.i - 1];
    const Point2& b = arr.nodes[c.j - 1];
    out << "  <line x1=\"" << m.x(a.x) << "\" y1=\"" << m.y(a.y) << "\" x2=\"" << m.x(b.x)
        << "\" y2=\"" << m.y(b.y) << "\" stroke=\"#333333\" stroke-width=\""
        << (is_side(c, arr.n) ? "2.5" : "1") << "\"/>\n";
  }

  if (cycle_labels) {
    for (const RegionInfo& r : regions) {
      out << "  <text x=\"" << m.x(r.representative.x) << "\" y=\"" << m.y(r.representative.y)
          << "\" font-size=\"9\" text-anchor=\"middle\">" << r.cycle.to_string() << "</text>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace polyreg
