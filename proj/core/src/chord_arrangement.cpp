#include "polyreg/chord_arrangement.hpp"

#include "polyreg/error.hpp"
#include "polyreg/point_arrangement.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace polyreg {

int ChordArrangement::node_degree(int node) const {
  int deg = 0;
  for (const HalfEdge& h : half_edges) deg += h.origin == node;
  return deg;
}

long long region_count_formula(int n) {
  const long long a = n - 1;
  const long long b = n - 2;
  const long long c = static_cast<long long>(n) * n - 3LL * n + 12;
  return a * b * c / 24;  // always an integer
}

namespace {

// The boundary makes exactly one full turn: with all turns strictly left,
// the edge directions wrap past the +x axis exactly once. Rules out
// all-left-turn star traversals that are not simple polygons.
bool single_winding(const std::vector<Point2>& vertices) {
  const int n = static_cast<int>(vertices.size());
  int wraps = 0;
  for (int k = 0; k < n; ++k) {
    const Point2 e0 = vertices[(k + 1) % n] - vertices[k];
    const Point2 e1 = vertices[(k + 2) % n] - vertices[(k + 1) % n];
    wraps += cmp_full_angle(e0, e1) > 0;
  }
  return wraps == 1;
}

}  // namespace

ChordArrangement build_arrangement(const PolygonSpec& poly) {
  const int n = poly.n();
  if (!is_strictly_convex_acw(poly.vertices))
    throw BadInput("build_arrangement: polygon is not strictly convex anticlockwise");
  if (!single_winding(poly.vertices))
    throw BadInput("build_arrangement: polygon boundary is not simple");

  ChordArrangement arr;
  arr.n = n;
  arr.chords = all_chords(n);
  arr.nodes = poly.vertices;

  std::map<Point2, int, Point2Less> node_id;
  for (int k = 0; k < n; ++k) node_id.emplace(arr.nodes[k], k);

  std::map<Chord, int> chord_index;
  for (int c = 0; c < static_cast<int>(arr.chords.size()); ++c)
    chord_index.emplace(arr.chords[c], c);

  std::vector<std::vector<int>> nodes_on_chord(arr.chords.size());
  for (const auto& [point, through] : diagonal_crossings(poly)) {
    if (through.size() > 2)
      throw NonGeneric("build_arrangement: three chords concur at an interior point");
    if (node_id.count(point))
      throw BadInput("build_arrangement: crossing coincides with a vertex");
    const int id = static_cast<int>(arr.nodes.size());
    arr.nodes.push_back(point);
    node_id.emplace(point, id);
    for (const Chord& c : through) nodes_on_chord[chord_index.at(c)].push_back(id);
  }

  // Split chords into edges between consecutive nodes along the chord.
  for (int c = 0; c < static_cast<int>(arr.chords.size()); ++c) {
    const Point2& a = poly.vertex(arr.chords[c].i);
    const Point2& b = poly.vertex(arr.chords[c].j);
    const Point2 dir = b - a;
    std::vector<int> line = nodes_on_chord[c];
    line.push_back(arr.chords[c].i - 1);
    line.push_back(arr.chords[c].j - 1);
    std::sort(line.begin(), line.end(), [&](int u, int v) {
      return sign_of(dot(arr.nodes[v] - arr.nodes[u], dir)) > 0;
    });
    for (std::size_t k = 0; k + 1 < line.size(); ++k) {
      const int h = static_cast<int>(arr.half_edges.size());
      arr.half_edges.push_back({line[k], line[k + 1], h + 1, -1, c, -1});
      arr.half_edges.push_back({line[k + 1], line[k], h, -1, c, -1});
    }
  }

  // Anticlockwise edge ring at every node.
  std::vector<std::vector<int>> ring(arr.nodes.size());
  for (int h = 0; h < static_cast<int>(arr.half_edges.size()); ++h)
    ring[arr.half_edges[h].origin].push_back(h);
  std::vector<int> ring_pos(arr.half_edges.size(), -1);
  for (auto& edges : ring) {
    std::sort(edges.begin(), edges.end(), [&](int g, int h) {
      const Point2 dg = arr.nodes[arr.half_edges[g].target] - arr.nodes[arr.half_edges[g].origin];
      const Point2 dh = arr.nodes[arr.half_edges[h].target] - arr.nodes[arr.half_edges[h].origin];
      return cmp_full_angle(dg, dh) < 0;
    });
    for (int k = 0; k < static_cast<int>(edges.size()); ++k) ring_pos[edges[k]] = k;
  }

  // Face-on-left successor: the ring predecessor of the twin at the target.
  for (int h = 0; h < static_cast<int>(arr.half_edges.size()); ++h) {
    const auto& edges = ring[arr.half_edges[h].target];
    const int k = ring_pos[arr.half_edges[h].twin];
    arr.half_edges[h].next = edges[(k + static_cast<int>(edges.size()) - 1) % edges.size()];
  }

  for (int h = 0; h < static_cast<int>(arr.half_edges.size()); ++h) {
    if (arr.half_edges[h].face != -1) continue;
    const int face = static_cast<int>(arr.faces.size());
    std::vector<int> loop;
    Rational doubled_area = 0;
    for (int e = h; arr.half_edges[e].face == -1; e = arr.half_edges[e].next) {
      arr.half_edges[e].face = face;
      loop.push_back(e);
      doubled_area += cross(arr.nodes[arr.half_edges[e].origin],
                            arr.nodes[arr.half_edges[e].target]);
    }
    if (doubled_area > 0) {
      arr.bounded_faces.push_back(face);
    } else {
      if (arr.outer_face != -1)
        throw BadInput("build_arrangement: multiple outer faces; boundary is not simple");
      arr.outer_face = face;
    }
    arr.faces.push_back(std::move(loop));
  }
  return arr;
}

namespace {

bool strictly_inside_face(const ChordArrangement& arr, int face, const Point2& q) {
  for (const int h : arr.faces[face]) {
    if (orient(arr.nodes[arr.half_edges[h].origin], arr.nodes[arr.half_edges[h].target], q) != 1)
      return false;
  }
  return true;
}

// Interior point with short coordinates: the double-precision centroid
// snapped to a dyadic grid and verified exactly, falling back to the exact
// centroid for needle faces. Crossing coordinates carry large denominators,
// so anchoring the line cycle here instead of at the exact centroid keeps
// the angular comparisons cheap; any interior point yields the same cycle.
Point2 cheap_interior_point(const ChordArrangement& arr, int face, const Point2& centroid) {
  double cx = 0;
  double cy = 0;
  const auto& loop = arr.faces[face];
  for (const int h : loop) {
    cx += arr.nodes[arr.half_edges[h].origin].x.convert_to<double>();
    cy += arr.nodes[arr.half_edges[h].origin].y.convert_to<double>();
  }
  cx /= static_cast<double>(loop.size());
  cy /= static_cast<double>(loop.size());
  for (int bits = 16; bits <= 48; bits += 16) {
    const Point2 q{dyadic_from_double(cx, bits), dyadic_from_double(cy, bits)};
    if (strictly_inside_face(arr, face, q)) return q;
  }
  return centroid;
}

}  // namespace

std::vector<RegionInfo> enumerate_regions(const ChordArrangement& arr) {
  std::vector<RegionInfo> out;
  out.reserve(arr.bounded_faces.size());
  std::vector<Point2> polygon_vertices(arr.nodes.begin(), arr.nodes.begin() + arr.n);
  for (const int face : arr.bounded_faces) {
    const auto& loop = arr.faces[face];
    Point2 centroid{0, 0};
    for (const int h : loop) centroid = centroid + arr.nodes[arr.half_edges[h].origin];
    const Rational inv(1, static_cast<int>(loop.size()));
    centroid = inv * centroid;

    const Point2 anchor = cheap_interior_point(arr, face, centroid);
    CycleN cycle = CycleN::canonicalize(line_cycle_of(anchor, polygon_vertices));
    Classification cls = classify(cycle);
    out.push_back(RegionInfo{face, centroid, std::move(cycle), std::move(cls),
                             static_cast<int>(loop.size())});
  }
  return out;
}

std::vector<RegionInfo> enumerate_regions(const PolygonSpec& poly) {
  return enumerate_regions(build_arrangement(poly));
}

std::set<CycleN> occurring_cycles(const PolygonSpec& poly) {
  std::set<CycleN> out;
  for (const RegionInfo& r : enumerate_regions(poly)) out.insert(r.cycle);
  return out;
}

bool neighbor_swap_check(const ChordArrangement& arr, const std::vector<RegionInfo>& regions) {
  std::vector<int> region_of_face(arr.faces.size(), -1);
  for (int r = 0; r < static_cast<int>(regions.size()); ++r)
    region_of_face[regions[r].face_id] = r;

  const auto written_adjacent = [](const CycleN& c, int i, int j) {
    const int n = c.size();
    const int pi = c.position_of(i);
    const int pj = c.position_of(j);
    return (pi + 1) % n == pj || (pj + 1) % n == pi;
  };

  for (int h = 0; h < static_cast<int>(arr.half_edges.size()); ++h) {
    if (h > arr.half_edges[h].twin) continue;
    const int f1 = arr.half_edges[h].face;
    const int f2 = arr.half_edges[arr.half_edges[h].twin].face;
    if (f1 == arr.outer_face || f2 == arr.outer_face) continue;
    const Chord& ch = arr.chords[arr.half_edges[h].chord];
    const CycleN& c1 = regions[region_of_face[f1]].cycle;
    const CycleN& c2 = regions[region_of_face[f2]].cycle;
    if (!written_adjacent(c1, ch.i, ch.j) || !written_adjacent(c2, ch.i, ch.j)) return false;
    if (swap_adjacent(c1, ch.i, ch.j) != c2) return false;
  }
  return true;
}

}  // namespace polyreg
