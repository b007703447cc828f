#pragma once

#include "polyreg/cycle.hpp"
#include "polyreg/polygon.hpp"

#include <set>
#include <vector>

namespace polyreg {

// Planar subdivision of the polygon interior by all sides and diagonals, as
// a half-edge structure. Node ids 0..n-1 are the polygon vertices (label k
// at id k-1); crossing nodes follow. Every face is traced anticlockwise
// (interior on the left); the single clockwise loop is the outer face.
struct ChordArrangement {
  struct HalfEdge {
    int origin = -1;  // node id
    int target = -1;
    int twin = -1;
    int next = -1;    // next boundary edge of the face on the left
    int chord = -1;   // index into chords
    int face = -1;
  };

  int n = 0;
  std::vector<Point2> nodes;
  std::vector<Chord> chords;            // all sides and diagonals
  std::vector<HalfEdge> half_edges;
  std::vector<std::vector<int>> faces;  // half-edge loops
  std::vector<int> bounded_faces;       // ascending face ids, outer excluded
  int outer_face = -1;

  int crossing_count() const { return static_cast<int>(nodes.size()) - n; }
  int node_degree(int node) const;
};

long long region_count_formula(int n);

// Splits every chord at its crossings, sorts the edge ring at every node by
// exact angle and stitches faces. Throws NonGeneric when three chords pass
// through one interior point, BadInput when the boundary is not a simple
// strictly convex anticlockwise polygon.
ChordArrangement build_arrangement(const PolygonSpec& poly);

struct RegionInfo {
  int face_id = -1;
  Point2 representative;  // vertex centroid; faces are convex
  CycleN cycle;
  Classification classification;
  int side_count = 0;
};

std::vector<RegionInfo> enumerate_regions(const ChordArrangement& arr);
std::vector<RegionInfo> enumerate_regions(const PolygonSpec& poly);

std::set<CycleN> occurring_cycles(const PolygonSpec& poly);

// Checks that across every interior edge lying on chord P_iP_j the two face
// cycles differ exactly by transposing i and j, and that i, j are
// written-adjacent in both cycles.
bool neighbor_swap_check(const ChordArrangement& arr, const std::vector<RegionInfo>& regions);

}  // namespace polyreg
