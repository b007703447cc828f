#pragma once

#include "polyreg/chord_arrangement.hpp"

#include <cstdint>

namespace polyreg {

// Builds a generic convex anticlockwise polygon containing a region whose
// cycle is exactly c. Vertices are placed on rays through an interior anchor,
// one ray per written position with strictly increasing line angles; the
// second row of the decomposition takes the opposite ray. The result is
// certified by region enumeration before it is returned. Deterministic in
// (c, seed); throws RetryExhausted when the budget runs out and BadInput when
// c is not two-standard consecutive.
PolygonSpec realize_cycle(const CycleN& c, std::uint64_t seed);

struct RealizationSweep {
  int n = 0;
  std::uint64_t seed = 0;
  int total = 0;
  int realized = 0;
};

// Realizes every two-standard consecutive n-cycle; any single failure throws
// with the offending cycle in the message.
RealizationSweep realization_sweep(int n, std::uint64_t seed);

}  // namespace polyreg
