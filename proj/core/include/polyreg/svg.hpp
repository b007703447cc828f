#pragma once

#include "polyreg/chord_arrangement.hpp"

#include <string>

namespace polyreg {

// Renders the subdivision into a 1000x1000 viewBox: faces filled by
// classification, all chords stroked, optional cycle labels at centroids.
// highlight, when set, singles out the face carrying that cycle.
std::string arrangement_svg(const ChordArrangement& arr, const std::vector<RegionInfo>& regions,
                            bool cycle_labels, const CycleN* highlight = nullptr);

}  // namespace polyreg
