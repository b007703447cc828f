#pragma once

#include "polyreg/cycle.hpp"
#include "polyreg/realize.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace polyreg {

struct CycleStats {
  CycleN cycle;
  Verdict verdict = Verdict::kDefinite;
  int present_in = 0;  // sampled polygons containing the cycle
};

struct ValidationReport {
  int n = 0;
  int trials = 0;
  long long formula_count = 0;   // regions per generic polygon
  long long census_count = 0;    // two-standard consecutive cycles
  int definite_count = 0;
  int indefinite_count = 0;
  std::vector<CycleStats> occurrence;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Combinatorial tabulation: census, region formula, definite/indefinite split.
ValidationReport census_report(int n);

// Samples `trials` seeded generic polygons and checks, per polygon, that the
// region count matches the formula and every definite cycle occurs; across
// polygons, that every indefinite cycle is absent somewhere and has a
// presence witness (sampled or constructed via realize_cycle).
ValidationReport empirical_validate(int n, int trials, std::uint64_t seed);

// n = 6 or 7: over sampled polygons, no mutually exclusive pair is ever
// co-present and exactly one member of each pair is present.
bool exclusivity_check(int n, int trials, std::uint64_t seed,
                       std::vector<std::string>* violations = nullptr);

// n = 8: the census splits into 15 relabel orbits of size 8; 8 orbits are
// distance-two throughout, 7 are indefinite throughout, and the transcribed
// representatives land one per orbit with the stated character.
bool orbit_audit(int n, std::vector<std::string>* violations = nullptr);

// n = 8 or 9: exhaustively extends every distance-two (n-1)-cycle by n and
// asserts distance two whenever a qualifying witness pair stays adjacent.
bool extension_audit(int n, std::vector<std::string>* violations = nullptr);

// Transcribed data used by the audits.
const CycleN& special_cycle_7();
const std::pair<CycleN, CycleN>& exclusive_pair_6();
const std::vector<std::pair<CycleN, CycleN>>& exclusive_pairs_7();

struct OrbitRep {
  CycleN rep;
  bool distance_two = false;  // otherwise an indefinite orbit
};
const std::vector<OrbitRep>& orbit_reps_8();

}  // namespace polyreg
