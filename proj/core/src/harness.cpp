#include "polyreg/harness.hpp"

#include "polyreg/error.hpp"
#include "polyreg/rng.hpp"

#include <algorithm>
#include <map>

namespace polyreg {

namespace {

CycleN cyc(std::vector<int> seq) { return CycleN::canonicalize(std::move(seq)); }

void add_violation(std::vector<std::string>* out, const std::string& message) {
  if (out) out->push_back(message);
}

}  // namespace

const CycleN& special_cycle_7() {
  static const CycleN c = cyc({1, 5, 2, 6, 3, 7, 4});
  return c;
}

const std::pair<CycleN, CycleN>& exclusive_pair_6() {
  static const std::pair<CycleN, CycleN> p{cyc({1, 4, 5, 2, 3, 6}), cyc({1, 2, 5, 6, 3, 4})};
  return p;
}

const std::vector<std::pair<CycleN, CycleN>>& exclusive_pairs_7() {
  static const std::vector<std::pair<CycleN, CycleN>> pairs = {
      {cyc({1, 5, 2, 3, 6, 7, 4}), cyc({1, 2, 5, 6, 3, 4, 7})},
      {cyc({1, 5, 2, 6, 3, 4, 7}), cyc({1, 2, 3, 6, 7, 4, 5})},
      {cyc({1, 2, 6, 3, 7, 4, 5}), cyc({1, 5, 6, 2, 3, 4, 7})},
      {cyc({1, 5, 6, 2, 3, 7, 4}), cyc({1, 2, 6, 7, 3, 4, 5})},
      {cyc({1, 5, 2, 6, 7, 3, 4}), cyc({1, 4, 5, 6, 2, 3, 7})},
      {cyc({1, 4, 5, 2, 6, 3, 7}), cyc({1, 2, 5, 6, 7, 3, 4})},
      {cyc({1, 2, 5, 6, 3, 7, 4}), cyc({1, 4, 5, 2, 3, 6, 7})},
  };
  return pairs;
}

const std::vector<OrbitRep>& orbit_reps_8() {
  static const std::vector<OrbitRep> reps = {
      {cyc({1, 3, 4, 5, 6, 7, 8, 2}), true},
      {cyc({1, 4, 5, 6, 7, 8, 2, 3}), true},
      {cyc({1, 5, 6, 7, 8, 2, 3, 4}), true},
      {cyc({1, 6, 7, 8, 2, 3, 4, 5}), true},
      {cyc({1, 7, 8, 2, 3, 4, 5, 6}), true},
      {cyc({1, 4, 5, 6, 7, 2, 8, 3}), true},
      {cyc({1, 5, 6, 7, 2, 8, 3, 4}), true},
      {cyc({1, 6, 7, 2, 8, 3, 4, 5}), true},
      {cyc({1, 2, 5, 6, 3, 4, 7, 8}), false},
      {cyc({1, 2, 5, 6, 3, 7, 4, 8}), false},
      {cyc({1, 2, 5, 6, 7, 3, 4, 8}), false},
      {cyc({1, 2, 5, 6, 7, 3, 8, 4}), false},
      {cyc({1, 2, 5, 6, 3, 7, 8, 4}), false},
      {cyc({1, 2, 6, 3, 7, 4, 8, 5}), false},
      {cyc({1, 2, 6, 7, 3, 8, 4, 5}), false},
  };
  return reps;
}

ValidationReport census_report(int n) {
  if (n < 3 || n > 14) throw BadInput("census_report: n must be in 3..14");
  ValidationReport rep;
  rep.n = n;
  rep.formula_count = region_count_formula(n);
  for (CycleN& c : enumerate_two_standard(n)) {
    const Classification cls = classify(c);
    if (cls.verdict == Verdict::kDefinite)
      ++rep.definite_count;
    else
      ++rep.indefinite_count;
    rep.occurrence.push_back(CycleStats{std::move(c), cls.verdict, 0});
  }
  rep.census_count = static_cast<long long>(rep.occurrence.size());
  return rep;
}

ValidationReport empirical_validate(int n, int trials, std::uint64_t seed) {
  if (n < 4 || n > 9) throw BadInput("empirical_validate: n must be in 4..9");
  if (trials < 1) throw BadInput("empirical_validate: need trials >= 1");
  ValidationReport rep = census_report(n);
  rep.trials = trials;

  std::map<CycleN, int> stats_index;
  for (int k = 0; k < static_cast<int>(rep.occurrence.size()); ++k)
    stats_index.emplace(rep.occurrence[k].cycle, k);

  for (int trial = 0; trial < trials; ++trial) {
    const PolygonSpec poly = random_generic_polygon(n, mix_seed(seed, trial));
    const std::vector<RegionInfo> regions = enumerate_regions(poly);
    std::set<CycleN> occurring;
    for (const RegionInfo& r : regions) occurring.insert(r.cycle);

    if (static_cast<long long>(regions.size()) != rep.formula_count)
      rep.violations.push_back("trial " + std::to_string(trial) + ": " +
                               std::to_string(regions.size()) + " regions, formula says " +
                               std::to_string(rep.formula_count));
    if (occurring.size() != regions.size())
      rep.violations.push_back("trial " + std::to_string(trial) + ": region cycles not distinct");

    for (const CycleN& c : occurring) ++rep.occurrence[stats_index.at(c)].present_in;
    for (const CycleStats& s : rep.occurrence) {
      if (s.verdict == Verdict::kDefinite && !occurring.count(s.cycle))
        rep.violations.push_back("trial " + std::to_string(trial) + ": definite cycle " +
                                 s.cycle.to_string() + " absent");
    }
  }

  for (const CycleStats& s : rep.occurrence) {
    if (s.verdict != Verdict::kIndefinite) continue;
    if (s.present_in == trials)
      rep.violations.push_back("indefinite cycle " + s.cycle.to_string() +
                               " present in every sampled polygon (no absence witness)");
    if (s.present_in == 0) {
      try {
        realize_cycle(s.cycle, mix_seed(seed, 0xABCu));
      } catch (const std::exception& e) {
        rep.violations.push_back("indefinite cycle " + s.cycle.to_string() +
                                 ": no presence witness (" + e.what() + ")");
      }
    }
  }
  return rep;
}

bool exclusivity_check(int n, int trials, std::uint64_t seed,
                       std::vector<std::string>* violations) {
  if (n != 6 && n != 7) throw BadInput("exclusivity_check: n must be 6 or 7");
  std::vector<std::pair<CycleN, CycleN>> pairs;
  if (n == 6)
    pairs.push_back(exclusive_pair_6());
  else
    pairs = exclusive_pairs_7();

  bool ok = true;
  for (const auto& [a, b] : pairs) {
    if (classify(a).verdict != Verdict::kIndefinite ||
        classify(b).verdict != Verdict::kIndefinite) {
      ok = false;
      add_violation(violations,
                    "pair " + a.to_string() + " / " + b.to_string() + " not both indefinite");
    }
  }

  for (int trial = 0; trial < trials; ++trial) {
    const PolygonSpec poly = random_generic_polygon(n, mix_seed(seed, trial));
    const std::set<CycleN> occurring = occurring_cycles(poly);
    for (const auto& [a, b] : pairs) {
      const int present = static_cast<int>(occurring.count(a)) + static_cast<int>(occurring.count(b));
      if (present == 2) {
        ok = false;
        add_violation(violations, "trial " + std::to_string(trial) + ": pair " + a.to_string() +
                                      " / " + b.to_string() + " co-present");
      } else if (present == 0) {
        ok = false;
        add_violation(violations, "trial " + std::to_string(trial) + ": pair " + a.to_string() +
                                      " / " + b.to_string() + " has no member present");
      }
    }
  }
  return ok;
}

bool orbit_audit(int n, std::vector<std::string>* violations) {
  if (n != 8) throw BadInput("orbit_audit: only n = 8 is tabulated");
  bool ok = true;

  std::vector<std::set<CycleN>> orbits;
  std::set<CycleN> assigned;
  for (const CycleN& c : enumerate_two_standard(8)) {
    if (assigned.count(c)) continue;
    std::set<CycleN> orbit = cyclic_relabel_orbit(c);
    assigned.insert(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }

  if (orbits.size() != 15) {
    ok = false;
    add_violation(violations, "expected 15 orbits, found " + std::to_string(orbits.size()));
  }
  int distance_two_orbits = 0;
  int indefinite_orbits = 0;
  for (const auto& orbit : orbits) {
    if (orbit.size() != 8) {
      ok = false;
      add_violation(violations, "orbit of " + orbit.begin()->to_string() + " has size " +
                                    std::to_string(orbit.size()));
      continue;
    }
    const bool all_distance_two =
        std::all_of(orbit.begin(), orbit.end(),
                    [](const CycleN& c) { return diagonal_distance(c).is_two(); });
    const bool all_indefinite =
        std::all_of(orbit.begin(), orbit.end(), [](const CycleN& c) {
          return classify(c).verdict == Verdict::kIndefinite;
        });
    if (all_distance_two)
      ++distance_two_orbits;
    else if (all_indefinite)
      ++indefinite_orbits;
    else {
      ok = false;
      add_violation(violations, "orbit of " + orbit.begin()->to_string() + " is of mixed character");
    }
  }
  if (distance_two_orbits != 8 || indefinite_orbits != 7) {
    ok = false;
    add_violation(violations, "orbit split " + std::to_string(distance_two_orbits) + "+" +
                                  std::to_string(indefinite_orbits) + ", expected 8+7");
  }

  // Each tabulated representative must land in its own orbit with the stated
  // character.
  std::set<int> hit;
  for (const OrbitRep& rep : orbit_reps_8()) {
    int found = -1;
    for (int k = 0; k < static_cast<int>(orbits.size()); ++k)
      if (orbits[k].count(rep.rep)) found = k;
    if (found < 0) {
      ok = false;
      add_violation(violations, "representative " + rep.rep.to_string() + " not in any orbit");
      continue;
    }
    if (hit.count(found)) {
      ok = false;
      add_violation(violations, "representative " + rep.rep.to_string() + " repeats an orbit");
    }
    hit.insert(found);
    const bool rep_distance_two = diagonal_distance(rep.rep).is_two();
    if (rep_distance_two != rep.distance_two) {
      ok = false;
      add_violation(violations, "representative " + rep.rep.to_string() + " has wrong character");
    }
  }
  if (hit.size() != orbits.size()) {
    ok = false;
    add_violation(violations, "representatives cover " + std::to_string(hit.size()) + " of " +
                                  std::to_string(orbits.size()) + " orbits");
  }
  return ok;
}

bool extension_audit(int n, std::vector<std::string>* violations) {
  if (n != 8 && n != 9) throw BadInput("extension_audit: n must be 8 or 9");
  const int m = n - 1;
  bool ok = true;

  for (const CycleN& base : enumerate_two_standard(m)) {
    if (!diagonal_distance(base).is_two()) continue;

    // Witness pairs {i-1, i+1} for i in 3..m-2 that are written-adjacent.
    std::vector<std::pair<int, int>> witnesses;
    for (int i = 3; i <= m - 2; ++i) {
      const int u = i - 1, v = i + 1;
      const int pu = base.position_of(u), pv = base.position_of(v);
      if ((pu + 1) % m == pv || (pv + 1) % m == pu) witnesses.emplace_back(u, v);
    }
    if (witnesses.empty()) continue;

    for (int slot = 1; slot <= m; ++slot) {
      std::vector<int> seq = base.entries();
      seq.insert(seq.begin() + slot, n);
      const CycleN extended = CycleN::canonicalize(std::move(seq));
      if (!is_two_standard(extended)) continue;

      bool witness_survives = false;
      for (const auto& [u, v] : witnesses) {
        const int pu = extended.position_of(u), pv = extended.position_of(v);
        if ((pu + 1) % n == pv || (pv + 1) % n == pu) witness_survives = true;
      }
      if (!witness_survives) continue;

      if (!diagonal_distance(extended).is_two()) {
        ok = false;
        add_violation(violations, "counterexample: " + base.to_string() + " + " +
                                      std::to_string(n) + " at slot " + std::to_string(slot) +
                                      " gives " + extended.to_string() +
                                      " without distance two");
      }
    }
  }
  return ok;
}

}  // namespace polyreg
