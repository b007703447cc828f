#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace polyreg {

// An n-cycle in one-line cyclic notation, rotation-canonical: the written
// form always starts with 1.
class CycleN {
 public:
  // Validates that seq is a permutation of 1..n and rotates it to start at 1.
  static CycleN canonicalize(std::vector<int> seq);

  // Whitespace separated integers, e.g. "1 4 5 2 3 6".
  static CycleN from_string(const std::string& text);

  static CycleN identity(int n);

  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const { return entries_; }
  int at(int pos) const { return entries_[pos]; }  // 0-based written position

  // 0-based written position of a value.
  int position_of(int value) const { return pos_[value]; }

  std::string to_string() const;

  friend bool operator==(const CycleN& a, const CycleN& b) { return a.entries_ == b.entries_; }
  friend bool operator!=(const CycleN& a, const CycleN& b) { return !(a == b); }
  friend bool operator<(const CycleN& a, const CycleN& b) { return a.entries_ < b.entries_; }

 private:
  explicit CycleN(std::vector<int> entries);

  std::vector<int> entries_;
  std::vector<int> pos_;  // pos_[value] = written position
};

// Partition of {1..n} into maximal consecutive integer blocks, each block
// reading left to right in increasing order within the cycle, with the
// number of blocks minimal. rows are inclusive [start, end] intervals.
struct StandardDecomposition {
  std::vector<std::pair<int, int>> rows;

  int row_count() const { return static_cast<int>(rows.size()); }
  // l: last element of the first row (meaningful for two-row structures).
  int first_row_end() const { return rows.front().second; }
};

StandardDecomposition standard_decomposition(const CycleN& c);

bool is_two_standard(const CycleN& c);

// All two-row consecutive-standard n-cycles, canonical, lexicographic.
// Cardinality 2^(n-1) - n.
std::vector<CycleN> enumerate_two_standard(int n);

// Minimum cyclic label distance over written-adjacent pairs that are not
// polygon sides and whose transposition is again two-standard consecutive
// (the pairs whose chord can be a diagonal side of the region). No
// qualifying pair leaves value empty.
struct DiagonalDistance {
  std::optional<int> value;
  std::optional<std::pair<int, int>> witness;  // {min, max} labels

  bool is_two() const { return value == 2; }
};

DiagonalDistance diagonal_distance(const CycleN& c);

// One generator move: take `moved` out of (1 2 ... n) on the circle and
// reinsert it directly after the value `insert_after`; optionally swap the
// now-adjacent neighbours moved-1 and moved+1 (cyclic values).
struct MoveDerivation {
  int moved = 0;
  int insert_after = 0;
  bool swapped = false;
};

CycleN apply_move(int n, const MoveDerivation& move);

// Every cycle reachable from (1 2 ... n) by a MoveDerivation, deduped.
// Equals the set of two-standard consecutive cycles of diagonal distance two.
std::set<CycleN> gen_distance_two(int n);

enum class IndefinitePattern { k145236, k125634 };

std::string pattern_name(IndefinitePattern p);

// Six written positions (1-based, increasing) whose values, reduced to ranks
// and rotated to start at the smallest, spell one of the two forbidden
// patterns. rotation is the rotation offset applied (0..5).
struct PatternWitness {
  std::array<int, 6> positions;
  IndefinitePattern pattern = IndefinitePattern::k145236;
  int rotation = 0;
};

std::optional<PatternWitness> contains_indefinite_pattern(const CycleN& c);

enum class Verdict { kDefinite, kIndefinite };

struct Classification {
  Verdict verdict = Verdict::kDefinite;
  std::optional<MoveDerivation> move;      // definite: generator evidence
  bool special_case = false;               // definite: the n=7 exception (1 5 2 6 3 7 4)
  std::optional<PatternWitness> pattern;   // indefinite: forbidden pattern evidence
};

// Definite iff no forbidden six-point pattern embeds in the cycle.
Classification classify(const CycleN& c);

// Transposes two written-adjacent values (the cycle across a region side).
CycleN swap_adjacent(const CycleN& c, int i, int j);

// True iff i, k, j appear in this cyclic order (i < j < k), i.e. the region
// with this cycle lies inside triangle P_i P_j P_k.
bool contains_subcycle_ikj(const CycleN& c, int i, int j, int k);

// Relabel every value by k -> (k mod n) + 1, then canonicalize.
CycleN relabel_shift(const CycleN& c);

// Orbit under iterated relabel_shift.
std::set<CycleN> cyclic_relabel_orbit(const CycleN& c);

}  // namespace polyreg
