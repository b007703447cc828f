#include "polyreg/cycle.hpp"

#include "polyreg/error.hpp"

#include <algorithm>
#include <sstream>

namespace polyreg {

CycleN::CycleN(std::vector<int> entries) : entries_(std::move(entries)) {
  pos_.assign(entries_.size() + 1, -1);
  for (int p = 0; p < static_cast<int>(entries_.size()); ++p) pos_[entries_[p]] = p;
}

CycleN CycleN::canonicalize(std::vector<int> seq) {
  const int n = static_cast<int>(seq.size());
  if (n == 0) throw BadInput("cycle: empty sequence");
  std::vector<char> seen(n + 1, 0);
  for (int k = 0; k < n; ++k) {
    const int v = seq[k];
    if (v < 1 || v > n)
      throw BadInput("cycle entry " + std::to_string(k + 1) + ": value " + std::to_string(v) +
                     " out of range 1.." + std::to_string(n));
    if (seen[v])
      throw BadInput("cycle entry " + std::to_string(k + 1) + ": duplicate value " +
                     std::to_string(v));
    seen[v] = 1;
  }
  std::rotate(seq.begin(), std::find(seq.begin(), seq.end(), 1), seq.end());
  return CycleN(std::move(seq));
}

CycleN CycleN::from_string(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> seq;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      seq.push_back(v);
    } catch (const std::exception&) {
      throw BadInput("cycle entry " + std::to_string(seq.size() + 1) + ": expected integer, got \"" +
                     tok + "\"");
    }
  }
  return canonicalize(std::move(seq));
}

CycleN CycleN::identity(int n) {
  std::vector<int> seq(n);
  for (int k = 0; k < n; ++k) seq[k] = k + 1;
  return CycleN(std::move(seq));
}

std::string CycleN::to_string() const {
  std::string out;
  for (int p = 0; p < size(); ++p) {
    if (p) out += ' ';
    out += std::to_string(entries_[p]);
  }
  return out;
}

StandardDecomposition standard_decomposition(const CycleN& c) {
  // Scan 2..n: k extends the current row iff it is written right of k-1,
  // otherwise k starts a new row.
  const int n = c.size();
  StandardDecomposition d;
  int row_start = 1;
  for (int k = 2; k <= n; ++k) {
    if (c.position_of(k) < c.position_of(k - 1)) {
      d.rows.emplace_back(row_start, k - 1);
      row_start = k;
    }
  }
  d.rows.emplace_back(row_start, n);
  return d;
}

bool is_two_standard(const CycleN& c) { return standard_decomposition(c).row_count() == 2; }

std::vector<CycleN> enumerate_two_standard(int n) {
  if (n < 3) throw BadInput("enumerate_two_standard: need n >= 3");
  // A two-row cycle with split l interleaves the increasing runs 1..l and
  // l+1..n, written starting at 1, with l+1 somewhere left of l. Slot masks
  // over the n-1 written positions after the leading 1 enumerate these; the
  // one mask putting the whole second run at the end is the identity cycle.
  std::vector<CycleN> out;
  for (unsigned mask = 1; mask + 1 < (1u << (n - 1)); ++mask) {
    const int second = __builtin_popcount(mask);
    const int l = n - second;
    if (l < 2) continue;
    if (mask == ((1u << second) - 1) << (n - 1 - second)) continue;  // identity
    std::vector<int> seq(n);
    seq[0] = 1;
    int low = 2, high = l + 1;
    for (int slot = 0; slot < n - 1; ++slot)
      seq[slot + 1] = (mask >> slot) & 1u ? high++ : low++;
    out.push_back(CycleN::canonicalize(std::move(seq)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool labels_cyclically_consecutive(int lo, int hi, int n) {
  return hi - lo == 1 || (lo == 1 && hi == n);
}

}  // namespace

DiagonalDistance diagonal_distance(const CycleN& c) {
  if (!is_two_standard(c))
    throw BadInput("diagonal_distance: cycle is not two-standard consecutive: " + c.to_string());
  const int n = c.size();

  // A pair qualifies when the chord P_uP_v could be a diagonal side of the
  // region: u, v written-adjacent, not a polygon side, and transposing them
  // leaves a two-standard consecutive cycle (the would-be neighbor's cycle).
  // Pairs in different rows always pass the swap test; the wrap pair
  // containing 1 can pass it as well.
  std::vector<std::pair<int, int>> qualifying;
  for (int p = 0; p < n; ++p) {
    const int u = c.at(p);
    const int v = c.at((p + 1) % n);
    const int lo = std::min(u, v);
    const int hi = std::max(u, v);
    if (labels_cyclically_consecutive(lo, hi, n)) continue;  // a polygon side
    if (!is_two_standard(swap_adjacent(c, lo, hi))) continue;
    qualifying.emplace_back(lo, hi);
  }
  std::sort(qualifying.begin(), qualifying.end());

  DiagonalDistance out;
  for (const auto& [lo, hi] : qualifying) {
    const int dist = std::min(hi - lo, n - (hi - lo));
    if (!out.value || dist < *out.value) {
      out.value = dist;
      out.witness = {lo, hi};
    }
  }
  return out;
}

CycleN apply_move(int n, const MoveDerivation& move) {
  if (move.moved < 1 || move.moved > n) throw BadInput("apply_move: moved value out of range");
  const int prev = move.moved == 1 ? n : move.moved - 1;
  const int next = move.moved == n ? 1 : move.moved + 1;
  if (move.insert_after == move.moved || move.insert_after == prev)
    throw BadInput("apply_move: insertion slot must lie after moved+1 and before moved-1");

  std::vector<int> seq;
  seq.reserve(n);
  for (int k = 1; k < n; ++k) {
    const int v = (move.moved - 1 + k) % n + 1;  // moved+1, moved+2, ..., moved-1
    seq.push_back(v);
    if (v == move.insert_after) seq.push_back(move.moved);
  }
  if (static_cast<int>(seq.size()) != n) throw BadInput("apply_move: unknown insertion value");

  if (move.swapped) {
    const auto ip = std::find(seq.begin(), seq.end(), prev);
    const auto in = std::find(seq.begin(), seq.end(), next);
    std::iter_swap(ip, in);
  }
  return CycleN::canonicalize(std::move(seq));
}

std::set<CycleN> gen_distance_two(int n) {
  if (n < 5) throw BadInput("gen_distance_two: need n >= 5");
  std::set<CycleN> out;
  for (int moved = 1; moved <= n; ++moved) {
    for (int g = 1; g <= n - 2; ++g) {
      const int insert_after = (moved - 1 + g) % n + 1;  // skips only the original slot
      for (const bool swapped : {false, true})
        out.insert(apply_move(n, MoveDerivation{moved, insert_after, swapped}));
    }
  }
  return out;
}

std::string pattern_name(IndefinitePattern p) {
  return p == IndefinitePattern::k145236 ? "145236" : "125634";
}

std::optional<PatternWitness> contains_indefinite_pattern(const CycleN& c) {
  if (!is_two_standard(c))
    throw BadInput("contains_indefinite_pattern: cycle is not two-standard consecutive: " +
                   c.to_string());
  const int n = c.size();
  if (n < 6) return std::nullopt;

  static constexpr std::array<int, 6> kPatternA = {1, 4, 5, 2, 3, 6};
  static constexpr std::array<int, 6> kPatternB = {1, 2, 5, 6, 3, 4};

  std::array<int, 6> pos{};
  std::array<int, 6> vals{};
  std::array<int, 6> ranks{};
  std::array<int, 6> rotated{};
  for (pos[0] = 0; pos[0] < n - 5; ++pos[0])
    for (pos[1] = pos[0] + 1; pos[1] < n - 4; ++pos[1])
      for (pos[2] = pos[1] + 1; pos[2] < n - 3; ++pos[2])
        for (pos[3] = pos[2] + 1; pos[3] < n - 2; ++pos[3])
          for (pos[4] = pos[3] + 1; pos[4] < n - 1; ++pos[4])
            for (pos[5] = pos[4] + 1; pos[5] < n; ++pos[5]) {
              int min_at = 0;
              for (int t = 0; t < 6; ++t) {
                vals[t] = c.at(pos[t]);
                if (vals[t] < vals[min_at]) min_at = t;
              }
              for (int t = 0; t < 6; ++t) {
                int rank = 1;
                for (int s = 0; s < 6; ++s) rank += vals[s] < vals[t];
                ranks[t] = rank;
              }
              for (int t = 0; t < 6; ++t) rotated[t] = ranks[(min_at + t) % 6];
              if (rotated == kPatternA || rotated == kPatternB) {
                PatternWitness w;
                for (int t = 0; t < 6; ++t) w.positions[t] = pos[t] + 1;
                w.pattern = rotated == kPatternA ? IndefinitePattern::k145236
                                                 : IndefinitePattern::k125634;
                w.rotation = min_at;
                return w;
              }
            }
  return std::nullopt;
}

Classification classify(const CycleN& c) {
  const int n = c.size();
  Classification out;
  if (auto w = contains_indefinite_pattern(c)) {  // also validates two-standard
    out.verdict = Verdict::kIndefinite;
    out.pattern = *w;
    return out;
  }
  out.verdict = Verdict::kDefinite;

  static const std::vector<int> kSpecial7 = {1, 5, 2, 6, 3, 7, 4};
  if (n == 7 && c.entries() == kSpecial7) {
    out.special_case = true;
    return out;
  }

  for (int moved = 1; moved <= n; ++moved) {
    for (int g = 1; g <= n - 2; ++g) {
      const int insert_after = (moved - 1 + g) % n + 1;
      for (const bool swapped : {false, true}) {
        const MoveDerivation mv{moved, insert_after, swapped};
        if (apply_move(n, mv) == c) {
          out.move = mv;
          return out;
        }
      }
    }
  }
  throw std::logic_error("classify: pattern-free cycle without generator derivation: " +
                         c.to_string());
}

CycleN swap_adjacent(const CycleN& c, int i, int j) {
  const int n = c.size();
  if (i < 1 || i > n || j < 1 || j > n || i == j)
    throw BadInput("swap_adjacent: labels out of range");
  const int pi = c.position_of(i);
  const int pj = c.position_of(j);
  if ((pi + 1) % n != pj && (pj + 1) % n != pi)
    throw BadInput("swap_adjacent: " + std::to_string(i) + " and " + std::to_string(j) +
                   " are not cyclically adjacent in " + c.to_string());
  std::vector<int> seq = c.entries();
  std::swap(seq[pi], seq[pj]);
  return CycleN::canonicalize(std::move(seq));
}

bool contains_subcycle_ikj(const CycleN& c, int i, int j, int k) {
  const int n = c.size();
  if (!(1 <= i && i < j && j < k && k <= n))
    throw BadInput("contains_subcycle_ikj: need 1 <= i < j < k <= n");
  const int pi = c.position_of(i);
  const int dj = (c.position_of(j) - pi + n) % n;
  const int dk = (c.position_of(k) - pi + n) % n;
  return dk < dj;
}

CycleN relabel_shift(const CycleN& c) {
  const int n = c.size();
  std::vector<int> seq(n);
  for (int p = 0; p < n; ++p) seq[p] = c.at(p) % n + 1;
  return CycleN::canonicalize(std::move(seq));
}

std::set<CycleN> cyclic_relabel_orbit(const CycleN& c) {
  std::set<CycleN> orbit;
  CycleN cur = c;
  for (int k = 0; k < c.size(); ++k) {
    orbit.insert(cur);
    cur = relabel_shift(cur);
  }
  return orbit;
}

}  // namespace polyreg
