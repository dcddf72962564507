#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "chordkit/diagram.hpp"

namespace chordkit {

// Exact counts can exceed 64 bits well inside the ranges we care about, so
// they are carried as GMP integers throughout.
using BigCount = mpz_class;

// Streams every diagram on n chords whose minimum chord length is >= k, in
// lexicographic order of the canonical chord list. The search matches the
// smallest free position first and prunes any partial matching whose free
// positions cannot be completed: with free positions f_1 < ... < f_2m, a
// completion with all lengths >= k exists iff f_{m+t} - f_t >= k for every t.
class DiagramEnumerator {
 public:
  DiagramEnumerator(int n, int k);  // throws DomainError unless n, k >= 1

  // Next diagram, or nullopt once the class is exhausted.
  std::optional<ChordDiagram> next();

 private:
  bool feasible() const;

  int n_ = 0;
  int k_ = 0;
  std::vector<char> used_;     // index 1..2n
  std::vector<Chord> stack_;   // chords in order of ascending start
  bool started_ = false;
  bool exhausted_ = false;
};

// Convenience: the full class as a sorted vector. Intended for small n.
std::vector<ChordDiagram> enumerate_all(int n, int k);

// Enumeration ceiling used by the brute-force counting oracle; the
// CHORDKIT_ORACLE_CEILING environment variable overrides the default of 8.
int oracle_ceiling();

// Counts by explicit enumeration. Refuses n beyond `ceiling` (the DP counter
// is the tool for large sizes).
BigCount count_brute(int n, int k, int ceiling = oracle_ceiling());

}  // namespace chordkit
