#pragma once

#include <string>
#include <vector>

#include "chordkit/diagram.hpp"
#include "chordkit/enumeration.hpp"

namespace chordkit {

// The maps below realize the size-preserving correspondence between diagrams
// with minimum chord length >= k on n chords and those with minimum length
// >= k+1 on n+1 chords, which exists whenever n >= 3(n-k) and n >= k. A
// "side" chord avoids the middle region entirely; under those hypotheses the
// side chords all start among positions 1..k and end among the last k
// positions, and there are exactly 2k-n of them.

// Inserts one new point right before position k+1 and one right after
// position 2n-k, joined by a new chord: old index j maps to j for j <= k,
// j+1 for j <= 2n-k, and j+2 beyond; the new chord occupies (k+1, 2n-k+2).
// Requires min_chord_length(d) >= k.
ChordDiagram insert_middle_chord(const ChordDiagram& d, int k);

// Filled in by alpha for tests that pin down the swap count.
struct AlphaStats {
  int swaps = 0;
};

// insert_middle_chord, then repeatedly swap the new chord's start with the
// nearest side-chord start to its left until exactly i side starts remain on
// its left. Chord identity follows the end point: a swap exchanges the start
// positions of the two chords, both ends stay put. Side membership is fixed
// on the source diagram before insertion. Result has minimum length >= k+1
// and class index i. Preconditions: d in M_k^n, n >= 3(n-k), 0 <= i <= n-k.
ChordDiagram alpha(const ChordDiagram& d, int k, int i,
                   AlphaStats* stats = nullptr);

// Inverse direction. Let c be the chord ending at 2n-k+1, the first position
// after the middle region. Swap c's start with the nearest side start to its
// right until no side start lies right of it, then delete c's endpoints and
// renumber. Result has minimum length >= k-1 on n-1 chords. Preconditions:
// d in M_k^n, n >= k, n > 3(n-k) (strict).
ChordDiagram beta(const ChordDiagram& d, int k);

// Number of side-chord starts strictly left of the start of the chord ending
// at 2n-k+1. This splits the class M_k^n into the fibers that alpha hits.
// Same preconditions as beta.
int class_index(const ChordDiagram& d, int k);

struct TheoremCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // counts, or a witness diagram on failure
};

struct TheoremReport {
  int n = 0;
  int k = 0;
  bool exhaustive = false;
  bool passed = false;
  std::vector<TheoremCheck> checks;
};

// Count-level check of the product identity
//   |M_{k+1}^{n+1}| = (n-k+1) * |M_k^n|   (valid for n >= 3(n-k), n >= k).
TheoremReport verify_theorem_counts(int n, int k);

// Exhaustive check on the same cell: applies alpha for every source diagram
// and every class, and verifies image containment, class containment,
// pairwise disjointness, coverage of the whole target class, and both
// round-trip identities. Requires n+1 <= ceiling.
TheoremReport verify_theorem_exhaustive(int n, int k,
                                        int ceiling = oracle_ceiling());

std::string to_text(const TheoremReport& report);
std::string to_json(const TheoremReport& report);

}  // namespace chordkit
