#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "chordkit/errors.hpp"

namespace chordkit {

// One chord of a linear diagram. Endpoints are 1-based positions on the
// baseline and always satisfy start < end.
struct Chord {
  int start = 0;
  int end = 0;

  int length() const { return end - start; }

  friend bool operator==(const Chord&, const Chord&) = default;
  friend std::strong_ordering operator<=>(const Chord&, const Chord&) = default;
};

// A linear chord diagram: a perfect matching of {1, ..., 2n} into n chords.
// Chords are kept sorted by start index, which makes the representation (and
// the text form produced by to_text) canonical.
class ChordDiagram {
 public:
  // Validates that the endpoints are exactly {1, ..., 2n} and that each chord
  // runs left to right. Throws DomainError otherwise.
  explicit ChordDiagram(std::vector<Chord> chords);

  int size() const { return static_cast<int>(chords_.size()); }  // n
  int points() const { return 2 * size(); }                      // 2n
  const std::vector<Chord>& chords() const { return chords_; }

  // Chord whose right endpoint is `end`, or nullptr if no chord ends there.
  const Chord* find_chord_ending_at(int end) const;

  friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;
  friend std::strong_ordering operator<=>(const ChordDiagram&,
                                          const ChordDiagram&) = default;

 private:
  std::vector<Chord> chords_;
};

// Parses "s-e,s-e,..." (whitespace tolerant, chords in any order) into a
// diagram; n is inferred from the largest index. Throws ParseError on
// malformed tokens and DomainError subclasses naming the offending index when
// the endpoints are not exactly {1, ..., 2n}.
ChordDiagram parse_diagram(std::string_view text);

// Canonical text form: chords sorted by start, no spaces, e.g. "1-4,2-6,3-7,5-8".
std::string to_text(const ChordDiagram& d);

// Smallest end - start over all chords.
int min_chord_length(const ChordDiagram& d);

// True when every chord has length >= k, i.e. d lies in the class counted by
// count_dp(n, k).
bool is_in_min_class(const ChordDiagram& d, int k);

// Whether chord c strictly covers the index / the other chord (nesting).
bool covers(const Chord& c, int index);
bool covers(const Chord& c, const Chord& d);

// The split of {1, ..., 2n} into the k left positions, the 2(n-k) middle
// positions and the k right positions.
struct RegionSplit {
  int n = 0;
  int k = 0;

  int left_first() const { return 1; }
  int left_last() const { return k; }
  int middle_first() const { return k + 1; }
  int middle_last() const { return 2 * n - k; }
  int right_first() const { return 2 * n - k + 1; }
  int right_last() const { return 2 * n; }

  bool middle_empty() const { return n == k; }
  int middle_size() const { return 2 * (n - k); }

  bool in_left(int i) const { return 1 <= i && i <= k; }
  bool in_middle(int i) const { return k + 1 <= i && i <= 2 * n - k; }
  bool in_right(int i) const { return 2 * n - k + 1 <= i && i <= 2 * n; }
};

// Throws DomainError unless 1 <= k <= n.
RegionSplit region_split(int n, int k);

// Mid chords touch the middle region with at least one endpoint; side chords
// avoid it entirely. Both lists keep the start-sorted order of the diagram.
struct ChordClassification {
  std::vector<Chord> mid;
  std::vector<Chord> side;
};

ChordClassification classify(const ChordDiagram& d, int k);

// Structural facts about a diagram of minimum chord length >= k when
// n >= 3(n-k): no chord lies entirely inside the middle region, and exactly
// n-k chords start (resp. end) there. check_structural_lemmas measures these
// quantities; tests assert the guaranteed values.
struct LemmaReport {
  bool no_mid_mid_chord = false;
  int mid_starts = 0;
  int mid_ends = 0;
};

// Preconditions: 1 <= k <= n, every chord length >= k, and n >= 3(n-k).
// Throws DomainError when they fail.
LemmaReport check_structural_lemmas(const ChordDiagram& d, int k);

}  // namespace chordkit
