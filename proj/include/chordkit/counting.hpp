#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chordkit/enumeration.hpp"

namespace chordkit {

// Instrumentation for the sweep DP, mostly so tests can pin down the state
// budget: `transitions` counts attempted (state, branch) pairs.
struct DpStats {
  std::uint64_t transitions = 0;
  std::size_t peak_states = 0;
};

// Number of diagrams on n chords with every chord length >= k, by a
// left-to-right sweep over the 2n positions. A state remembers which of the
// previous k-1 positions opened a chord (recency bitmask) plus the number of
// older open chords, which are exactly the ones a new position may close.
// Reachable states stay sparse, so they live in a hash map keyed by
// (mask, open). Throws DomainError for n < 1, k < 1, or k > 65 (the recency
// mask is kept in a 64-bit word; counts that far out are astronomically
// large anyway).
BigCount count_dp(int n, int k, DpStats* stats = nullptr);

// Table of counts for 1 <= k <= n <= max_n; cells with k > n are not stored
// (they are zero by definition) but at() serves them as zero.
class CountTable {
 public:
  explicit CountTable(int max_n);

  int max_n() const { return max_n_; }
  const BigCount& at(int n, int k) const;  // throws DomainError out of range
  void set(int n, int k, BigCount value);

  // CSV: header "k,1,2,...,max_n", one row per k, counts as decimal strings.
  std::string to_csv() const;
  // JSON: array of {"n": ..., "k": ..., "count": "<decimal>"}; counts are
  // strings so no consumer has to parse large integer literals.
  std::string to_json() const;

 private:
  int max_n_ = 0;
  std::map<std::pair<int, int>, BigCount> entries_;  // (n, k), k <= n only
};

CountTable build_table(int max_n);

// Counts for fixed k and n = k, k+1, ..., max_n (the diagonal-start row used
// by the recurrence tooling). Throws DomainError when max_n < k.
std::vector<BigCount> row_sequence(int k, int max_n);

}  // namespace chordkit
