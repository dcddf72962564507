#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chordkit/counting.hpp"

namespace chordkit {

using Rational = mpq_class;

// A linear recurrence with polynomial coefficients,
//   a_n = sum_{j=1..order} P_j(n) * a_{n-j},
// where P_j(n) = sum_{t=0..degree} coeffs[j-1][t] * n^t.
struct RecurrenceSpec {
  int order = 0;
  int degree = 0;
  std::vector<std::vector<Rational>> coeffs;  // [order][degree+1]

  Rational poly(int j, long n) const;  // P_j(n)

  bool operator==(const RecurrenceSpec&) const = default;
};

// JSON shape: {"order": r, "degree": d, "coeffs": [["p/q", ...], ...]}.
std::string spec_to_json(const RecurrenceSpec& spec);
RecurrenceSpec spec_from_json(const std::string& text);

// Scales a spec by a positive rational so all coefficients are integers with
// overall content 1. The relation a recurrence expresses is unchanged.
RecurrenceSpec normalize(RecurrenceSpec spec);

struct ResidualReport {
  bool passed = false;  // all residuals exactly zero
  // (n, a_n - sum_j P_j(n) a_{n-j}) for every applicable n.
  std::vector<std::pair<long, Rational>> residuals;
};

// Evaluates the residuals of `spec` over seq, where seq[0] is the value at
// n = offset. Throws DomainError when seq.size() <= spec.order.
ResidualReport check_recurrence(const RecurrenceSpec& spec,
                                const std::vector<BigCount>& seq, long offset);

enum class FitVerdict { fitted, none, underdetermined };

struct FitOutcome {
  FitVerdict verdict = FitVerdict::none;
  std::optional<RecurrenceSpec> spec;  // set iff verdict == fitted
  int nullity = 0;                     // set iff verdict == underdetermined
};

// Solves for a recurrence of the given order and degree over seq: the last
// `validation` usable equations are held out, the rest train the exact
// rational linear system. A unique solution is returned (normalized) only if
// the held-out residuals are all zero; an inconsistent or non-validating
// system yields `none`, a rank-deficient one `underdetermined`. Equations
// run over n = first_term + order .. last; first_term (default: the sequence
// start) says where the usable row begins, so rows padded with leading zeros
// can exclude them. Throws DomainError when fewer than
// order*(degree+1) + validation equations remain.
FitOutcome fit_recurrence(const std::vector<BigCount>& seq, long offset,
                          int order, int degree, int validation = 3,
                          std::optional<long> first_term = std::nullopt);

// Tries (order, degree) candidates in increasing order+degree (ties: smaller
// order first) and returns the first fitted spec, or `none`.
FitOutcome search_recurrence(const std::vector<BigCount>& seq, long offset,
                             int max_order, int max_degree, int validation = 3,
                             std::optional<long> first_term = std::nullopt);

// Reads "n,value" lines (optional header tolerated); requires consecutive n.
// Returns the sequence and its offset.
std::pair<std::vector<BigCount>, long> sequence_from_csv(const std::string& text);

}  // namespace chordkit
