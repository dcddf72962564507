#include "chordkit/recurrence.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

namespace chordkit {

namespace {

std::string rational_str(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_str();
}

Rational rational_from_str(const std::string& s) {
  Rational q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw DomainError("malformed rational '" + s + "'");
  q.canonicalize();
  return q;
}

// Bit size of numerator plus denominator; the elimination pivots on the
// smallest entry to keep intermediate fractions from swelling.
size_t rational_bits(const Rational& q) {
  return mpz_sizeinbase(q.get_num().get_mpz_t(), 2) +
         mpz_sizeinbase(q.get_den().get_mpz_t(), 2);
}

enum class SolveStatus { unique, underdetermined, inconsistent };

struct SolveResult {
  SolveStatus status = SolveStatus::inconsistent;
  std::vector<Rational> solution;
  int nullity = 0;
};

// Exact Gauss-Jordan elimination of A x = y.
SolveResult solve_exact(std::vector<std::vector<Rational>> rows, int unknowns) {
  const int m = static_cast<int>(rows.size());  // rows carry y appended
  std::vector<int> pivot_col_of_row;
  std::vector<bool> col_used(static_cast<size_t>(unknowns), false);

  int rank = 0;
  for (int col = 0; col < unknowns && rank < m; ++col) {
    int best = -1;
    size_t best_bits = 0;
    for (int r = rank; r < m; ++r) {
      if (rows[r][col] == 0) continue;
      const size_t bits = rational_bits(rows[r][col]);
      if (best < 0 || bits < best_bits) {
        best = r;
        best_bits = bits;
      }
    }
    if (best < 0) continue;
    std::swap(rows[static_cast<size_t>(rank)], rows[static_cast<size_t>(best)]);
    auto& prow = rows[static_cast<size_t>(rank)];
    const Rational inv = 1 / prow[static_cast<size_t>(col)];
    for (auto& v : prow) v *= inv;
    for (int r = 0; r < m; ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      const Rational factor = rows[r][col];
      for (int c = col; c <= unknowns; ++c)
        rows[r][c] -= factor * prow[static_cast<size_t>(c)];
    }
    pivot_col_of_row.push_back(col);
    col_used[static_cast<size_t>(col)] = true;
    ++rank;
  }

  for (int r = rank; r < m; ++r)
    if (rows[r][static_cast<size_t>(unknowns)] != 0)
      return {SolveStatus::inconsistent, {}, 0};

  SolveResult out;
  out.nullity = unknowns - rank;
  if (out.nullity > 0) {
    out.status = SolveStatus::underdetermined;
    return out;
  }
  out.status = SolveStatus::unique;
  out.solution.assign(static_cast<size_t>(unknowns), Rational(0));
  for (int r = 0; r < rank; ++r)
    out.solution[static_cast<size_t>(pivot_col_of_row[static_cast<size_t>(r)])] =
        rows[r][static_cast<size_t>(unknowns)];
  return out;
}

Rational residual_at(const RecurrenceSpec& spec, const std::vector<BigCount>& seq,
                     long offset, long n) {
  Rational acc(seq[static_cast<size_t>(n - offset)]);
  for (int j = 1; j <= spec.order; ++j)
    acc -= spec.poly(j, n) * Rational(seq[static_cast<size_t>(n - j - offset)]);
  return acc;
}

}  // namespace

Rational RecurrenceSpec::poly(int j, long n) const {
  const auto& row = coeffs[static_cast<size_t>(j - 1)];
  Rational acc(0);
  for (int t = degree; t >= 0; --t)
    acc = acc * n + row[static_cast<size_t>(t)];
  return acc;
}

std::string spec_to_json(const RecurrenceSpec& spec) {
  nlohmann::json j;
  j["order"] = spec.order;
  j["degree"] = spec.degree;
  j["coeffs"] = nlohmann::json::array();
  for (const auto& row : spec.coeffs) {
    nlohmann::json jrow = nlohmann::json::array();
    for (const Rational& q : row) jrow.push_back(rational_str(q));
    j["coeffs"].push_back(jrow);
  }
  return j.dump(2) + "\n";
}

RecurrenceSpec spec_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad recurrence JSON: ") + e.what());
  }
  RecurrenceSpec spec;
  try {
    spec.order = j.at("order").get<int>();
    spec.degree = j.at("degree").get<int>();
    for (const auto& jrow : j.at("coeffs")) {
      std::vector<Rational> row;
      for (const auto& cell : jrow)
        row.push_back(rational_from_str(cell.get<std::string>()));
      spec.coeffs.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad recurrence JSON: ") + e.what());
  }
  if (spec.order < 1 || spec.degree < 0 ||
      spec.coeffs.size() != static_cast<size_t>(spec.order))
    throw DomainError("bad recurrence JSON: order/coeffs mismatch");
  for (const auto& row : spec.coeffs)
    if (row.size() != static_cast<size_t>(spec.degree) + 1)
      throw DomainError("bad recurrence JSON: coefficient row length");
  return spec;
}

RecurrenceSpec normalize(RecurrenceSpec spec) {
  mpz_class lcm_den = 1;
  for (const auto& row : spec.coeffs)
    for (const Rational& q : row)
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den().get_mpz_t());
  mpz_class gcd_num = 0;
  for (const auto& row : spec.coeffs)
    for (const Rational& q : row) {
      const mpz_class num = q.get_num() * (lcm_den / q.get_den());
      mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), num.get_mpz_t());
    }
  if (gcd_num == 0) return spec;  // all-zero spec, nothing to scale
  const Rational scale(lcm_den, gcd_num);
  for (auto& row : spec.coeffs)
    for (Rational& q : row) {
      q *= scale;
      q.canonicalize();
    }
  return spec;
}

ResidualReport check_recurrence(const RecurrenceSpec& spec,
                                const std::vector<BigCount>& seq, long offset) {
  if (spec.order < 1) throw DomainError("recurrence order must be positive");
  if (seq.size() <= static_cast<size_t>(spec.order))
    throw DomainError("sequence too short: need more than " +
                      std::to_string(spec.order) + " terms, got " +
                      std::to_string(seq.size()));
  ResidualReport report;
  report.passed = true;
  for (long n = offset + spec.order; n < offset + static_cast<long>(seq.size());
       ++n) {
    Rational r = residual_at(spec, seq, offset, n);
    if (r != 0) report.passed = false;
    report.residuals.emplace_back(n, std::move(r));
  }
  return report;
}

FitOutcome fit_recurrence(const std::vector<BigCount>& seq, long offset,
                          int order, int degree, int validation,
                          std::optional<long> first_term) {
  if (order < 1) throw DomainError("order must be positive");
  if (degree < 0) throw DomainError("degree must be nonnegative");
  if (validation < 0) throw DomainError("validation count must be nonnegative");

  const long first_n = std::max(first_term.value_or(offset), offset) + order;
  const long last_n = offset + static_cast<long>(seq.size()) - 1;
  const long equations = last_n - first_n + 1;
  const int unknowns = order * (degree + 1);
  const long needed = unknowns + validation;  // training must at least be square
  if (equations < needed)
    throw DomainError("sequence too short: need " + std::to_string(needed) +
                      " usable equations, have " +
                      std::to_string(std::max(equations, 0L)));

  const long train_last = last_n - validation;
  std::vector<std::vector<Rational>> rows;
  for (long n = first_n; n <= train_last; ++n) {
    std::vector<Rational> row;
    row.reserve(static_cast<size_t>(unknowns) + 1);
    for (int j = 1; j <= order; ++j) {
      Rational npow(1);
      const Rational prev(seq[static_cast<size_t>(n - j - offset)]);
      for (int t = 0; t <= degree; ++t) {
        row.push_back(npow * prev);
        npow *= n;
      }
    }
    row.emplace_back(seq[static_cast<size_t>(n - offset)]);
    rows.push_back(std::move(row));
  }

  const SolveResult solved = solve_exact(std::move(rows), unknowns);
  FitOutcome out;
  if (solved.status == SolveStatus::inconsistent) {
    out.verdict = FitVerdict::none;
    return out;
  }
  if (solved.status == SolveStatus::underdetermined) {
    out.verdict = FitVerdict::underdetermined;
    out.nullity = solved.nullity;
    return out;
  }

  RecurrenceSpec spec;
  spec.order = order;
  spec.degree = degree;
  for (int j = 0; j < order; ++j) {
    auto first = solved.solution.begin() + j * (degree + 1);
    spec.coeffs.emplace_back(first, first + degree + 1);
  }
  for (long n = train_last + 1; n <= last_n; ++n) {
    if (residual_at(spec, seq, offset, n) != 0) {
      out.verdict = FitVerdict::none;  // trained fine, failed validation
      return out;
    }
  }
  out.verdict = FitVerdict::fitted;
  out.spec = normalize(std::move(spec));
  return out;
}

FitOutcome search_recurrence(const std::vector<BigCount>& seq, long offset,
                             int max_order, int max_degree, int validation,
                             std::optional<long> first_term) {
  if (max_order < 1) throw DomainError("max order must be positive");
  if (max_degree < 0) throw DomainError("max degree must be nonnegative");
  FitOutcome last;
  for (int total = 1; total <= max_order + max_degree; ++total) {
    for (int r = std::max(1, total - max_degree); r <= std::min(total, max_order);
         ++r) {
      const int d = total - r;
      FitOutcome attempt;
      try {
        attempt = fit_recurrence(seq, offset, r, d, validation, first_term);
      } catch (const DomainError&) {
        continue;  // window too short for this candidate
      }
      if (attempt.verdict == FitVerdict::fitted) return attempt;
      last = attempt;
    }
  }
  return last.verdict == FitVerdict::underdetermined ? last : FitOutcome{};
}

std::pair<std::vector<BigCount>, long> sequence_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<BigCount> seq;
  long offset = 0;
  bool first_line = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string trimmed;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
    if (trimmed.empty()) continue;
    const size_t comma = trimmed.find(',');
    if (comma == std::string::npos)
      throw DomainError("bad sequence line '" + line + "': expected n,value");
    const std::string n_str = trimmed.substr(0, comma);
    const std::string v_str = trimmed.substr(comma + 1);
    if (first_line && n_str.find_first_not_of("-0123456789") != std::string::npos) {
      first_line = false;  // header row
      continue;
    }
    first_line = false;
    long n = 0;
    try {
      n = std::stol(n_str);
    } catch (...) {
      throw DomainError("bad sequence line '" + line + "': expected n,value");
    }
    BigCount v;
    if (mpz_set_str(v.get_mpz_t(), v_str.c_str(), 10) != 0)
      throw DomainError("bad sequence value '" + v_str + "'");
    if (seq.empty())
      offset = n;
    else if (n != offset + static_cast<long>(seq.size()))
      throw DomainError("sequence rows must have consecutive n (saw n=" +
                        std::to_string(n) + ")");
    seq.push_back(std::move(v));
  }
  if (seq.empty()) throw DomainError("empty sequence");
  return {std::move(seq), offset};
}

}  // namespace chordkit
