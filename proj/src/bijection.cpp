#include "chordkit/bijection.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "chordkit/counting.hpp"

namespace chordkit {

namespace {

void require_in_class(const ChordDiagram& d, int k) {
  if (!is_in_min_class(d, k))
    throw DomainError("diagram has a chord shorter than k=" + std::to_string(k));
}

void require_hypothesis(int n, int k, bool strict) {
  if (k < 1 || k > n)
    throw DomainError("need 1 <= k <= n (got k=" + std::to_string(k) +
                      ", n=" + std::to_string(n) + ")");
  const int slack = 3 * k - 2 * n;  // n - 3(n-k)
  if (strict ? slack <= 0 : slack < 0)
    throw DomainError(std::string("hypothesis n ") + (strict ? ">" : ">=") +
                      " 3(n-k) fails for n=" + std::to_string(n) +
                      ", k=" + std::to_string(k));
}

// Ends of the side chords of d (chords avoiding the middle region), in the
// original coordinates. Ends are the stable identity through start swaps.
std::vector<int> side_chord_ends(const ChordDiagram& d, int k) {
  const RegionSplit rs = region_split(d.size(), k);
  std::vector<int> ends;
  for (const Chord& c : d.chords())
    if (!rs.in_middle(c.start) && !rs.in_middle(c.end)) ends.push_back(c.end);
  return ends;
}

}  // namespace

ChordDiagram insert_middle_chord(const ChordDiagram& d, int k) {
  const int n = d.size();
  if (k < 1 || k > n)
    throw DomainError("need 1 <= k <= n (got k=" + std::to_string(k) +
                      ", n=" + std::to_string(n) + ")");
  require_in_class(d, k);
  auto remap = [&](int j) { return j <= k ? j : j <= 2 * n - k ? j + 1 : j + 2; };
  std::vector<Chord> chords;
  chords.reserve(static_cast<size_t>(n) + 1);
  for (const Chord& c : d.chords()) chords.push_back({remap(c.start), remap(c.end)});
  chords.push_back({k + 1, 2 * n - k + 2});
  return ChordDiagram(std::move(chords));
}

ChordDiagram alpha(const ChordDiagram& d, int k, int i, AlphaStats* stats) {
  const int n = d.size();
  require_hypothesis(n, k, /*strict=*/false);
  require_in_class(d, k);
  if (i < 0 || i > n - k)
    throw DomainError("class index i=" + std::to_string(i) +
                      " outside 0.." + std::to_string(n - k));

  // Side membership is decided on the source diagram; carry the ends through
  // the insertion remap. The inserted chord is not a side chord.
  std::set<int> side_ends;
  for (int e : side_chord_ends(d, k)) side_ends.insert(e <= 2 * n - k ? e + 1 : e + 2);

  const ChordDiagram inserted = insert_middle_chord(d, k);
  std::vector<Chord> chords = inserted.chords();
  const int new_end = 2 * n - k + 2;
  auto chord_with_end = [&](int e) -> Chord& {
    for (Chord& c : chords)
      if (c.end == e) return c;
    throw std::logic_error("lost track of a chord end");
  };

  Chord* moving = &chord_with_end(new_end);
  int swaps = 0;
  while (true) {
    // Count side starts left of the moving chord and find the nearest one.
    int left = 0;
    Chord* nearest = nullptr;
    for (Chord& c : chords) {
      if (!side_ends.count(c.end) || c.start >= moving->start) continue;
      ++left;
      if (!nearest || c.start > nearest->start) nearest = &c;
    }
    if (left == i) break;
    if (left < i || !nearest)
      throw std::logic_error("swap loop cannot reach the requested class");
    std::swap(moving->start, nearest->start);
    ++swaps;
  }
  if (stats) stats->swaps = swaps;

  ChordDiagram out(std::move(chords));
  if (!is_in_min_class(out, k + 1))
    throw std::logic_error("alpha image left the target class");
  return out;
}

ChordDiagram beta(const ChordDiagram& d, int k) {
  const int n = d.size();
  require_hypothesis(n, k, /*strict=*/true);
  require_in_class(d, k);

  std::vector<Chord> chords = d.chords();
  const int marked_end = 2 * n - k + 1;  // first position after the middle
  auto marked_it = std::find_if(chords.begin(), chords.end(),
                                [&](const Chord& c) { return c.end == marked_end; });
  if (marked_it == chords.end())
    throw DomainError("no chord ends at position " + std::to_string(marked_end));

  std::set<int> side_ends;
  for (int e : side_chord_ends(d, k))
    if (e != marked_end) side_ends.insert(e);

  Chord* marked = &*marked_it;
  while (true) {
    Chord* nearest = nullptr;
    for (Chord& c : chords) {
      if (!side_ends.count(c.end) || c.start <= marked->start) continue;
      if (!nearest || c.start < nearest->start) nearest = &c;
    }
    if (!nearest) break;
    std::swap(marked->start, nearest->start);
  }

  const int s = marked->start;
  const int e = marked->end;
  std::vector<Chord> rest;
  rest.reserve(chords.size() - 1);
  for (const Chord& c : chords) {
    if (c.end == e) continue;
    auto renumber = [&](int j) { return j - (j > s ? 1 : 0) - (j > e ? 1 : 0); };
    rest.push_back({renumber(c.start), renumber(c.end)});
  }
  ChordDiagram out(std::move(rest));
  if (!is_in_min_class(out, k - 1))
    throw std::logic_error("beta image left the target class");
  return out;
}

int class_index(const ChordDiagram& d, int k) {
  const int n = d.size();
  require_hypothesis(n, k, /*strict=*/true);
  require_in_class(d, k);
  const int marked_end = 2 * n - k + 1;
  const Chord* marked = d.find_chord_ending_at(marked_end);
  if (!marked)
    throw DomainError("no chord ends at position " + std::to_string(marked_end));
  int m = 0;
  const RegionSplit rs = region_split(n, k);
  for (const Chord& c : d.chords())
    if (!rs.in_middle(c.start) && !rs.in_middle(c.end) && c.end != marked_end &&
        c.start < marked->start)
      ++m;
  return m;
}

TheoremReport verify_theorem_counts(int n, int k) {
  require_hypothesis(n, k, /*strict=*/false);
  TheoremReport report;
  report.n = n;
  report.k = k;
  report.exhaustive = false;
  const BigCount target = count_dp(n + 1, k + 1);
  const BigCount source = count_dp(n, k);
  const BigCount expected = BigCount(n - k + 1) * source;
  TheoremCheck check;
  check.name = "count_identity";
  check.passed = target == expected;
  check.detail = target.get_str() + (check.passed ? " = " : " != ") +
                 std::to_string(n - k + 1) + " * " + source.get_str();
  report.checks.push_back(std::move(check));
  report.passed = report.checks.front().passed;
  return report;
}

TheoremReport verify_theorem_exhaustive(int n, int k, int ceiling) {
  require_hypothesis(n, k, /*strict=*/false);
  if (n + 1 > ceiling)
    throw DomainError("exhaustive mode needs n+1 <= " + std::to_string(ceiling) +
                      " (enumeration ceiling); got n=" + std::to_string(n));

  const std::vector<ChordDiagram> sources = enumerate_all(n, k);
  const std::vector<ChordDiagram> targets = enumerate_all(n + 1, k + 1);

  TheoremCheck containment{"image_containment", true, ""};
  TheoremCheck classes{"class_containment", true, ""};
  TheoremCheck disjoint{"disjointness", true, ""};
  TheoremCheck coverage{"coverage", true, ""};
  TheoremCheck round_trip{"round_trip", true, ""};

  std::set<ChordDiagram> images;
  for (const ChordDiagram& d : sources) {
    for (int i = 0; i <= n - k; ++i) {
      const ChordDiagram img = alpha(d, k, i);
      if (containment.passed && !is_in_min_class(img, k + 1)) {
        containment.passed = false;
        containment.detail = "alpha(" + to_text(d) + ", i=" + std::to_string(i) +
                             ") = " + to_text(img) + " has a short chord";
      }
      if (classes.passed && class_index(img, k + 1) != i) {
        classes.passed = false;
        classes.detail = "alpha(" + to_text(d) + ", i=" + std::to_string(i) +
                         ") landed in class " +
                         std::to_string(class_index(img, k + 1));
      }
      if (!images.insert(img).second && disjoint.passed) {
        disjoint.passed = false;
        disjoint.detail = "image " + to_text(img) + " produced twice";
      }
      if (round_trip.passed) {
        const ChordDiagram back = beta(img, k + 1);
        if (!(back == d)) {
          round_trip.passed = false;
          round_trip.detail = "beta(alpha(" + to_text(d) + ", i=" +
                              std::to_string(i) + ")) = " + to_text(back);
        }
      }
    }
  }
  containment.detail = containment.passed
                           ? std::to_string(images.size()) + " images all in class"
                           : containment.detail;
  classes.detail = classes.passed ? "class index matches i for every image"
                                  : classes.detail;
  disjoint.detail = disjoint.passed
                        ? std::to_string(sources.size()) + " sources x " +
                              std::to_string(n - k + 1) + " classes, no repeats"
                        : disjoint.detail;

  if (images.size() != targets.size()) {
    coverage.passed = false;
    coverage.detail = std::to_string(images.size()) + " images vs " +
                      std::to_string(targets.size()) + " diagrams in the class";
  } else {
    for (const ChordDiagram& t : targets) {
      if (!images.count(t)) {
        coverage.passed = false;
        coverage.detail = to_text(t) + " is not an image";
        break;
      }
    }
    if (coverage.passed)
      coverage.detail = "all " + std::to_string(targets.size()) + " reached";
  }

  // Other direction: alpha_{class_index(t)} must take beta(t) back to t.
  if (round_trip.passed) {
    for (const ChordDiagram& t : targets) {
      const int i = class_index(t, k + 1);
      const ChordDiagram again = alpha(beta(t, k + 1), k, i);
      if (!(again == t)) {
        round_trip.passed = false;
        round_trip.detail = "alpha(beta(" + to_text(t) + "), i=" +
                            std::to_string(i) + ") = " + to_text(again);
        break;
      }
    }
  }
  if (round_trip.passed) round_trip.detail = "both compositions are the identity";

  TheoremReport report;
  report.n = n;
  report.k = k;
  report.exhaustive = true;
  report.checks = {containment, classes, disjoint, coverage, round_trip};
  report.passed = true;
  for (const TheoremCheck& c : report.checks) report.passed = report.passed && c.passed;
  return report;
}

std::string to_text(const TheoremReport& report) {
  std::string out = "verify-theorem n=" + std::to_string(report.n) +
                    " k=" + std::to_string(report.k) +
                    (report.exhaustive ? " mode=exhaustive" : " mode=counts") +
                    ": " + (report.passed ? "PASS" : "FAIL") + "\n";
  for (const TheoremCheck& c : report.checks)
    out += "  " + c.name + ": " + (c.passed ? "PASS" : "FAIL") +
           (c.detail.empty() ? "" : " (" + c.detail + ")") + "\n";
  return out;
}

std::string to_json(const TheoremReport& report) {
  nlohmann::json j;
  j["n"] = report.n;
  j["k"] = report.k;
  j["mode"] = report.exhaustive ? "exhaustive" : "counts";
  j["passed"] = report.passed;
  j["checks"] = nlohmann::json::array();
  for (const TheoremCheck& c : report.checks)
    j["checks"].push_back(
        {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return j.dump(2) + "\n";
}

}  // namespace chordkit
