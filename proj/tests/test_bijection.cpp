#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include <json.hpp>

#include "chordkit/bijection.hpp"
#include "chordkit/counting.hpp"

using namespace chordkit;

namespace {

// The worked six-chord example used throughout: D in M_4^6.
const char* kSixChord = "1-5,2-10,3-9,4-8,6-11,7-12";

}  // namespace

TEST_CASE("insert_middle_chord on the six-chord example") {
  const ChordDiagram d = parse_diagram(kSixChord);
  const ChordDiagram out = insert_middle_chord(d, 4);
  CHECK(to_text(out) == "1-6,2-12,3-11,4-9,5-10,7-13,8-14");
  CHECK(out.find_chord_ending_at(10)->start == 5);  // the inserted chord
}

TEST_CASE("insert_middle_chord on a three-chord example") {
  const ChordDiagram out = insert_middle_chord(parse_diagram("1-3,2-5,4-6"), 2);
  CHECK(to_text(out) == "1-4,2-7,3-6,5-8");
  CHECK(out.find_chord_ending_at(6)->start == 3);
}

TEST_CASE("insert_middle_chord with an empty middle region") {
  // With n = k the two inserted points are adjacent, so the raw insertion
  // yields a length-1 chord at (k+1, k+2); only the swaps in alpha make the
  // result land in a longer-chord class.
  const ChordDiagram out = insert_middle_chord(parse_diagram("1-4,2-5,3-6"), 3);
  CHECK(to_text(out) == "1-6,2-7,3-8,4-5");
}

TEST_CASE("insert_middle_chord requires membership in the class") {
  CHECK_THROWS_AS(insert_middle_chord(parse_diagram("1-3,2-5,4-6"), 3),
                  DomainError);
  CHECK_THROWS_AS(insert_middle_chord(parse_diagram("1-2"), 2), DomainError);
}

TEST_CASE("alpha reproduces the worked figures") {
  const ChordDiagram d = parse_diagram(kSixChord);
  CHECK(to_text(alpha(d, 4, 2)) == "1-6,2-12,3-11,4-9,5-10,7-13,8-14");
  CHECK(to_text(alpha(d, 4, 1)) == "1-6,2-12,3-10,4-9,5-11,7-13,8-14");
  CHECK(to_text(alpha(d, 4, 0)) == "1-6,2-10,3-12,4-9,5-11,7-13,8-14");
  CHECK(to_text(alpha(parse_diagram("1-3,2-5,4-6"), 2, 0)) == "1-4,2-6,3-7,5-8");
  CHECK(to_text(alpha(parse_diagram("1-4,2-7,3-6,5-8"), 3, 1)) ==
        "1-5,2-9,3-7,4-8,6-10");
}

TEST_CASE("alpha with empty middle shifts the whole diagram") {
  CHECK(to_text(alpha(parse_diagram("1-4,2-5,3-6"), 3, 0)) == "1-5,2-6,3-7,4-8");
}

TEST_CASE("alpha rejects bad parameters") {
  const ChordDiagram d = parse_diagram(kSixChord);
  CHECK_THROWS_AS(alpha(d, 4, 3), DomainError);   // i > n-k
  CHECK_THROWS_AS(alpha(d, 4, -1), DomainError);  // i < 0
  CHECK_THROWS_AS(alpha(d, 5, 0), DomainError);   // not in M_5^6
  // (5,3) violates n >= 3(n-k).
  CHECK_THROWS_AS(alpha(parse_diagram("1-4,2-6,3-8,5-9,7-10"), 3, 0), DomainError);
}

TEST_CASE("alpha swap count is (2k-n) - i") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      if (n < 3 * (n - k)) continue;
      for (const ChordDiagram& d : enumerate_all(n, k)) {
        for (int i = 0; i <= n - k; ++i) {
          AlphaStats stats;
          alpha(d, k, i, &stats);
          CHECK(stats.swaps == (2 * k - n) - i);
        }
      }
    }
  }
}

TEST_CASE("alpha images land one class up") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      if (n < 3 * (n - k)) continue;
      for (const ChordDiagram& d : enumerate_all(n, k)) {
        for (int i = 0; i <= n - k; ++i) {
          const ChordDiagram img = alpha(d, k, i);
          CHECK(img.size() == n + 1);
          CHECK(min_chord_length(img) >= k + 1);
          CHECK(class_index(img, k + 1) == i);
        }
      }
    }
  }
}

TEST_CASE("beta reproduces the worked inverses") {
  CHECK(to_text(beta(parse_diagram("1-4,2-6,3-7,5-8"), 3)) == "1-3,2-5,4-6");
  CHECK(to_text(beta(parse_diagram("1-6,2-12,3-11,4-9,5-10,7-13,8-14"), 5)) ==
        std::string(kSixChord));
  CHECK(to_text(beta(parse_diagram("1-5,2-6,3-7,4-8"), 4)) == "1-4,2-5,3-6");
}

TEST_CASE("beta requires the strict hypothesis and class membership") {
  // (6,4): n > 3(n-k) fails (12 = 12 is not strict).
  CHECK_THROWS_AS(beta(parse_diagram(kSixChord), 4), DomainError);
  CHECK_THROWS_AS(beta(parse_diagram("1-3,2-4"), 3), DomainError);    // k > n
  CHECK_THROWS_AS(beta(parse_diagram("1-2,3-4"), 2), DomainError);    // short chord
}

TEST_CASE("beta drops at most one unit of minimum length") {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 2; k <= n; ++k) {
      if (n <= 3 * (n - k)) continue;  // beta needs strict
      for (const ChordDiagram& d : enumerate_all(n, k)) {
        const ChordDiagram out = beta(d, k);
        CHECK(out.size() == n - 1);
        CHECK(min_chord_length(out) >= k - 1);
      }
    }
  }
}

TEST_CASE("round trips both ways") {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 1; k <= n; ++k) {
      if (n < 3 * (n - k)) continue;
      for (const ChordDiagram& d : enumerate_all(n, k))
        for (int i = 0; i <= n - k; ++i) CHECK(beta(alpha(d, k, i), k + 1) == d);
      for (const ChordDiagram& t : enumerate_all(n + 1, k + 1)) {
        const int i = class_index(t, k + 1);
        CHECK(alpha(beta(t, k + 1), k, i) == t);
      }
    }
  }
}

TEST_CASE("class_index on the worked examples") {
  CHECK(class_index(parse_diagram("1-6,2-12,3-11,4-9,5-10,7-13,8-14"), 5) == 2);
  CHECK(class_index(parse_diagram("1-6,2-10,3-12,4-9,5-11,7-13,8-14"), 5) == 0);
  CHECK(class_index(parse_diagram("1-4,2-5,3-6"), 3) == 0);
}

TEST_CASE("class_index stays below n-k+1 and partitions the class") {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 2; k <= n; ++k) {
      if (n <= 3 * (n - k)) continue;  // target-cell hypotheses, strict
      std::map<int, BigCount> sizes;
      for (const ChordDiagram& d : enumerate_all(n, k)) {
        const int m = class_index(d, k);
        CHECK(m >= 0);
        CHECK(m < n - k + 1);
        ++sizes[m];
      }
      // Fibers are equinumerous with the source class.
      const BigCount source = count_dp(n - 1, k - 1);
      for (const auto& [m, size] : sizes) CHECK(size == source);
    }
  }
}

TEST_CASE("alpha images are pairwise distinct and cover the target class") {
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{{3, 2}, {4, 3}, {5, 4}}) {
    std::set<ChordDiagram> images;
    size_t applications = 0;
    for (const ChordDiagram& d : enumerate_all(n, k)) {
      for (int i = 0; i <= n - k; ++i) {
        images.insert(alpha(d, k, i));
        ++applications;
      }
    }
    CHECK(images.size() == applications);
    CHECK(images.size() == enumerate_all(n + 1, k + 1).size());
  }
}

TEST_CASE("verify_theorem counts mode") {
  const TheoremReport r65 = verify_theorem_counts(6, 5);
  CHECK(r65.passed);
  CHECK(r65.checks.size() == 1);
  CHECK(r65.checks[0].detail == "80 = 2 * 40");
  CHECK(verify_theorem_counts(9, 7).passed);
  CHECK(verify_theorem_counts(9, 7).checks[0].detail == "23652 = 3 * 7884");
  CHECK_THROWS_AS(verify_theorem_counts(5, 3), DomainError);  // 5 < 3(5-3)
}

TEST_CASE("verify_theorem exhaustive mode") {
  const TheoremReport r = verify_theorem_exhaustive(5, 4);
  CHECK(r.passed);
  REQUIRE(r.checks.size() == 5);
  for (const TheoremCheck& c : r.checks) CHECK(c.passed);
  CHECK(r.checks[2].detail == "20 sources x 2 classes, no repeats");
  CHECK(r.checks[3].detail == "all 40 reached");
  CHECK_THROWS_AS(verify_theorem_exhaustive(6, 5, 6), DomainError);  // ceiling
}

TEST_CASE("theorem reports render as text and json") {
  const TheoremReport r = verify_theorem_counts(6, 5);
  const std::string text = to_text(r);
  CHECK(text.find("verify-theorem n=6 k=5 mode=counts: PASS") == 0);
  CHECK(text.find("count_identity: PASS") != std::string::npos);
  const nlohmann::json j = nlohmann::json::parse(to_json(r));
  CHECK(j.at("passed") == true);
  CHECK(j.at("mode") == "counts");
  CHECK(j.at("checks").size() == 1);
}
