#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "chordkit/diagram.hpp"
#include "chordkit/enumeration.hpp"

using namespace chordkit;

TEST_CASE("parse accepts the canonical form") {
  const ChordDiagram d = parse_diagram("1-4,2-6,3-7,5-8");
  CHECK(d.size() == 4);
  CHECK(d.points() == 8);
  CHECK(to_text(d) == "1-4,2-6,3-7,5-8");
}

TEST_CASE("parse tolerates whitespace and chord order") {
  const ChordDiagram d = parse_diagram(" 2-6 ,1-4,  5-8, 3-7 ");
  CHECK(to_text(d) == "1-4,2-6,3-7,5-8");
  CHECK(parse_diagram("1-2") == parse_diagram(" 1 - 2 "));
}

TEST_CASE("parse rejects malformed input") {
  CHECK_THROWS_AS(parse_diagram(""), ParseError);
  CHECK_THROWS_AS(parse_diagram("1-4,2"), ParseError);
  CHECK_THROWS_AS(parse_diagram("1-4,x-8"), ParseError);
  CHECK_THROWS_AS(parse_diagram("3-3,1-2"), ParseError);
  CHECK_THROWS_AS(parse_diagram("4-1,2-3"), ParseError);
}

TEST_CASE("parse names the offending index") {
  CHECK_THROWS_WITH_AS(parse_diagram("1-3,2-3"), "index 3 used twice", DomainError);
  CHECK_THROWS_WITH_AS(parse_diagram("1-2,4-5,3-7"), "missing index 6", DomainError);
  CHECK_THROWS_WITH_AS(parse_diagram("1-5"), "missing index 2", DomainError);
}

TEST_CASE("diagram construction validates endpoints") {
  CHECK_THROWS_AS(ChordDiagram({{1, 2}, {2, 3}}), DomainError);
  CHECK_THROWS_AS(ChordDiagram({{1, 2}, {5, 6}}), DomainError);
  CHECK_THROWS_AS(ChordDiagram({{2, 1}}), DomainError);
  CHECK_THROWS_AS(ChordDiagram(std::vector<Chord>{}), DomainError);
  CHECK(ChordDiagram({{3, 4}, {1, 2}}).chords() ==
        std::vector<Chord>{{1, 2}, {3, 4}});
}

TEST_CASE("text round trip over a whole class") {
  for (const ChordDiagram& d : enumerate_all(4, 1)) {
    CHECK(parse_diagram(to_text(d)) == d);
  }
}

TEST_CASE("min_chord_length") {
  CHECK(min_chord_length(parse_diagram("1-2,3-4")) == 1);
  CHECK(min_chord_length(parse_diagram("1-4,2-6,3-7,5-8")) == 3);
  CHECK(min_chord_length(parse_diagram("1-5,2-10,3-9,4-8,6-11,7-12")) == 4);
  CHECK(is_in_min_class(parse_diagram("1-4,2-6,3-7,5-8"), 3));
  CHECK_FALSE(is_in_min_class(parse_diagram("1-4,2-6,3-7,5-8"), 4));
}

TEST_CASE("covers on indices and chords") {
  const Chord outer{2, 9};
  CHECK(covers(outer, 5));
  CHECK_FALSE(covers(outer, 2));   // endpoints are not strictly inside
  CHECK_FALSE(covers(outer, 9));
  CHECK_FALSE(covers(outer, 1));
  CHECK(covers(outer, Chord{3, 7}));
  CHECK_FALSE(covers(outer, Chord{3, 11}));  // crossing, not nesting
  CHECK_FALSE(covers(Chord{3, 7}, outer));
}

TEST_CASE("covers is antisymmetric for distinct chords of one diagram") {
  for (const ChordDiagram& d : enumerate_all(4, 1)) {
    const auto& cs = d.chords();
    for (size_t a = 0; a < cs.size(); ++a)
      for (size_t b = a + 1; b < cs.size(); ++b)
        CHECK_FALSE((covers(cs[a], cs[b]) && covers(cs[b], cs[a])));
  }
}

TEST_CASE("region_split layout") {
  const RegionSplit rs = region_split(6, 4);
  CHECK(rs.left_first() == 1);
  CHECK(rs.left_last() == 4);
  CHECK(rs.middle_first() == 5);
  CHECK(rs.middle_last() == 8);
  CHECK(rs.right_first() == 9);
  CHECK(rs.right_last() == 12);
  CHECK(rs.middle_size() == 4);
  CHECK_FALSE(rs.middle_empty());
  CHECK(rs.in_left(4));
  CHECK(rs.in_middle(5));
  CHECK(rs.in_right(9));
  CHECK_FALSE(rs.in_middle(9));
}

TEST_CASE("region_split degenerate and invalid cases") {
  const RegionSplit diag = region_split(3, 3);
  CHECK(diag.middle_empty());
  CHECK(diag.middle_size() == 0);
  CHECK(diag.left_last() == 3);
  CHECK(diag.right_first() == 4);
  CHECK_THROWS_AS(region_split(3, 0), DomainError);
  CHECK_THROWS_AS(region_split(3, 4), DomainError);
  CHECK_THROWS_AS(region_split(0, 1), DomainError);
}

TEST_CASE("classify splits mid and side chords") {
  const ChordDiagram d = parse_diagram("1-5,2-10,3-9,4-8,6-11,7-12");
  const ChordClassification cl = classify(d, 4);
  CHECK(cl.mid == std::vector<Chord>{{1, 5}, {4, 8}, {6, 11}, {7, 12}});
  CHECK(cl.side == std::vector<Chord>{{2, 10}, {3, 9}});

  // Empty middle region: every chord is a side chord.
  const ChordClassification diag = classify(parse_diagram("1-4,2-5,3-6"), 3);
  CHECK(diag.mid.empty());
  CHECK(diag.side.size() == 3);
}

TEST_CASE("side chords start left and end right when n >= 3(n-k)") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      if (n < 3 * (n - k)) continue;
      for (const ChordDiagram& d : enumerate_all(n, k)) {
        const RegionSplit rs = region_split(n, k);
        for (const Chord& c : classify(d, k).side) {
          CHECK(rs.in_left(c.start));
          CHECK(rs.in_right(c.end));
        }
        // Exactly 2k-n side chords (drops out of the structural counts).
        CHECK(static_cast<int>(classify(d, k).side.size()) == 2 * k - n);
      }
    }
  }
}

TEST_CASE("structural lemma report on the worked six-chord diagram") {
  const LemmaReport r =
      check_structural_lemmas(parse_diagram("1-5,2-10,3-9,4-8,6-11,7-12"), 4);
  CHECK(r.no_mid_mid_chord);
  CHECK(r.mid_starts == 2);
  CHECK(r.mid_ends == 2);
}

TEST_CASE("structural lemma report with empty middle") {
  const LemmaReport r = check_structural_lemmas(parse_diagram("1-4,2-5,3-6"), 3);
  CHECK(r.no_mid_mid_chord);
  CHECK(r.mid_starts == 0);
  CHECK(r.mid_ends == 0);
}

TEST_CASE("structural lemma sweep: no mid-mid chord, n-k starts and ends") {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 1; k <= n; ++k) {
      if (n < 3 * (n - k)) continue;
      for (const ChordDiagram& d : enumerate_all(n, k)) {
        const LemmaReport r = check_structural_lemmas(d, k);
        CHECK(r.no_mid_mid_chord);
        CHECK(r.mid_starts == n - k);
        CHECK(r.mid_ends == n - k);
      }
    }
  }
}

TEST_CASE("structural lemma preconditions") {
  // (5,3) sits outside n >= 3(n-k).
  CHECK_THROWS_AS(
      check_structural_lemmas(parse_diagram("1-4,2-6,3-8,5-9,7-10"), 3),
      DomainError);
  // Short chord for k=3.
  CHECK_THROWS_AS(check_structural_lemmas(parse_diagram("1-2,3-4"), 2),
                  DomainError);
}

TEST_CASE("diagram ordering is lexicographic on the chord list") {
  const auto a = parse_diagram("1-2,3-4");
  const auto b = parse_diagram("1-3,2-4");
  const auto c = parse_diagram("1-4,2-3");
  CHECK(a < b);
  CHECK(b < c);
  CHECK(std::set<ChordDiagram>({c, a, b}).begin()->chords()[0] == Chord{1, 2});
}
