#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "chordkit/enumeration.hpp"
#include "chordkit/render.hpp"

using namespace chordkit;

namespace {

size_t count_occurrences(const std::string& text, const std::string& needle) {
  size_t count = 0, pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

}  // namespace

TEST_CASE("single chord svg") {
  const std::string svg = render_figure(parse_diagram("1-2"), {});
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(count_occurrences(svg, "<polyline") == 1);  // one arc, no brace
  CHECK(count_occurrences(svg, "<circle") == 2);
  CHECK(svg.find(">1</text>") != std::string::npos);
  CHECK(svg.find(">2</text>") != std::string::npos);
}

TEST_CASE("svg structure: one arc per chord, one point per index") {
  for (const char* text : {"1-3,2-4", "1-4,2-6,3-7,5-8", "1-5,2-10,3-9,4-8,6-11,7-12"}) {
    const ChordDiagram d = parse_diagram(text);
    const std::string svg = render_figure(d, {});
    CHECK(count_occurrences(svg, "<polyline") == static_cast<size_t>(d.size()));
    CHECK(count_occurrences(svg, "<circle") == static_cast<size_t>(d.points()));
    CHECK(count_occurrences(svg, "<text") == static_cast<size_t>(d.points()));
  }
}

TEST_CASE("highlighted svg of the worked six-chord diagram") {
  RenderOptions opt;
  opt.highlight_k = 4;
  const std::string svg =
      render_figure(parse_diagram("1-5,2-10,3-9,4-8,6-11,7-12"), opt);
  CHECK(count_occurrences(svg, "stroke-width=\"3\"") == 4);  // mid chords bold
  CHECK(count_occurrences(svg, "stroke-width=\"1\"") == 2);  // side chords thin
  CHECK(count_occurrences(svg, "<polyline") == 7);           // 6 arcs + brace
}

TEST_CASE("apex height is half the chord length in x-units") {
  // Unit is 40px and the baseline sits at y = 40 + (2n-1)*20. For 1-2 the
  // apex must rise 20px above the baseline, for 1-4 of the same figure 60px.
  const std::string svg = render_figure(parse_diagram("1-4,2-3"), {});
  CHECK(svg.find("points=\"40,100 100,40 160,100\"") != std::string::npos);
  CHECK(svg.find("points=\"80,100 100,80 120,100\"") != std::string::npos);
}

TEST_CASE("tikz of the worked six-chord diagram with highlight") {
  RenderOptions opt;
  opt.format = RenderFormat::tikz;
  opt.highlight_k = 4;
  const std::string tikz =
      render_figure(parse_diagram("1-5,2-10,3-9,4-8,6-11,7-12"), opt);
  CHECK(tikz.rfind("\\begin{tikzpicture}", 0) == 0);
  CHECK(count_occurrences(tikz, "very thick") == 4);
  CHECK(count_occurrences(tikz, "[thin]") == 2);
  CHECK(tikz.find("\\draw (0,0) -- (11,0);") != std::string::npos);
  CHECK(tikz.find("(3.8,-1) -- (7.2,-1)") != std::string::npos);  // brace under 5..8
  CHECK(tikz.find("(5,0) -- (7.5,2.5) -- (10,0)") != std::string::npos);
  CHECK(count_occurrences(tikz, "\\node [below]") == 12);
}

TEST_CASE("marked chord renders dashed") {
  RenderOptions opt;
  opt.highlight_k = 5;
  opt.mark_chord = true;
  const ChordDiagram d = parse_diagram("1-6,2-12,3-11,4-9,5-10,7-13,8-14");
  const std::string svg = render_figure(d, opt);
  // The chord ending at 2n-k+1 = 10 is the inserted one.
  CHECK(count_occurrences(svg, "stroke-dasharray") == 1);
  opt.format = RenderFormat::tikz;
  const std::string tikz = render_figure(d, opt);
  CHECK(count_occurrences(tikz, "gray, dashed") == 1);
  CHECK(tikz.find("(4,0) -- (6.5,2.5) -- (9,0)") != std::string::npos);
}

TEST_CASE("mark without highlight is rejected") {
  RenderOptions opt;
  opt.mark_chord = true;
  CHECK_THROWS_AS(render_figure(parse_diagram("1-3,2-4"), opt), DomainError);
}

TEST_CASE("highlight split must fit the diagram") {
  RenderOptions opt;
  opt.highlight_k = 3;
  CHECK_THROWS_AS(render_figure(parse_diagram("1-3,2-4"), opt), DomainError);
}

TEST_CASE("no brace when the middle region is empty") {
  RenderOptions opt;
  opt.highlight_k = 3;
  const std::string svg = render_figure(parse_diagram("1-4,2-5,3-6"), opt);
  CHECK(count_occurrences(svg, "<polyline") == 3);  // arcs only
  opt.format = RenderFormat::tikz;
  const std::string tikz = render_figure(parse_diagram("1-4,2-5,3-6"), opt);
  CHECK(tikz.find("decorate") == std::string::npos);
}

TEST_CASE("rendering is deterministic") {
  RenderOptions opt;
  opt.highlight_k = 2;
  const ChordDiagram d = parse_diagram("1-3,2-5,4-6");
  CHECK(render_figure(d, opt) == render_figure(d, opt));
  opt.format = RenderFormat::tikz;
  CHECK(render_figure(d, opt) == render_figure(d, opt));
}

TEST_CASE("every enumerated diagram renders in both formats") {
  for (const ChordDiagram& d : enumerate_all(4, 2)) {
    RenderOptions opt;
    CHECK(render_figure(d, opt).size() > 0);
    opt.format = RenderFormat::tikz;
    opt.highlight_k = 2;
    CHECK(render_figure(d, opt).find("tikzpicture") != std::string::npos);
  }
}
