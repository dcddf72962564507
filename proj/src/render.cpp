#include "chordkit/render.hpp"

#include <string>

namespace chordkit {

namespace {

// Styling resolved per chord from the highlight settings.
struct ChordStyle {
  bool bold = false;
  bool thin = false;
  bool dashed = false;
};

ChordStyle style_of(const Chord& c, const ChordDiagram& d,
                    const RenderOptions& opt) {
  ChordStyle st;
  if (!opt.highlight_k) return st;
  const RegionSplit rs = region_split(d.size(), *opt.highlight_k);
  const bool mid = rs.in_middle(c.start) || rs.in_middle(c.end);
  st.bold = mid;
  st.thin = !mid;
  st.dashed = opt.mark_chord && c.end == rs.right_first();
  return st;
}

// Prints a coordinate measured in tenths of an x-unit: 25 -> "2.5".
std::string tenths(int value) {
  std::string sign = value < 0 ? "-" : "";
  const int a = value < 0 ? -value : value;
  std::string out = sign + std::to_string(a / 10);
  if (a % 10) out += "." + std::to_string(a % 10);
  return out;
}

std::string render_svg(const ChordDiagram& d, const RenderOptions& opt) {
  const int n = d.size();
  const int unit = 40;  // px per baseline step; even so apexes stay integral
  const int margin = 40;
  const int max_len = 2 * n - 1;
  const int base_y = margin + max_len * unit / 2;
  const int width = 2 * margin + (2 * n - 1) * unit;
  const int height = base_y + 70;
  auto x_of = [&](int i) { return margin + (i - 1) * unit; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         std::to_string(width) + "\" height=\"" + std::to_string(height) +
         "\" viewBox=\"0 0 " + std::to_string(width) + " " +
         std::to_string(height) + "\">\n";
  out += "  <line x1=\"" + std::to_string(x_of(1)) + "\" y1=\"" +
         std::to_string(base_y) + "\" x2=\"" + std::to_string(x_of(2 * n)) +
         "\" y2=\"" + std::to_string(base_y) + "\" stroke=\"black\"/>\n";

  for (const Chord& c : d.chords()) {
    const ChordStyle st = style_of(c, d, opt);
    const int apex_x = margin + (c.start + c.end - 2) * unit / 2;
    const int apex_y = base_y - c.length() * unit / 2;
    out += "  <polyline fill=\"none\" stroke=\"" +
           std::string(st.dashed ? "#777777" : "black") + "\" stroke-width=\"" +
           (st.bold ? "3" : st.thin ? "1" : "2") + "\"" +
           (st.dashed ? " stroke-dasharray=\"8,5\"" : "") + " points=\"" +
           std::to_string(x_of(c.start)) + "," + std::to_string(base_y) + " " +
           std::to_string(apex_x) + "," + std::to_string(apex_y) + " " +
           std::to_string(x_of(c.end)) + "," + std::to_string(base_y) +
           "\"/>\n";
  }

  for (int i = 1; i <= 2 * n; ++i) {
    out += "  <circle cx=\"" + std::to_string(x_of(i)) + "\" cy=\"" +
           std::to_string(base_y) + "\" r=\"3\" fill=\"black\"/>\n";
    out += "  <text x=\"" + std::to_string(x_of(i)) + "\" y=\"" +
           std::to_string(base_y + 24) +
           "\" text-anchor=\"middle\" font-size=\"16\">" + std::to_string(i) +
           "</text>\n";
  }

  if (opt.highlight_k) {
    const RegionSplit rs = region_split(n, *opt.highlight_k);
    if (!rs.middle_empty()) {
      const int x1 = x_of(rs.middle_first()) - 8;
      const int x2 = x_of(rs.middle_last()) + 8;
      const int y1 = base_y + 34;
      out += "  <polyline fill=\"none\" stroke=\"black\" points=\"" +
             std::to_string(x1) + "," + std::to_string(y1) + " " +
             std::to_string(x1) + "," + std::to_string(y1 + 10) + " " +
             std::to_string(x2) + "," + std::to_string(y1 + 10) + " " +
             std::to_string(x2) + "," + std::to_string(y1) + "\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

std::string render_tikz(const ChordDiagram& d, const RenderOptions& opt) {
  const int n = d.size();
  // Coordinates in tenths: point i sits at x = i-1, apexes land on halves.
  std::string out = "\\begin{tikzpicture}[scale=.45]\n";
  out += "  \\draw (0,0) -- (" + tenths((2 * n - 1) * 10) + ",0);\n";
  for (const Chord& c : d.chords()) {
    const ChordStyle st = style_of(c, d, opt);
    std::string style;
    if (st.dashed)
      style = "[gray, dashed]";
    else if (st.bold)
      style = "[very thick]";
    else if (st.thin)
      style = "[thin]";
    out += "  \\draw" + (style.empty() ? "" : " " + style) + " (" +
           tenths((c.start - 1) * 10) + ",0) -- (" +
           tenths((c.start + c.end - 2) * 5) + "," + tenths(c.length() * 5) +
           ") -- (" + tenths((c.end - 1) * 10) + ",0);\n";
  }
  for (int i = 1; i <= 2 * n; ++i)
    out += "  \\node [below] at (" + tenths((i - 1) * 10) + ",0) {" +
           std::to_string(i) + "};\n";
  if (opt.highlight_k) {
    const RegionSplit rs = region_split(n, *opt.highlight_k);
    if (!rs.middle_empty())
      out += "  \\draw [decorate, decoration={brace, amplitude=5pt, mirror}] (" +
             tenths((rs.middle_first() - 1) * 10 - 2) + ",-1) -- (" +
             tenths((rs.middle_last() - 1) * 10 + 2) + ",-1);\n";
  }
  out += "\\end{tikzpicture}\n";
  return out;
}

}  // namespace

std::string render_figure(const ChordDiagram& d, const RenderOptions& options) {
  if (options.mark_chord && !options.highlight_k)
    throw DomainError("marking the removable chord requires a highlight split");
  if (options.highlight_k) region_split(d.size(), *options.highlight_k);  // validate
  return options.format == RenderFormat::svg ? render_svg(d, options)
                                             : render_tikz(d, options);
}

}  // namespace chordkit
