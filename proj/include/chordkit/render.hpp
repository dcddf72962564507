#pragma once

#include <optional>
#include <string>

#include "chordkit/diagram.hpp"

namespace chordkit {

enum class RenderFormat { svg, tikz };

// Figure settings. With highlight_k set, chords touching the middle region
// of the (n, k) split draw bold, the others thin, and a brace marks the
// middle positions; mark_chord additionally dashes the chord ending at
// 2n-k+1 (the one the inverse map removes) and requires highlight_k.
struct RenderOptions {
  RenderFormat format = RenderFormat::svg;
  std::optional<int> highlight_k;
  bool mark_chord = false;
};

// Draws the diagram as 2n labeled baseline points with one two-segment peak
// per chord, apex height = chord length / 2 in x-units. Output is plain text
// (SVG 1.1 or a TikZ picture), deterministic for a given input: coordinates
// come from integer math only.
std::string render_figure(const ChordDiagram& d, const RenderOptions& options);

}  // namespace chordkit
