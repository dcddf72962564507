#include "chordkit/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>

namespace chordkit {

namespace {

// Endpoints must be exactly {1, ..., 2n}. Reports the first duplicate or the
// smallest missing index so parse errors point at something actionable.
void validate_endpoints(const std::vector<Chord>& chords) {
  if (chords.empty()) throw DomainError("diagram must contain at least one chord");
  const int points = 2 * static_cast<int>(chords.size());
  std::vector<char> seen(static_cast<size_t>(points) + 1, 0);
  auto mark = [&](int i) {
    if (i < 1) throw DomainError("index " + std::to_string(i) + " is out of range");
    if (i <= points && seen[static_cast<size_t>(i)]++)
      throw DomainError("index " + std::to_string(i) + " used twice");
  };
  int max_index = 0;
  for (const Chord& c : chords) {
    if (c.start >= c.end)
      throw DomainError("chord " + std::to_string(c.start) + "-" +
                        std::to_string(c.end) + ": start must be below end");
    mark(c.start);
    mark(c.end);
    max_index = std::max(max_index, c.end);
  }
  if (max_index != points) {
    for (int i = 1; i <= points; ++i)
      if (!seen[static_cast<size_t>(i)])
        throw DomainError("missing index " + std::to_string(i));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_index(std::string_view tok, std::string_view whole) {
  tok = trim(tok);
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("malformed chord '" + std::string(whole) + "'");
  return value;
}

}  // namespace

ChordDiagram::ChordDiagram(std::vector<Chord> chords) : chords_(std::move(chords)) {
  validate_endpoints(chords_);
  std::sort(chords_.begin(), chords_.end());
}

const Chord* ChordDiagram::find_chord_ending_at(int end) const {
  for (const Chord& c : chords_)
    if (c.end == end) return &c;
  return nullptr;
}

ChordDiagram parse_diagram(std::string_view text) {
  std::vector<Chord> chords;
  size_t pos = 0;
  if (trim(text).empty()) throw ParseError("empty diagram text");
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? comma : comma - pos);
    std::string_view t = trim(tok);
    size_t dash = t.find('-', 1);  // skip a leading '-' so negatives still fail loudly
    if (t.empty() || dash == std::string_view::npos)
      throw ParseError("malformed chord '" + std::string(tok) + "'");
    int s = parse_index(t.substr(0, dash), tok);
    int e = parse_index(t.substr(dash + 1), tok);
    if (s >= e)
      throw ParseError("chord " + std::to_string(s) + "-" + std::to_string(e) +
                       ": start must be below end");
    chords.push_back({s, e});
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return ChordDiagram(std::move(chords));
}

std::string to_text(const ChordDiagram& d) {
  std::string out;
  for (const Chord& c : d.chords()) {
    if (!out.empty()) out += ',';
    out += std::to_string(c.start);
    out += '-';
    out += std::to_string(c.end);
  }
  return out;
}

int min_chord_length(const ChordDiagram& d) {
  int best = d.points();
  for (const Chord& c : d.chords()) best = std::min(best, c.length());
  return best;
}

bool is_in_min_class(const ChordDiagram& d, int k) {
  return min_chord_length(d) >= k;
}

bool covers(const Chord& c, int index) {
  return c.start < index && index < c.end;
}

bool covers(const Chord& c, const Chord& d) {
  return covers(c, d.start) && covers(c, d.end);
}

RegionSplit region_split(int n, int k) {
  if (n < 1) throw DomainError("n must be positive");
  if (k < 1 || k > n)
    throw DomainError("k must satisfy 1 <= k <= n (got k=" + std::to_string(k) +
                      ", n=" + std::to_string(n) + ")");
  return RegionSplit{n, k};
}

ChordClassification classify(const ChordDiagram& d, int k) {
  const RegionSplit rs = region_split(d.size(), k);
  ChordClassification out;
  for (const Chord& c : d.chords()) {
    if (rs.in_middle(c.start) || rs.in_middle(c.end))
      out.mid.push_back(c);
    else
      out.side.push_back(c);
  }
  return out;
}

LemmaReport check_structural_lemmas(const ChordDiagram& d, int k) {
  const int n = d.size();
  const RegionSplit rs = region_split(n, k);
  if (!is_in_min_class(d, k))
    throw DomainError("diagram has a chord shorter than k=" + std::to_string(k));
  if (n < 3 * (n - k))
    throw DomainError("structural lemmas require n >= 3(n-k); got n=" +
                      std::to_string(n) + ", k=" + std::to_string(k));
  LemmaReport report;
  report.no_mid_mid_chord = true;
  for (const Chord& c : d.chords()) {
    const bool s_mid = rs.in_middle(c.start);
    const bool e_mid = rs.in_middle(c.end);
    if (s_mid && e_mid) report.no_mid_mid_chord = false;
    if (s_mid) ++report.mid_starts;
    if (e_mid) ++report.mid_ends;
  }
  return report;
}

}  // namespace chordkit
