#include "chordidx/codec.hpp"

#include <charconv>
#include <set>
#include <sstream>
#include <vector>

#include "chordidx/error.hpp"

namespace chordidx {

namespace {

bool parse_int(const std::string& s, std::int64_t& out) {
  if (s.empty()) return false;
  const char* first = s.data();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::string> split(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

struct Token {
  char letter;
  std::int64_t index;
  int sign;
};

Token read_token(const std::string& tok) {
  auto bad = [&]() -> Token { fail(ErrorCode::kMalformedToken, "unknown walk token '" + tok + "'"); };
  if (tok.size() < 3) return bad();
  const char letter = tok[0];
  if (letter != 'O' && letter != 'U' && letter != 'a' && letter != 'b') return bad();
  const char s = tok.back();
  if (s != '+' && s != '-') return bad();
  const std::string digits = tok.substr(1, tok.size() - 2);
  for (char ch : digits)
    if (ch < '0' || ch > '9') return bad();
  std::int64_t index = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) return bad();
  if (index <= 0) return bad();
  return Token{letter, index, s == '+' ? 1 : -1};
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

HomologyClass parse_class(const std::string& text, int genus) {
  const auto parts = split(text);
  std::vector<std::int64_t> coords;
  for (const auto& p : parts) {
    std::int64_t v = 0;
    if (!parse_int(p, v)) fail(ErrorCode::kNonInteger, "class entry '" + p + "' is not an integer");
    coords.push_back(v);
  }
  if (genus < 0) fail(ErrorCode::kInvalidArgument, "genus must be non-negative");
  if (coords.size() != 2 * static_cast<std::size_t>(genus))
    fail(ErrorCode::kWrongLength, "class needs " + std::to_string(2 * genus) + " entries, got " +
                                      std::to_string(coords.size()));
  return HomologyClass(std::move(coords));
}

DiagramFile parse_diagram_file(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  std::vector<std::string> lines;
  while (std::getline(in, raw)) {
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    lines.push_back(line);
  }

  std::size_t i = 0;
  if (i >= lines.size() || split(lines[i]).front() != "genus")
    fail(ErrorCode::kMissingGenusHeader, "diagram must start with a 'genus <g>' line");
  const auto head = split(lines[i++]);
  std::int64_t g = 0;
  if (head.size() != 2 || !parse_int(head[1], g) || g < 0 || g > 1'000'000)
    fail(ErrorCode::kMalformedToken, "bad genus line '" + lines[i - 1] + "'");
  const int genus = static_cast<int>(g);

  if (i >= lines.size()) fail(ErrorCode::kMalformedToken, "missing 'walk' line");
  const auto walk_tokens = split(lines[i++]);
  if (walk_tokens.front() == "genus") fail(ErrorCode::kMalformedToken, "genus declared more than once");
  if (walk_tokens.front() != "walk") fail(ErrorCode::kMalformedToken, "expected 'walk', got '" + walk_tokens.front() + "'");

  ClosedWalk events;
  std::map<CrossingId, int> signs;
  std::set<std::pair<CrossingId, Layer>> seen;
  for (std::size_t k = 1; k < walk_tokens.size(); ++k) {
    const Token t = read_token(walk_tokens[k]);
    if (t.letter == 'O' || t.letter == 'U') {
      const Layer layer = t.letter == 'O' ? Layer::kOver : Layer::kUnder;
      if (!seen.insert({t.index, layer}).second)
        fail(ErrorCode::kDuplicatePassage, "crossing " + std::to_string(t.index) + " has two " +
                                               (layer == Layer::kOver ? "over" : "under") + " passages");
      auto [it, inserted] = signs.emplace(t.index, t.sign);
      if (!inserted && it->second != t.sign)
        fail(ErrorCode::kSignMismatch, "crossing " + std::to_string(t.index) + " carries two different signs");
      events.push_back(Event::passage(t.index, layer));
    } else {
      if (t.index > genus)
        fail(ErrorCode::kSideIndexOutOfRange,
             "handle index " + std::to_string(t.index) + " outside 1.." + std::to_string(genus));
      const int k2 = static_cast<int>(t.letter == 'a' ? 2 * t.index - 1 : 2 * t.index);
      events.push_back(Event::side(k2, t.sign));
    }
  }

  DiagramFile out;
  out.diagram = SurfaceDiagram::create(genus, std::move(events), signs);

  if (i < lines.size()) {
    const auto parts = split(lines[i]);
    if (parts.front() == "genus") fail(ErrorCode::kMalformedToken, "genus declared more than once");
    if (parts.front() != "class") fail(ErrorCode::kMalformedToken, "unexpected line '" + lines[i] + "'");
    out.alpha = parse_class(lines[i].substr(5), genus);
    ++i;
  }
  if (i < lines.size()) fail(ErrorCode::kMalformedToken, "unexpected line '" + lines[i] + "'");
  return out;
}

SurfaceDiagram parse_diagram(const std::string& text) { return parse_diagram_file(text).diagram; }

std::string serialize_event(const Event& e, const SurfaceDiagram& d) {
  std::string s;
  if (e.is_passage()) {
    s += e.layer == Layer::kOver ? 'O' : 'U';
    s += std::to_string(e.crossing);
    s += d.sign(e.crossing) > 0 ? '+' : '-';
  } else {
    s += e.basis_index % 2 == 1 ? 'a' : 'b';
    s += std::to_string((e.basis_index + 1) / 2);
    s += e.direction > 0 ? '+' : '-';
  }
  return s;
}

std::string serialize_diagram(const SurfaceDiagram& d) {
  std::string out = "genus " + std::to_string(d.genus()) + "\nwalk";
  for (const Event& e : d.events()) {
    out += ' ';
    out += serialize_event(e, d);
  }
  return out;
}

}  // namespace chordidx
