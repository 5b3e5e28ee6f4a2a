#include "chordidx/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "chordidx/error.hpp"

namespace chordidx {

namespace {

std::string crossing_name(CrossingId id) { return "crossing " + std::to_string(id); }

struct PassageSlots {
  bool has_over = false;
  bool has_under = false;
  std::size_t over_pos = 0;
  std::size_t under_pos = 0;
};

// Shared by SurfaceDiagram::create and the Gauss-code reader.
void record_passage(std::map<CrossingId, PassageSlots>& slots, CrossingId id, Layer layer,
                    std::size_t pos) {
  if (id <= 0) fail(ErrorCode::kMalformedToken, "crossing ids must be positive, got " + std::to_string(id));
  auto& s = slots[id];
  if (layer == Layer::kOver) {
    if (s.has_over) fail(ErrorCode::kDuplicatePassage, crossing_name(id) + " has two over passages");
    s.has_over = true;
    s.over_pos = pos;
  } else {
    if (s.has_under) fail(ErrorCode::kDuplicatePassage, crossing_name(id) + " has two under passages");
    s.has_under = true;
    s.under_pos = pos;
  }
}

void require_complete(const std::map<CrossingId, PassageSlots>& slots) {
  for (const auto& [id, s] : slots) {
    if (!s.has_over || !s.has_under)
      fail(ErrorCode::kMalformedToken,
           crossing_name(id) + " is missing its " + (s.has_over ? "under" : "over") + " passage");
  }
}

}  // namespace

SurfaceDiagram SurfaceDiagram::create(int genus, ClosedWalk events, const std::map<CrossingId, int>& signs) {
  if (genus < 0) fail(ErrorCode::kInvalidArgument, "genus must be non-negative");
  std::map<CrossingId, PassageSlots> slots;
  for (std::size_t i = 0; i < events.size(); ++i) {
    const Event& e = events[i];
    if (e.is_passage()) {
      record_passage(slots, e.crossing, e.layer, i);
    } else {
      if (e.basis_index < 1 || e.basis_index > 2 * genus)
        fail(ErrorCode::kSideIndexOutOfRange,
             "side index " + std::to_string(e.basis_index) + " outside 1.." + std::to_string(2 * genus));
      if (e.direction != 1 && e.direction != -1)
        fail(ErrorCode::kInvalidArgument, "side direction must be +1 or -1");
    }
  }
  require_complete(slots);

  SurfaceDiagram d;
  d.genus_ = genus;
  for (const auto& [id, s] : slots) {
    auto it = signs.find(id);
    if (it == signs.end()) fail(ErrorCode::kSignMismatch, crossing_name(id) + " has no sign");
    if (it->second != 1 && it->second != -1)
      fail(ErrorCode::kSignMismatch, crossing_name(id) + " sign must be +1 or -1");
    d.crossings_[id] = CrossingInfo{it->second, s.over_pos, s.under_pos};
  }
  for (const auto& [id, sign] : signs) {
    if (!slots.count(id)) fail(ErrorCode::kUnknownCrossing, crossing_name(id) + " has a sign but no passages");
  }
  d.events_ = std::move(events);
  return d;
}

const CrossingInfo& SurfaceDiagram::crossing(CrossingId id) const {
  auto it = crossings_.find(id);
  if (it == crossings_.end()) fail(ErrorCode::kUnknownCrossing, crossing_name(id) + " is not in the diagram");
  return it->second;
}

std::map<CrossingId, int> SurfaceDiagram::signs() const {
  std::map<CrossingId, int> out;
  for (const auto& [id, info] : crossings_) out[id] = info.sign;
  return out;
}

CrossingId SurfaceDiagram::max_crossing_id() const {
  return crossings_.empty() ? 0 : crossings_.rbegin()->first;
}

ClosedWalk cyclic_segment(const ClosedWalk& walk, std::size_t from, std::size_t to) {
  ClosedWalk out;
  const std::size_t n = walk.size();
  if (n == 0) return out;
  for (std::size_t i = (from + 1) % n; i != to; i = (i + 1) % n) out.push_back(walk[i]);
  return out;
}

GaussDiagram::GaussDiagram(std::vector<Chord> chords) : chords_(std::move(chords)) {
  std::vector<bool> used(slot_count(), false);
  auto take = [&](std::size_t p) {
    if (p >= used.size() || used[p]) fail(ErrorCode::kInvalidArgument, "Gauss diagram endpoint slots must be a permutation");
    used[p] = true;
  };
  for (const Chord& c : chords_) {
    take(c.over_pos);
    take(c.under_pos);
  }
}

const Chord& GaussDiagram::chord(CrossingId id) const {
  for (const Chord& c : chords_)
    if (c.id == id) return c;
  fail(ErrorCode::kUnknownChord, "chord " + std::to_string(id) + " is not in the Gauss diagram");
}

bool GaussDiagram::on_over_arc(const Chord& c, std::size_t pos, std::size_t slots) {
  const std::size_t span = (c.under_pos + slots - c.over_pos) % slots;
  const std::size_t off = (pos + slots - c.over_pos) % slots;
  return off != 0 && off < span;
}

bool GaussDiagram::interleaved(const Chord& a, const Chord& b) {
  auto inside = [&](std::size_t p) {
    const auto lo = std::min(a.over_pos, a.under_pos);
    const auto hi = std::max(a.over_pos, a.under_pos);
    return p > lo && p < hi;
  };
  return inside(b.over_pos) != inside(b.under_pos);
}

GaussDiagram gauss_diagram(const SurfaceDiagram& d) {
  std::vector<std::size_t> slot(d.size(), 0);
  std::size_t next = 0;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d.events()[i].is_passage()) slot[i] = next++;
  std::vector<Chord> chords;
  chords.reserve(d.crossing_count());
  for (const auto& [id, info] : d.crossings())
    chords.push_back(Chord{id, info.sign, slot[info.over_pos], slot[info.under_pos]});
  return GaussDiagram(std::move(chords));
}

GaussDiagram parse_gauss_code(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  std::map<CrossingId, PassageSlots> slots;
  std::map<CrossingId, int> signs;
  std::size_t pos = 0;
  while (in >> tok) {
    if (tok.size() < 3 || (tok[0] != 'O' && tok[0] != 'U') || (tok.back() != '+' && tok.back() != '-'))
      fail(ErrorCode::kMalformedToken, "bad Gauss code token '" + tok + "'");
    const std::string digits = tok.substr(1, tok.size() - 2);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
        digits.size() > 15)
      fail(ErrorCode::kMalformedToken, "bad Gauss code token '" + tok + "'");
    const CrossingId id = std::stoll(digits);
    const int sign = tok.back() == '+' ? 1 : -1;
    record_passage(slots, id, tok[0] == 'O' ? Layer::kOver : Layer::kUnder, pos++);
    auto [it, inserted] = signs.emplace(id, sign);
    if (!inserted && it->second != sign)
      fail(ErrorCode::kSignMismatch, crossing_name(id) + " carries two different signs");
  }
  require_complete(slots);
  std::vector<Chord> chords;
  for (const auto& [id, s] : slots) chords.push_back(Chord{id, signs[id], s.over_pos, s.under_pos});
  return GaussDiagram(std::move(chords));
}

int writhe(const SurfaceDiagram& d) {
  int w = 0;
  for (const auto& [id, info] : d.crossings()) w += info.sign;
  return w;
}

ClosedWalk over_to_under(const SurfaceDiagram& d, CrossingId c) {
  const auto& info = d.crossing(c);
  return cyclic_segment(d.events(), info.over_pos, info.under_pos);
}

ClosedWalk under_to_over(const SurfaceDiagram& d, CrossingId c) {
  const auto& info = d.crossing(c);
  return cyclic_segment(d.events(), info.under_pos, info.over_pos);
}

SmoothingPair smooth(const SurfaceDiagram& d, CrossingId c) {
  const auto& info = d.crossing(c);
  SmoothingPair out;
  if (info.sign > 0) {
    out.right = under_to_over(d, c);
    out.left = over_to_under(d, c);
  } else {
    out.right = over_to_under(d, c);
    out.left = under_to_over(d, c);
  }
  return out;
}

SurfaceDiagram reverse_orientation(const SurfaceDiagram& d) {
  ClosedWalk events(d.events().rbegin(), d.events().rend());
  for (Event& e : events)
    if (e.is_side()) e.direction = -e.direction;
  return SurfaceDiagram::create(d.genus(), std::move(events), d.signs());
}

SurfaceDiagram mirror(const SurfaceDiagram& d) {
  ClosedWalk events = d.events();
  for (Event& e : events)
    if (e.is_passage()) e.layer = flipped(e.layer);
  auto signs = d.signs();
  for (auto& [id, s] : signs) s = -s;
  return SurfaceDiagram::create(d.genus(), std::move(events), signs);
}

SurfaceDiagram rotate(const SurfaceDiagram& d, std::size_t k) {
  if (d.size() == 0) return d;
  ClosedWalk events = d.events();
  std::rotate(events.begin(), events.begin() + static_cast<std::ptrdiff_t>(k % events.size()), events.end());
  return SurfaceDiagram::create(d.genus(), std::move(events), d.signs());
}

SurfaceDiagram renumber(const SurfaceDiagram& d, CrossingId offset) {
  ClosedWalk events = d.events();
  for (Event& e : events)
    if (e.is_passage()) e.crossing += offset;
  std::map<CrossingId, int> signs;
  for (const auto& [id, s] : d.signs()) signs[id + offset] = s;
  return SurfaceDiagram::create(d.genus(), std::move(events), signs);
}

SurfaceDiagram band_sum(const SurfaceDiagram& d1, const SurfaceDiagram& d2, std::size_t site1,
                        std::size_t site2) {
  if (d1.genus() != d2.genus())
    fail(ErrorCode::kGenusMismatch, "band sum needs diagrams on the same genus (" + std::to_string(d1.genus()) +
                                        " vs " + std::to_string(d2.genus()) + ")");
  if (site1 > d1.size() || site2 > d2.size()) fail(ErrorCode::kInvalidArgument, "band sum gap out of range");

  bool overlap = false;
  for (const auto& [id, info] : d2.crossings()) overlap = overlap || d1.has_crossing(id);
  const SurfaceDiagram second = overlap ? renumber(d2, d1.max_crossing_id()) : d2;

  ClosedWalk events(d1.events().begin(), d1.events().begin() + static_cast<std::ptrdiff_t>(site1));
  const auto& e2 = second.events();
  for (std::size_t i = 0; i < e2.size(); ++i) events.push_back(e2[(site2 + i) % e2.size()]);
  events.insert(events.end(), d1.events().begin() + static_cast<std::ptrdiff_t>(site1), d1.events().end());

  auto signs = d1.signs();
  for (const auto& [id, s] : second.signs()) signs[id] = s;
  return SurfaceDiagram::create(d1.genus(), std::move(events), signs);
}

}  // namespace chordidx
