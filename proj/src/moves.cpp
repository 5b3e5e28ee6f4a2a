#include "chordidx/moves.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include "chordidx/error.hpp"

namespace chordidx {

namespace {

[[noreturn]] void not_eligible(const std::string& why) { fail(ErrorCode::kSiteNotEligible, why); }

std::size_t next(std::size_t i, std::size_t n) { return (i + 1) % n; }

// Rebuilds a diagram from events, dropping the signs of crossings that no
// longer occur.
SurfaceDiagram rebuild(const SurfaceDiagram& d, ClosedWalk events, std::map<CrossingId, int> signs) {
  std::set<CrossingId> present;
  for (const Event& e : events)
    if (e.is_passage()) present.insert(e.crossing);
  for (auto it = signs.begin(); it != signs.end();)
    it = present.count(it->first) ? std::next(it) : signs.erase(it);
  return SurfaceDiagram::create(d.genus(), std::move(events), signs);
}

SurfaceDiagram remove_positions(const SurfaceDiagram& d, const std::vector<std::size_t>& positions) {
  std::vector<bool> drop(d.size(), false);
  for (auto p : positions) drop[p] = true;
  ClosedWalk events;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!drop[i]) events.push_back(d.events()[i]);
  return rebuild(d, std::move(events), d.signs());
}

std::size_t gap_count(const SurfaceDiagram& d) { return std::max<std::size_t>(d.size(), 1); }

// R1 removal site for crossing c, if its passages are adjacent.
std::optional<MoveSite> r1_remove_site(const SurfaceDiagram& d, CrossingId c) {
  const auto& info = d.crossing(c);
  const std::size_t n = d.size();
  const std::size_t a = info.over_pos, b = info.under_pos;
  MoveSite s;
  s.kind = MoveKind::kR1Remove;
  s.crossings = {c};
  if (next(a, n) == b)
    s.positions = {a, b};
  else if (next(b, n) == a)
    s.positions = {b, a};
  else
    return std::nullopt;
  return s;
}

bool adjacent(std::size_t a, std::size_t b, std::size_t n) { return next(a, n) == b || next(b, n) == a; }

std::optional<MoveSite> r2_remove_site(const SurfaceDiagram& d, CrossingId a, CrossingId b) {
  if (a == b) return std::nullopt;
  const auto& ia = d.crossing(a);
  const auto& ib = d.crossing(b);
  if (ia.sign == ib.sign) return std::nullopt;
  const std::size_t n = d.size();
  if (!adjacent(ia.over_pos, ib.over_pos, n) || !adjacent(ia.under_pos, ib.under_pos, n)) return std::nullopt;
  MoveSite s;
  s.kind = MoveKind::kR2Remove;
  s.crossings = {std::min(a, b), std::max(a, b)};
  s.positions = {ia.over_pos, ib.over_pos, ia.under_pos, ib.under_pos};
  return s;
}

struct R3Shape {
  CrossingId tm, tb, mb;
  int tag;
};

// Checks the three windows and returns the crossings and case tag.
std::optional<R3Shape> r3_shape(const SurfaceDiagram& d, std::size_t tw, std::size_t mw, std::size_t bw) {
  const std::size_t n = d.size();
  if (n < 6 || tw >= n || mw >= n || bw >= n) return std::nullopt;
  const auto& ev = d.events();
  const Event& t0 = ev[tw];
  const Event& t1 = ev[next(tw, n)];
  const Event& m0 = ev[mw];
  const Event& m1 = ev[next(mw, n)];
  const Event& b0 = ev[bw];
  const Event& b1 = ev[next(bw, n)];
  for (const Event* e : {&t0, &t1, &m0, &m1, &b0, &b1})
    if (!e->is_passage()) return std::nullopt;
  if (t0.layer != Layer::kOver || t1.layer != Layer::kOver) return std::nullopt;
  if (b0.layer != Layer::kUnder || b1.layer != Layer::kUnder) return std::nullopt;
  if (m0.layer == m1.layer) return std::nullopt;
  const Event& m_under = m0.layer == Layer::kUnder ? m0 : m1;
  const Event& m_over = m0.layer == Layer::kOver ? m0 : m1;
  const CrossingId tm = m_under.crossing;
  const CrossingId mb = m_over.crossing;
  CrossingId tb;
  if (t0.crossing == tm)
    tb = t1.crossing;
  else if (t1.crossing == tm)
    tb = t0.crossing;
  else
    return std::nullopt;
  if (tb == tm || mb == tm || mb == tb) return std::nullopt;
  if (!((b0.crossing == tb && b1.crossing == mb) || (b0.crossing == mb && b1.crossing == tb))) return std::nullopt;

  const auto tag = r3_case(t0.crossing == tm, m0.crossing == tm, b0.crossing == tb, d.sign(tm), d.sign(tb), d.sign(mb));
  if (!tag) return std::nullopt;
  return R3Shape{tm, tb, mb, *tag};
}

MoveSite make_r3_site(std::size_t tw, std::size_t mw, std::size_t bw, const R3Shape& s) {
  MoveSite site;
  site.kind = MoveKind::kR3;
  site.positions = {tw, mw, bw};
  site.crossings = {s.tm, s.tb, s.mb};
  site.r3_case = s.tag;
  return site;
}

// Start of the window holding positions a and b, if they are adjacent.
std::optional<std::size_t> window_start(std::size_t a, std::size_t b, std::size_t n) {
  if (next(a, n) == b) return a;
  if (next(b, n) == a) return b;
  return std::nullopt;
}

std::vector<MoveSite> r3_sites(const SurfaceDiagram& d) {
  std::vector<MoveSite> out;
  const std::size_t n = d.size();
  if (n < 6) return out;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  const auto& ev = d.events();
  for (std::size_t tw = 0; tw < n; ++tw) {
    const Event& t0 = ev[tw];
    const Event& t1 = ev[next(tw, n)];
    if (!t0.is_passage() || !t1.is_passage() || t0.layer != Layer::kOver || t1.layer != Layer::kOver) continue;
    for (CrossingId tm : {t0.crossing, t1.crossing}) {
      const CrossingId tb = tm == t0.crossing ? t1.crossing : t0.crossing;
      const std::size_t u = d.crossing(tm).under_pos;
      for (std::size_t other : {(u + n - 1) % n, next(u, n)}) {
        const Event& e = ev[other];
        if (!e.is_passage() || e.layer != Layer::kOver) continue;
        const CrossingId mb = e.crossing;
        if (mb == tm || mb == tb) continue;
        const auto bw = window_start(d.crossing(tb).under_pos, d.crossing(mb).under_pos, n);
        if (!bw) continue;
        const std::size_t mw = *window_start(u, other, n);
        if (!seen.insert({tw, mw, *bw}).second) continue;
        if (auto shape = r3_shape(d, tw, mw, *bw)) out.push_back(make_r3_site(tw, mw, *bw, *shape));
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const MoveSite& a, const MoveSite& b) { return a.positions < b.positions; });
  return out;
}

// Portable uniform integer in [0, bound).
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = rng.max() - (rng.max() % bound + 1) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x <= limit) return x % bound;
  }
}

}  // namespace

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::kR1Insert: return "R1-insert";
    case MoveKind::kR1Remove: return "R1-remove";
    case MoveKind::kR2Insert: return "R2-insert";
    case MoveKind::kR2Remove: return "R2-remove";
    case MoveKind::kR3: return "R3";
  }
  return "?";
}

std::optional<int> r3_case(bool top_meets_middle_first, bool middle_meets_top_first, bool bottom_meets_top_first,
                           int w_tm, int w_tb, int w_mb) {
  // Strands 0 (top), 1 (middle), 2 (bottom). first_meets[i][j]: strand i
  // passes its crossing with j before its crossing with the third strand.
  bool first_meets[3][3] = {};
  first_meets[0][1] = top_meets_middle_first;
  first_meets[0][2] = !top_meets_middle_first;
  first_meets[1][0] = middle_meets_top_first;
  first_meets[1][2] = !middle_meets_top_first;
  first_meets[2][0] = bottom_meets_top_first;
  first_meets[2][1] = !bottom_meets_top_first;
  const int w[3][3] = {{0, w_tm, w_tb}, {0, 0, w_mb}, {0, 0, 0}};
  const int orders[2][3] = {{1, 2, 0}, {2, 0, 1}};  // succ of each strand
  for (int tag = 0; tag < 2; ++tag) {
    const int* succ = orders[tag];
    int pred[3];
    for (int i = 0; i < 3; ++i) pred[succ[i]] = i;
    int tau[3];
    for (int i = 0; i < 3; ++i) tau[i] = first_meets[i][pred[i]] ? 1 : -1;
    bool ok = true;
    for (int i = 0; i < 3 && ok; ++i)
      for (int j = i + 1; j < 3 && ok; ++j) ok = w[i][j] == tau[i] * tau[j] * (succ[i] == j ? 1 : -1);
    if (ok) return tag;
  }
  return std::nullopt;
}

std::vector<MoveSite> find_sites(const SurfaceDiagram& d, MoveKind kind) {
  std::vector<MoveSite> out;
  switch (kind) {
    case MoveKind::kR1Insert:
      for (std::size_t g = 0; g < gap_count(d); ++g)
        for (bool over_first : {true, false})
          for (int sign : {1, -1}) {
            MoveSite s;
            s.kind = kind;
            s.positions = {g};
            s.over_first = over_first;
            s.sign = sign;
            out.push_back(s);
          }
      break;
    case MoveKind::kR1Remove:
      for (const auto& [id, info] : d.crossings())
        if (auto s = r1_remove_site(d, id)) out.push_back(*s);
      break;
    case MoveKind::kR2Insert:
      for (std::size_t p = 0; p < gap_count(d); ++p)
        for (std::size_t q = p; q < gap_count(d); ++q)
          for (bool over_first : {true, false})
            for (bool parallel : {false, true}) {
              // Two parallel strands cannot meet twice inside one gap.
              if (parallel && p == q) continue;
              for (int sign : {1, -1}) {
                MoveSite s;
                s.kind = kind;
                s.positions = {p, q};
                s.over_first = over_first;
                s.parallel = parallel;
                s.sign = sign;
                out.push_back(s);
              }
            }
      break;
    case MoveKind::kR2Remove:
      for (auto a = d.crossings().begin(); a != d.crossings().end(); ++a)
        for (auto b = std::next(a); b != d.crossings().end(); ++b)
          if (auto s = r2_remove_site(d, a->first, b->first)) out.push_back(*s);
      break;
    case MoveKind::kR3:
      out = r3_sites(d);
      break;
  }
  return out;
}

std::vector<MoveSite> find_all_sites(const SurfaceDiagram& d) {
  std::vector<MoveSite> out;
  for (MoveKind k : {MoveKind::kR1Insert, MoveKind::kR1Remove, MoveKind::kR2Insert, MoveKind::kR2Remove, MoveKind::kR3}) {
    auto s = find_sites(d, k);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

SurfaceDiagram r1(const SurfaceDiagram& d, const MoveSite& site) {
  if (site.kind == MoveKind::kR1Insert) {
    if (site.positions.size() != 1 || site.positions[0] >= gap_count(d)) not_eligible("R1 insert gap out of range");
    if (site.sign != 1 && site.sign != -1) not_eligible("R1 insert sign must be +1 or -1");
    const CrossingId id = d.max_crossing_id() + 1;
    ClosedWalk events = d.events();
    const auto at = events.begin() + static_cast<std::ptrdiff_t>(site.positions[0]);
    const Layer first = site.over_first ? Layer::kOver : Layer::kUnder;
    events.insert(at, {Event::passage(id, first), Event::passage(id, flipped(first))});
    auto signs = d.signs();
    signs[id] = site.sign;
    return SurfaceDiagram::create(d.genus(), std::move(events), signs);
  }
  if (site.kind == MoveKind::kR1Remove) {
    if (site.crossings.size() != 1 || !d.has_crossing(site.crossings[0])) not_eligible("R1 remove needs one crossing");
    const auto s = r1_remove_site(d, site.crossings[0]);
    if (!s) not_eligible("crossing " + std::to_string(site.crossings[0]) + " is not a kink");
    return remove_positions(d, s->positions);
  }
  not_eligible("not an R1 site");
}

SurfaceDiagram r2(const SurfaceDiagram& d, const MoveSite& site) {
  if (site.kind == MoveKind::kR2Insert) {
    if (site.positions.size() != 2) not_eligible("R2 insert needs two gaps");
    const std::size_t p = site.positions[0], q = site.positions[1];
    if (p > q || q >= gap_count(d)) not_eligible("R2 insert gaps out of range");
    if (site.parallel && p == q) not_eligible("parallel R2 needs two different gaps");
    if (site.sign != 1 && site.sign != -1) not_eligible("R2 insert sign must be +1 or -1");
    const CrossingId c1 = d.max_crossing_id() + 1, c2 = c1 + 1;
    const Layer x = site.over_first ? Layer::kOver : Layer::kUnder;
    const Layer y = flipped(x);
    const ClosedWalk first = {Event::passage(c1, x), Event::passage(c2, x)};
    const ClosedWalk second = site.parallel ? ClosedWalk{Event::passage(c1, y), Event::passage(c2, y)}
                                            : ClosedWalk{Event::passage(c2, y), Event::passage(c1, y)};
    ClosedWalk events;
    for (std::size_t i = 0; i <= d.size(); ++i) {
      if (i == p) events.insert(events.end(), first.begin(), first.end());
      if (i == q) events.insert(events.end(), second.begin(), second.end());
      if (i < d.size()) events.push_back(d.events()[i]);
    }
    auto signs = d.signs();
    signs[c1] = site.sign;
    signs[c2] = -site.sign;
    return SurfaceDiagram::create(d.genus(), std::move(events), signs);
  }
  if (site.kind == MoveKind::kR2Remove) {
    if (site.crossings.size() != 2 || !d.has_crossing(site.crossings[0]) || !d.has_crossing(site.crossings[1]))
      not_eligible("R2 remove needs two crossings of the diagram");
    const auto s = r2_remove_site(d, site.crossings[0], site.crossings[1]);
    if (!s) not_eligible("crossings do not form a removable bigon");
    return remove_positions(d, s->positions);
  }
  not_eligible("not an R2 site");
}

SurfaceDiagram r3(const SurfaceDiagram& d, const MoveSite& site) {
  if (site.kind != MoveKind::kR3 || site.positions.size() != 3) not_eligible("not an R3 site");
  const std::size_t tw = site.positions[0], mw = site.positions[1], bw = site.positions[2];
  if (!r3_shape(d, tw, mw, bw)) not_eligible("windows do not form an R3 triangle");
  ClosedWalk events = d.events();
  const std::size_t n = d.size();
  for (std::size_t w : {tw, mw, bw}) std::swap(events[w], events[next(w, n)]);
  return SurfaceDiagram::create(d.genus(), std::move(events), d.signs());
}

SurfaceDiagram apply(const SurfaceDiagram& d, const MoveSite& site) {
  switch (site.kind) {
    case MoveKind::kR1Insert:
    case MoveKind::kR1Remove: return r1(d, site);
    case MoveKind::kR2Insert:
    case MoveKind::kR2Remove: return r2(d, site);
    case MoveKind::kR3: return r3(d, site);
  }
  not_eligible("unknown move kind");
}

SurfaceDiagram random_diagram(int genus, int crossings, int side_events, std::uint64_t seed) {
  if (genus < 0 || crossings < 0 || side_events < 0) fail(ErrorCode::kInvalidArgument, "counts must be non-negative");
  if (genus == 0 && side_events > 0) fail(ErrorCode::kInvalidArgument, "a sphere has no side curves");
  std::mt19937_64 rng(seed);
  ClosedWalk events;
  std::map<CrossingId, int> signs;
  for (CrossingId c = 1; c <= crossings; ++c) {
    events.push_back(Event::over(c));
    events.push_back(Event::under(c));
    signs[c] = uniform_below(rng, 2) ? 1 : -1;
  }
  for (int i = 0; i < side_events; ++i) {
    const int k = 1 + static_cast<int>(uniform_below(rng, 2 * static_cast<std::uint64_t>(genus)));
    events.push_back(Event::side(k, uniform_below(rng, 2) ? 1 : -1));
  }
  for (std::size_t i = events.size(); i > 1; --i) std::swap(events[i - 1], events[uniform_below(rng, i)]);
  return SurfaceDiagram::create(genus, std::move(events), signs);
}

}  // namespace chordidx
