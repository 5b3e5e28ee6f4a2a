#include "chordidx/verify.hpp"

#include <functional>
#include <random>

#include "chordidx/codec.hpp"
#include "chordidx/error.hpp"
#include "chordidx/invariants.hpp"

namespace chordidx {

namespace {

class Check {
 public:
  explicit Check(std::string name) { r_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& why) {
    ++r_.cases;
    if (ok || !r_.passed) {
      if (!ok) r_.passed = false;
      return;
    }
    r_.passed = false;
    r_.detail = why();
  }

  CheckResult result() && { return std::move(r_); }

 private:
  CheckResult r_;
};

std::int64_t draw(std::uint64_t& state, std::int64_t lo, std::int64_t hi) {
  // splitmix64
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z ^= z >> 31;
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<std::int64_t>(z % span);
}

std::map<CrossingId, std::int64_t> scaled(std::map<CrossingId, std::int64_t> f, std::int64_t k) {
  for (auto& [c, v] : f) v = mul(k, v);
  return f;
}

std::map<CrossingId, std::int64_t> summed(std::map<CrossingId, std::int64_t> a,
                                          const std::map<CrossingId, std::int64_t>& b) {
  for (auto& [c, v] : a) v = add(v, b.at(c));
  return a;
}

std::string site_name(const MoveSite& s) {
  std::string out(to_string(s.kind));
  out += " at";
  for (auto p : s.positions) out += " " + std::to_string(p);
  return out;
}

}  // namespace

HomologyClass random_admissible(const SurfaceDiagram& d, int bound, std::uint64_t& state) {
  HomologyClass a = HomologyClass::zero(d.genus());
  for (const auto& b : admissible_subgroup_basis(d)) a += draw(state, -bound, bound) * b;
  return a;
}

int r3_visit_order(const MoveSite& site) {
  const std::size_t t = site.positions[0], m = site.positions[1], b = site.positions[2];
  return ((t < m && m < b) || (m < b && b < t) || (b < t && t < m)) ? 1 : 0;
}

bool r3_uniform_identity(const SurfaceDiagram& /*d*/, const SegmentClasses& seg, const MoveSite& site) {
  const CrossingId tm = site.crossings[0], tb = site.crossings[1], mb = site.crossings[2];
  const std::int64_t k = r3_visit_order(site);
  return seg.under_to_over(tb) + k * seg.total() == seg.under_to_over(tm) + seg.under_to_over(mb);
}

std::string r3_displayed_identity(const SurfaceDiagram& d, const SegmentClasses& seg, const MoveSite& site) {
  const HomologyClass& D = seg.total();
  for (int side = 0; side < 2; ++side) {
    const char* label = side == 0 ? "right" : "left";
    std::map<CrossingId, HomologyClass> x;
    for (CrossingId c : site.crossings) {
      auto [l, r] = smoothing_classes(d, seg, c);
      x[c] = side == 0 ? r : l;
    }
    const auto& c = site.crossings;
    if (x[c[0]] + x[c[1]] + x[c[2]] == D) return std::string(label) + ": sum equals [D]";
    for (int i = 0; i < 3; ++i) {
      const CrossingId a = c[i], b = c[(i + 1) % 3], e = c[(i + 2) % 3];
      if (x[a] + D == x[b] + x[e]) return std::string(label) + ": crossing " + std::to_string(a) + " plus [D]";
    }
  }
  return "";
}

RegularElement r1_regular_change(const SurfaceDiagram& before, const MoveSite& site) {
  const HomologyClass zero = HomologyClass::zero(before.genus());
  const HomologyClass D = walk_class(before);
  RegularElement out;
  int w = 0;
  bool over_first = true;
  if (site.kind == MoveKind::kR1Insert) {
    w = site.sign;
    over_first = site.over_first;
  } else if (site.kind == MoveKind::kR1Remove) {
    const auto& info = before.crossing(site.crossings.at(0));
    w = -info.sign;
    over_first = site.positions.at(0) == info.over_pos;
  } else {
    fail(ErrorCode::kInvalidArgument, "not an R1 site");
  }
  // O then U: empty over->under segment; U then O: empty under->over segment.
  out.add(over_first ? zero : D, BivariatePoly::x(w));
  out.add(over_first ? D : zero, BivariatePoly::y(w));
  return out;
}

std::vector<CheckResult> run_checks(const SurfaceDiagram& d, const std::optional<HomologyClass>& alpha,
                                    std::uint64_t seed) {
  std::vector<CheckResult> out;
  std::uint64_t state = seed;
  const HomologyClass D = walk_class(d);
  const auto basis = admissible_subgroup_basis(d);

  // Classes used by the remaining checks: the given one when admissible,
  // the admissible basis, and one random admissible class.
  std::vector<HomologyClass> classes;
  {
    Check c("coloring_closure");
    if (alpha) {
      const std::int64_t p = alpha->rank() == D.rank() ? intersection(*alpha, D) : 1;
      bool closed = true;
      std::string why;
      try {
        coloring(d, *alpha);
      } catch (const Error& e) {
        closed = false;
        why = e.what();
      }
      c.expect(closed == (p == 0), [&] { return "class " + alpha->to_string() + ": " + why; });
      c.expect(p == 0, [&] {
        return "class " + alpha->to_string() + " pairs to " + std::to_string(p) + " with the knot class";
      });
      if (p == 0) classes.push_back(*alpha);
    }
    // A class dual to [D] pairs nontrivially whenever [D] != 0 and must be refused.
    if (!D.is_zero()) {
      HomologyClass dual = HomologyClass::zero(d.genus());
      for (std::size_t i = 0; i + 1 < D.rank(); i += 2) {
        dual[i] = D[i + 1];
        dual[i + 1] = neg(D[i]);
      }
      bool refused = false;
      try {
        coloring(d, dual);
      } catch (const Error&) {
        refused = true;
      }
      c.expect(refused, [&] { return "colouring closed for non-admissible " + dual.to_string(); });
    }
    out.push_back(std::move(c).result());
  }
  classes.insert(classes.end(), basis.begin(), basis.end());
  classes.push_back(random_admissible(d, 5, state));

  {
    Check c("coloring_agreement");
    for (const auto& a : classes)
      c.expect(chord_indices(d, a) == chord_indices_by_coloring(d, a),
               [&] { return "colouring and homological indices differ for " + a.to_string(); });
    out.push_back(std::move(c).result());
  }

  {
    Check c("linearity");
    for (int trial = 0; trial < 20; ++trial) {
      const HomologyClass a = random_admissible(d, 5, state);
      const HomologyClass b = random_admissible(d, 5, state);
      const auto fa = chord_indices(d, a);
      const auto fb = chord_indices(d, b);
      c.expect(chord_indices(d, a + b) == summed(fa, fb),
               [&] { return "f(a+b) != f(a)+f(b) for a=" + a.to_string() + " b=" + b.to_string(); });
      c.expect(chord_indices(d, -a) == scaled(fa, -1), [&] { return "f(-a) != -f(a) for " + a.to_string(); });
    }
    out.push_back(std::move(c).result());
  }

  {
    Check c("smoothing_sum");
    const SegmentClasses seg(d);
    for (const auto& [id, info] : d.crossings()) {
      auto [l, r] = smoothing_classes(d, seg, id);
      c.expect(l + r == D, [&] { return "smoothings at " + std::to_string(id) + " do not add to [D]"; });
    }
    out.push_back(std::move(c).result());
  }

  {
    Check c("r3_identities");
    const SegmentClasses seg(d);
    for (const auto& site : find_sites(d, MoveKind::kR3)) {
      const CrossingId tm = site.crossings[0], tb = site.crossings[1], mb = site.crossings[2];
      c.expect(r3_uniform_identity(d, seg, site), [&] { return "uniform identity fails " + site_name(site); });
      c.expect(!r3_displayed_identity(d, seg, site).empty(),
               [&] { return "no displayed identity holds " + site_name(site); });
      for (const auto& a : classes) {
        const auto f = chord_indices(d, a);
        c.expect(f.at(tb) == f.at(tm) + f.at(mb), [&] { return "f not additive " + site_name(site); });
        const int odd = static_cast<int>(floor_mod(f.at(tb), 2) + floor_mod(f.at(tm), 2) + floor_mod(f.at(mb), 2));
        c.expect(odd != 3, [&] { return "all-odd triple " + site_name(site); });
      }
    }
    out.push_back(std::move(c).result());
  }

  {
    Check c("move_invariance");
    const HomologyClass& a = classes.back();
    const InvariantSet before = evaluate_invariants(d, a);
    const auto ind_before = virtual_writhe_polynomial(gauss_diagram(d));
    for (const auto& site : find_all_sites(d)) {
      const SurfaceDiagram e = apply(d, site);
      const InvariantSet after = evaluate_invariants(e, a);
      c.expect(after.writhe_polynomial == before.writhe_polynomial && after.group_ring == before.group_ring &&
                   after.small_state_sum == before.small_state_sum && after.transcendental == before.transcendental,
               [&] { return "invariant changed by " + site_name(site); });
      c.expect(virtual_writhe_polynomial(gauss_diagram(e)) == ind_before,
               [&] { return "virtual writhe polynomial changed by " + site_name(site); });
      RegularElement expected = before.regular;
      if (site.kind == MoveKind::kR1Insert || site.kind == MoveKind::kR1Remove) expected += r1_regular_change(d, site);
      c.expect(after.regular == expected, [&] { return "regular invariant off after " + site_name(site); });
    }
    out.push_back(std::move(c).result());
  }

  {
    Check c("symmetries");
    const SurfaceDiagram rev = reverse_orientation(d);
    const SurfaceDiagram mir = mirror(d);
    for (const auto& a : classes) {
      const LaurentPoly w = writhe_polynomial(d, a);
      c.expect(writhe_polynomial(rev, a) == w, [&] { return "reversal changed W for " + a.to_string(); });
      c.expect(writhe_polynomial(mir, a) == -w.inverted(), [&] { return "mirror rule fails for " + a.to_string(); });
      c.expect(writhe_polynomial(d, -a) == w.inverted(), [&] { return "antipode rule fails for " + a.to_string(); });
    }
    c.expect(writhe_polynomial(rev, -D) == writhe_polynomial(d, D).inverted(),
             [&] { return std::string("reversal with the knot class fails"); });
    for (std::size_t k = 1; k < d.size(); ++k) {
      const SurfaceDiagram r = rotate(d, k);
      c.expect(chord_indices(r, classes.back()) == chord_indices(d, classes.back()),
               [&] { return "basepoint " + std::to_string(k) + " changes the indices"; });
    }
    out.push_back(std::move(c).result());
  }

  {
    Check c("ind_sum");
    const GaussDiagram g = gauss_diagram(d);
    std::int64_t s = 0;
    for (const Chord& ch : g.chords()) {
      s += ch.sign * ind(g, ch.id);
      c.expect(index_function(d, classes.back(), ch.id).at_one() == ind(g, ch.id),
               [&] { return "index function at s=1 differs from Ind at " + std::to_string(ch.id); });
    }
    c.expect(s == 0, [&] { return "writhe-weighted Ind values sum to " + std::to_string(s); });
    out.push_back(std::move(c).result());
  }

  {
    Check c("codec_round_trip");
    c.expect(parse_diagram(serialize_diagram(d)) == d, [] { return std::string("round trip changed the diagram"); });
    out.push_back(std::move(c).result());
  }
  return out;
}

}  // namespace chordidx
