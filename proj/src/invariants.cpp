#include "chordidx/invariants.hpp"

#include "chordidx/checked.hpp"
#include "chordidx/error.hpp"

namespace chordidx {

LaurentPoly writhe_polynomial(const SurfaceDiagram& d, const HomologyClass& alpha) {
  LaurentPoly p;
  for (const auto& [id, f] : chord_indices(d, alpha))
    if (f != 0) p.add_term(f, d.sign(id));
  return p;
}

LaurentPoly virtual_writhe_polynomial(const GaussDiagram& g, bool normalized) {
  LaurentPoly p;
  std::int64_t w = 0;
  for (const Chord& c : g.chords()) {
    const std::int64_t i = ind(g, c.id);
    if (normalized || i != 0) p.add_term(i, c.sign);
    w += c.sign;
  }
  if (normalized) p.add_term(0, neg(w));
  return p;
}

GroupRingElement group_ring_invariant(const SurfaceDiagram& d) {
  const SegmentClasses seg(d);
  GroupRingElement out;
  for (const auto& [id, info] : d.crossings()) {
    auto [left, right] = smoothing_classes(d, seg, id);
    out.add(left, info.sign);
    out.add(right, info.sign);
  }
  const std::int64_t w = writhe(d);
  out.add(seg.total(), neg(w));
  out.add(HomologyClass::zero(d.genus()), neg(w));
  return out;
}

GroupRingElement small_state_sum(const SurfaceDiagram& d) {
  const SegmentClasses seg(d);
  const CyclicQuotient q(seg.total());
  GroupRingElement out;
  for (const auto& [id, info] : d.crossings()) {
    auto [left, right] = smoothing_classes(d, seg, id);
    out.add(q.canonical(info.sign > 0 ? left : right), info.sign);
  }
  out.add(q.canonical(HomologyClass::zero(d.genus())), neg(writhe(d)));
  return out;
}

RegularElement regular_invariant(const SurfaceDiagram& d) {
  const SegmentClasses seg(d);
  RegularElement out;
  for (const auto& [id, info] : d.crossings()) {
    auto [left, right] = smoothing_classes(d, seg, id);
    const int w = info.sign;
    if (w > 0) {
      out.add(left, BivariatePoly::x(w));
      out.add(right, BivariatePoly::y(w));
    } else {
      out.add(left, BivariatePoly::y(w));
      out.add(right, BivariatePoly::x(w));
    }
  }
  return out;
}

FormalSum transcendental_invariant(const SurfaceDiagram& d, const HomologyClass& alpha) {
  const auto f = chord_indices(d, alpha);
  const GaussDiagram g = gauss_diagram(d);
  FormalSum out;
  for (const auto& [id, k] : f) {
    CyclicPoly poly(k < 0 ? neg(k) : k);
    const CrossingSides sides = crossing_sides(g, id);
    for (const Chord& r : sides.left_to_right) poly.add_term(f.at(r.id), r.sign);
    for (const Chord& l : sides.right_to_left) poly.add_term(neg(f.at(l.id)), -l.sign);
    out.add(FormalKey{k, std::move(poly)}, d.sign(id));
  }
  out.add(FormalKey{0, CyclicPoly(0)}, neg(writhe(d)));
  return out;
}

LaurentPoly collapse(const FormalSum& f) {
  LaurentPoly p;
  for (const auto& [key, c] : f.terms()) p.add_term(key.k, c);
  return p;
}

std::vector<HomologyClass> zero_class_scan(const SurfaceDiagram& d, int bound) {
  if (bound < 1) fail(ErrorCode::kInvalidArgument, "scan bound must be at least 1");
  const auto basis = admissible_subgroup_basis(d);
  std::vector<HomologyClass> out;
  if (basis.empty()) return out;
  std::vector<std::int64_t> n(basis.size(), -bound);
  for (;;) {
    HomologyClass alpha = HomologyClass::zero(d.genus());
    for (std::size_t i = 0; i < basis.size(); ++i) alpha += n[i] * basis[i];
    if (!alpha.is_zero() && writhe_polynomial(d, alpha).is_zero()) out.push_back(std::move(alpha));
    std::size_t i = basis.size();
    while (i > 0 && n[i - 1] == bound) n[--i] = -bound;
    if (i == 0) break;
    ++n[i - 1];
  }
  return out;
}

std::string to_string(const FormalKey& key) {
  return "t_" + std::to_string(key.k) + "^(" + key.exponent.to_string('s') + ")";
}

InvariantSet evaluate_invariants(const SurfaceDiagram& d, const HomologyClass& alpha) {
  require_admissible(alpha, d);
  const SegmentClasses seg(d);
  const CyclicQuotient quotient(seg.total());
  const GaussDiagram g = gauss_diagram(d);
  const auto& chords = g.chords();
  const std::size_t n = chords.size();
  const HomologyClass zero = HomologyClass::zero(d.genus());
  const std::int64_t w_total = writhe(d);

  InvariantSet out;
  // chords are in crossing-id order, matching d.crossings()
  std::vector<std::int64_t> f(n);
  std::size_t i = 0;
  for (const auto& [id, info] : d.crossings()) {
    HomologyClass uo = seg.between(info.under_pos, info.over_pos);
    HomologyClass ou = seg.between(info.over_pos, info.under_pos);
    const int w = info.sign;
    // left/right smoothing classes by sign
    const HomologyClass& left = w > 0 ? ou : uo;
    const HomologyClass& right = w > 0 ? uo : ou;
    f[i] = mul(w, intersection(alpha, right));
    if (f[i] != 0) out.writhe_polynomial.add_term(f[i], w);
    out.group_ring.add(left, w);
    out.group_ring.add(right, w);
    out.small_state_sum.add(quotient.canonical(w > 0 ? left : right), w);
    out.regular.add(left, w > 0 ? BivariatePoly::x(w) : BivariatePoly::y(w));
    out.regular.add(right, w > 0 ? BivariatePoly::y(w) : BivariatePoly::x(w));
    ++i;
  }
  out.group_ring.add(seg.total(), neg(w_total));
  out.group_ring.add(zero, neg(w_total));
  out.small_state_sum.add(quotient.canonical(zero), neg(w_total));

  const std::size_t slots = g.slot_count();
  for (std::size_t a = 0; a < n; ++a) {
    const std::int64_t k = f[a];
    CyclicPoly poly(k < 0 ? neg(k) : k);
    for (std::size_t b = 0; b < n; ++b) {
      if (b == a || !GaussDiagram::interleaved(chords[a], chords[b])) continue;
      if (GaussDiagram::on_over_arc(chords[a], chords[b].over_pos, slots))
        poly.add_term(f[b], chords[b].sign);
      else
        poly.add_term(neg(f[b]), -chords[b].sign);
    }
    out.transcendental.add(FormalKey{k, std::move(poly)}, chords[a].sign);
  }
  out.transcendental.add(FormalKey{0, CyclicPoly(0)}, neg(w_total));
  return out;
}

}  // namespace chordidx
