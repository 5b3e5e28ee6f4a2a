#include "chordidx/indices.hpp"

#include "chordidx/checked.hpp"
#include "chordidx/error.hpp"

namespace chordidx {

namespace {

// α·e_k for the basis vector e_k (k is 1-based).
std::int64_t pair_with_basis(const HomologyClass& alpha, int k) {
  const std::size_t i = static_cast<std::size_t>(k - 1);
  // (e_{2j-1})·: x·e_{2j-1} = -x_{2j}, x·e_{2j} = x_{2j-1}
  return i % 2 == 0 ? neg(alpha[i + 1]) : alpha[i - 1];
}

void require_rank(const HomologyClass& alpha, const SurfaceDiagram& d) {
  if (alpha.rank() != 2 * static_cast<std::size_t>(d.genus()))
    fail(ErrorCode::kLengthMismatch, "class has " + std::to_string(alpha.rank()) + " entries, diagram genus needs " +
                                         std::to_string(2 * d.genus()));
}

}  // namespace

void require_admissible(const HomologyClass& alpha, const SurfaceDiagram& d) {
  require_rank(alpha, d);
  const std::int64_t p = intersection(alpha, walk_class(d));
  if (p != 0)
    throw NotAdmissibleError(ErrorCode::kNotAdmissible, p,
                             "class " + alpha.to_string() + " pairs to " + std::to_string(p) + " with the knot class");
}

std::pair<HomologyClass, HomologyClass> smoothing_classes(const SurfaceDiagram& d, const SegmentClasses& seg,
                                                          CrossingId c) {
  const int w = d.sign(c);
  HomologyClass uo = seg.under_to_over(c);
  HomologyClass ou = seg.over_to_under(c);
  if (w > 0) return {std::move(ou), std::move(uo)};
  return {std::move(uo), std::move(ou)};
}

std::int64_t chord_index(const SurfaceDiagram& d, const HomologyClass& alpha, CrossingId c) {
  require_admissible(alpha, d);
  const SegmentClasses seg(d);
  const auto [left, right] = smoothing_classes(d, seg, c);
  return mul(d.sign(c), intersection(alpha, right));
}

std::map<CrossingId, std::int64_t> chord_indices(const SurfaceDiagram& d, const HomologyClass& alpha) {
  require_admissible(alpha, d);
  const SegmentClasses seg(d);
  std::map<CrossingId, std::int64_t> out;
  for (const auto& [id, info] : d.crossings()) {
    const auto [left, right] = smoothing_classes(d, seg, id);
    out[id] = mul(info.sign, intersection(alpha, right));
  }
  return out;
}

Coloring coloring(const SurfaceDiagram& d, const HomologyClass& alpha) {
  require_admissible(alpha, d);
  Coloring col;
  col.colors.push_back(0);
  col.arc_of.resize(d.size());
  std::int64_t current = 0;
  std::size_t arc = 0;
  std::size_t sides_left = 0;
  for (const Event& e : d.events()) sides_left += e.is_side() ? 1 : 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Event& e = d.events()[i];
    if (e.is_side()) {
      current = add(current, mul(e.direction, pair_with_basis(alpha, e.basis_index)));
      --sides_left;
      if (sides_left == 0) {
        // back on arc 0
        if (current != 0)
          throw NotAdmissibleError(ErrorCode::kNotAdmissible, current, "colouring does not close up");
        arc = 0;
      } else {
        col.colors.push_back(current);
        arc = col.colors.size() - 1;
      }
    }
    col.arc_of[i] = arc;
  }
  return col;
}

std::int64_t chord_index_by_coloring(const SurfaceDiagram& d, const Coloring& col, CrossingId c) {
  const auto& info = d.crossing(c);
  return sub(col.colors[col.arc_of[info.over_pos]], col.colors[col.arc_of[info.under_pos]]);
}

std::map<CrossingId, std::int64_t> chord_indices_by_coloring(const SurfaceDiagram& d, const HomologyClass& alpha) {
  const Coloring col = coloring(d, alpha);
  std::map<CrossingId, std::int64_t> out;
  for (const auto& [id, info] : d.crossings()) out[id] = chord_index_by_coloring(d, col, id);
  return out;
}

CrossingSides crossing_sides(const GaussDiagram& g, CrossingId c) {
  const Chord& cc = g.chord(c);
  CrossingSides out;
  for (const Chord& other : g.chords()) {
    if (other.id == c || !GaussDiagram::interleaved(cc, other)) continue;
    if (GaussDiagram::on_over_arc(cc, other.over_pos, g.slot_count()))
      out.left_to_right.push_back(other);
    else
      out.right_to_left.push_back(other);
  }
  return out;
}

std::int64_t ind(const GaussDiagram& g, CrossingId c) {
  const CrossingSides sides = crossing_sides(g, c);
  std::int64_t s = 0;
  for (const Chord& r : sides.left_to_right) s += r.sign;
  for (const Chord& l : sides.right_to_left) s -= l.sign;
  return s;
}

int parity(const SurfaceDiagram& d, const HomologyClass& alpha, CrossingId c) {
  require_rank(alpha, d);
  const std::int64_t p = intersection(alpha, walk_class(d));
  if (floor_mod(p, 2) != 0)
    throw NotAdmissibleError(ErrorCode::kNotMod2Admissible, p,
                             "class " + alpha.to_string() + " pairs oddly with the knot class");
  const auto& info = d.crossing(c);
  if (p == 0) return static_cast<int>(floor_mod(chord_index(d, alpha, c), 2));
  // Z/2 colouring: arcs coloured 0/1, flipping at side events paired oddly with α.
  int color = 0, over_color = 0, under_color = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Event& e = d.events()[i];
    if (e.is_side()) color ^= static_cast<int>(floor_mod(pair_with_basis(alpha, e.basis_index), 2));
    if (i == info.over_pos) over_color = color;
    if (i == info.under_pos) under_color = color;
  }
  return (over_color + under_color) % 2;
}

GroupRingElement group_index(const SurfaceDiagram& d, CrossingId c) {
  const SegmentClasses seg(d);
  auto [left, right] = smoothing_classes(d, seg, c);
  GroupRingElement g;
  g.add(left, 1);
  g.add(right, 1);
  return g;
}

HomologyClass fiedler_index(const SurfaceDiagram& d, CrossingId c) {
  const SegmentClasses seg(d);
  auto [left, right] = smoothing_classes(d, seg, c);
  return d.sign(c) > 0 ? left : right;
}

RegularElement regular_index(const SurfaceDiagram& d, CrossingId c) {
  const SegmentClasses seg(d);
  auto [left, right] = smoothing_classes(d, seg, c);
  RegularElement r;
  if (d.sign(c) > 0) {
    r.add(left, BivariatePoly::x());
    r.add(right, BivariatePoly::y());
  } else {
    r.add(left, BivariatePoly::y());
    r.add(right, BivariatePoly::x());
  }
  return r;
}

CyclicPoly index_function(const SurfaceDiagram& d, const HomologyClass& alpha, CrossingId c) {
  const auto f = chord_indices(d, alpha);
  if (!d.has_crossing(c)) d.crossing(c);
  const std::int64_t k = f.at(c);
  CyclicPoly poly(k < 0 ? neg(k) : k);
  const CrossingSides sides = crossing_sides(gauss_diagram(d), c);
  for (const Chord& r : sides.left_to_right) poly.add_term(f.at(r.id), r.sign);
  for (const Chord& l : sides.right_to_left) poly.add_term(neg(f.at(l.id)), -l.sign);
  return poly;
}

}  // namespace chordidx
