#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "chordidx/diagram.hpp"
#include "chordidx/homology.hpp"
#include "chordidx/polynomial.hpp"

namespace chordidx {

using GroupRingElement = FreeModule<HomologyClass, std::int64_t>;
using RegularElement = FreeModule<HomologyClass, BivariatePoly>;

/// Throws NotAdmissibleError (code NotAdmissible) unless α·[D] = 0.
void require_admissible(const HomologyClass& alpha, const SurfaceDiagram& d);

/// f(c) = w(c) · α·[D_c^r]. Throws NotAdmissible, UnknownCrossing, LengthMismatch.
std::int64_t chord_index(const SurfaceDiagram& d, const HomologyClass& alpha, CrossingId c);
std::map<CrossingId, std::int64_t> chord_indices(const SurfaceDiagram& d, const HomologyClass& alpha);

/// Arcs are the walk pieces between consecutive side events. Arc 0 contains
/// the start of the walk (and so also the piece after the last side event).
struct Coloring {
  std::vector<std::int64_t> colors;
  /// arc_of[i]: arc holding event i; a side event belongs to the arc it opens.
  std::vector<std::size_t> arc_of;
};

/// Throws NotAdmissible.
Coloring coloring(const SurfaceDiagram& d, const HomologyClass& alpha);

/// Over-arc colour minus under-arc colour.
std::int64_t chord_index_by_coloring(const SurfaceDiagram& d, const Coloring& col, CrossingId c);
std::map<CrossingId, std::int64_t> chord_indices_by_coloring(const SurfaceDiagram& d, const HomologyClass& alpha);

/// r+ - r- - l+ + l-. A chord is counted left-to-right when its over endpoint
/// lies on the counterclockwise arc from c's over endpoint to c's under endpoint.
/// Throws UnknownChord.
std::int64_t ind(const GaussDiagram& g, CrossingId c);

/// Chords interleaving c, split by direction.
struct CrossingSides {
  std::vector<Chord> left_to_right;
  std::vector<Chord> right_to_left;
};
CrossingSides crossing_sides(const GaussDiagram& g, CrossingId c);

/// 0 (even) or 1 (odd). Works for classes that are only admissible mod 2.
/// Throws NotMod2Admissible, UnknownCrossing.
int parity(const SurfaceDiagram& d, const HomologyClass& alpha, CrossingId c);

/// [D_c^l] + [D_c^r]. Throws UnknownCrossing.
GroupRingElement group_index(const SurfaceDiagram& d, CrossingId c);
/// [D_c^l] for w = +1, [D_c^r] for w = -1.
HomologyClass fiedler_index(const SurfaceDiagram& d, CrossingId c);
/// x[D_c^l] + y[D_c^r] for w = +1, weights swapped for w = -1.
RegularElement regular_index(const SurfaceDiagram& d, CrossingId c);

/// Σ_r w(r) s^φ(f(r)) - Σ_l w(l) s^φ(-f(l)) in Z[s^±1]/(s^|f(c)| - 1).
/// Throws NotAdmissible, UnknownCrossing.
CyclicPoly index_function(const SurfaceDiagram& d, const HomologyClass& alpha, CrossingId c);

/// Classes of the two smoothings at c, left then right.
std::pair<HomologyClass, HomologyClass> smoothing_classes(const SurfaceDiagram& d, const SegmentClasses& seg,
                                                          CrossingId c);

}  // namespace chordidx
