#pragma once

#include <cstdint>
#include <vector>

#include "chordidx/diagram.hpp"
#include "chordidx/homology.hpp"

namespace chordidx::testing {

/// Every Gauss diagram with n chords (all pairings of 2n slots, both
/// directions per chord, both signs), for n = 0..max_chords.
std::vector<GaussDiagram> all_gauss_diagrams(int max_chords);

/// Ind by walking the circle from c's over endpoint to its under endpoint.
std::int64_t reference_ind(const GaussDiagram& g, CrossingId c);

/// w(c) α·[D_c^r], smoothing the walk event by event.
std::int64_t reference_chord_index(const SurfaceDiagram& d, const HomologyClass& alpha, CrossingId c);

/// The same as a diagram with no side events (genus 0) for a Gauss diagram.
SurfaceDiagram diagram_of(const GaussDiagram& g);

}  // namespace chordidx::testing
