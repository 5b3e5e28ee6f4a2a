#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chordidx/diagram.hpp"
#include "chordidx/homology.hpp"
#include "chordidx/indices.hpp"
#include "chordidx/moves.hpp"

namespace chordidx {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::int64_t cases = 0;
  std::string detail;  // first failure, if any
};

/// Identity checks on one diagram: colouring closure and agreement,
/// linearity, R3 identities, move invariance, symmetries. `alpha` may be
/// missing or non-admissible; the closure check then reports it.
std::vector<CheckResult> run_checks(const SurfaceDiagram& d, const std::optional<HomologyClass>& alpha,
                                    std::uint64_t seed);

/// k = 1 when the walk meets the top, middle and bottom windows in that
/// cyclic order, 0 otherwise.
int r3_visit_order(const MoveSite& site);

/// [B_tb] + k[D] = [B_tm] + [B_mb] with B the under-to-over segment.
bool r3_uniform_identity(const SurfaceDiagram& d, const SegmentClasses& seg, const MoveSite& site);

/// Which of the two displayed forms (Σ X_c = [D], or X_a + [D] = X_b + X_c)
/// holds, X being the right smoothing class or, failing that, the left one.
/// Empty string when none does.
std::string r3_displayed_identity(const SurfaceDiagram& d, const SegmentClasses& seg, const MoveSite& site);

/// Predicted change of the regular invariant under an R1 move.
RegularElement r1_regular_change(const SurfaceDiagram& before, const MoveSite& site);

/// Random admissible class: integer combination of the admissible basis with
/// coefficients in [-bound, bound].
HomologyClass random_admissible(const SurfaceDiagram& d, int bound, std::uint64_t& state);

}  // namespace chordidx
