#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "chordidx/diagram.hpp"

namespace chordidx {

enum class MoveKind : std::uint8_t { kR1Insert, kR1Remove, kR2Insert, kR2Remove, kR3 };

std::string_view to_string(MoveKind kind);

/// A place where a move applies.
///
/// positions by kind:
///   R1 insert: {gap}; R1 remove: {first, second} passage positions
///   R2 insert: {gap p, gap q}, p <= q; R2 remove: the four passage positions
///   R3: start positions of the top, middle and bottom windows; a window
///       starting at i covers events i and i+1 (mod size)
struct MoveSite {
  MoveKind kind = MoveKind::kR1Insert;
  std::vector<std::size_t> positions;
  /// Removes: the crossings removed. R3: {top-middle, top-bottom, middle-bottom}.
  std::vector<CrossingId> crossings;
  /// Inserts: sign of the (first) new crossing.
  int sign = 1;
  /// R1 insert: over passage first. R2 insert: the strand at gap p goes over.
  bool over_first = true;
  /// R2 insert: both strands meet the new crossings in the same order.
  bool parallel = false;
  /// R3: 0 or 1, which cyclic order of the three strands the triangle has.
  int r3_case = 0;

  friend bool operator==(const MoveSite&, const MoveSite&) = default;
};

/// Eligible sites in a fixed order. Inserts enumerate every gap (and gap
/// pair) with every variant.
std::vector<MoveSite> find_sites(const SurfaceDiagram& d, MoveKind kind);
std::vector<MoveSite> find_all_sites(const SurfaceDiagram& d);

/// All throw SiteNotEligible if the site does not fit the diagram or the kind.
SurfaceDiagram r1(const SurfaceDiagram& d, const MoveSite& site);
SurfaceDiagram r2(const SurfaceDiagram& d, const MoveSite& site);
SurfaceDiagram r3(const SurfaceDiagram& d, const MoveSite& site);
SurfaceDiagram apply(const SurfaceDiagram& d, const MoveSite& site);

/// R3 eligibility of a local configuration. Orders are within each window:
/// top_meets_middle_first: the top strand passes the top-middle crossing
/// before the top-bottom one; middle_meets_top_first: the middle strand passes
/// the top-middle crossing before middle-bottom; bottom_meets_top_first: the
/// bottom strand passes top-bottom before middle-bottom. Returns the case tag
/// (0 or 1) or nothing when the configuration is not a triangle.
std::optional<int> r3_case(bool top_meets_middle_first, bool middle_meets_top_first, bool bottom_meets_top_first,
                           int w_tm, int w_tb, int w_mb);

/// Seeded random event sequence with crossings 1..n (random signs and
/// placement) and m side events. Not necessarily realizable.
/// Throws InvalidArgument for genus 0 with m > 0 or negative counts.
SurfaceDiagram random_diagram(int genus, int crossings, int side_events, std::uint64_t seed);

}  // namespace chordidx
