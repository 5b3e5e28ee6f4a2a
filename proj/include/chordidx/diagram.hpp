#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace chordidx {

using CrossingId = std::int64_t;

enum class Layer : std::uint8_t { kOver, kUnder };

inline Layer flipped(Layer l) { return l == Layer::kOver ? Layer::kUnder : Layer::kOver; }

/// One step of the walk: either a passage through a crossing, or a crossing of
/// the side curve dual to basis vector e_k (k in 1..2g; odd k is a_{(k+1)/2},
/// even k is b_{k/2}).
struct Event {
  enum class Kind : std::uint8_t { kPassage, kSide };

  Kind kind = Kind::kPassage;
  CrossingId crossing = 0;
  Layer layer = Layer::kOver;
  int basis_index = 0;
  int direction = 0;

  static Event over(CrossingId id) { return {Kind::kPassage, id, Layer::kOver, 0, 0}; }
  static Event under(CrossingId id) { return {Kind::kPassage, id, Layer::kUnder, 0, 0}; }
  static Event passage(CrossingId id, Layer layer) { return {Kind::kPassage, id, layer, 0, 0}; }
  static Event side(int basis_index, int direction) {
    return {Kind::kSide, 0, Layer::kOver, basis_index, direction};
  }

  bool is_passage() const { return kind == Kind::kPassage; }
  bool is_side() const { return kind == Kind::kSide; }

  friend bool operator==(const Event& a, const Event& b) {
    if (a.kind != b.kind) return false;
    if (a.is_passage()) return a.crossing == b.crossing && a.layer == b.layer;
    return a.basis_index == b.basis_index && a.direction == b.direction;
  }
};

/// Cyclic event sequence. Passages may refer to crossings of an ambient diagram.
using ClosedWalk = std::vector<Event>;

struct CrossingInfo {
  int sign = 1;
  std::size_t over_pos = 0;
  std::size_t under_pos = 0;
};

/// A knot diagram on a closed genus-g surface, stored as one closed walk.
/// Instances are always valid: every crossing has exactly one over and one
/// under passage, signs are +-1 and side indices lie in 1..2g.
class SurfaceDiagram {
 public:
  SurfaceDiagram() = default;

  /// Validates and builds. Throws Error (DuplicatePassage, SignMismatch,
  /// SideIndexOutOfRange, UnknownCrossing, InvalidArgument).
  static SurfaceDiagram create(int genus, ClosedWalk events, const std::map<CrossingId, int>& signs);

  int genus() const { return genus_; }
  const ClosedWalk& events() const { return events_; }
  std::size_t size() const { return events_.size(); }
  const std::map<CrossingId, CrossingInfo>& crossings() const { return crossings_; }
  std::size_t crossing_count() const { return crossings_.size(); }
  bool has_crossing(CrossingId id) const { return crossings_.count(id) != 0; }

  /// Throws UnknownCrossing.
  const CrossingInfo& crossing(CrossingId id) const;
  int sign(CrossingId id) const { return crossing(id).sign; }
  std::map<CrossingId, int> signs() const;
  CrossingId max_crossing_id() const;

  friend bool operator==(const SurfaceDiagram& a, const SurfaceDiagram& b) {
    return a.genus_ == b.genus_ && a.events_ == b.events_ && a.signs() == b.signs();
  }

 private:
  int genus_ = 0;
  ClosedWalk events_;
  std::map<CrossingId, CrossingInfo> crossings_;
};

/// Events strictly between positions `from` and `to`, walking forward
/// cyclically. from == to yields every other event.
ClosedWalk cyclic_segment(const ClosedWalk& walk, std::size_t from, std::size_t to);

struct Chord {
  CrossingId id = 0;
  int sign = 1;
  std::size_t over_pos = 0;
  std::size_t under_pos = 0;
};

/// Signed chords on a counterclockwise circle with 2n endpoint slots; each
/// chord is directed from its over endpoint to its under endpoint.
class GaussDiagram {
 public:
  GaussDiagram() = default;
  /// Throws InvalidArgument if positions are not a permutation of 0..2n-1.
  explicit GaussDiagram(std::vector<Chord> chords);

  const std::vector<Chord>& chords() const { return chords_; }
  std::size_t slot_count() const { return 2 * chords_.size(); }
  /// Throws UnknownChord.
  const Chord& chord(CrossingId id) const;

  /// True when the endpoints of a and b alternate around the circle.
  static bool interleaved(const Chord& a, const Chord& b);
  /// True when `pos` lies on the counterclockwise open arc from c's over
  /// endpoint to its under endpoint.
  static bool on_over_arc(const Chord& c, std::size_t pos, std::size_t slots);

 private:
  std::vector<Chord> chords_;
};

GaussDiagram gauss_diagram(const SurfaceDiagram& d);

/// Reads a plain signed Gauss code such as "O1+ O2+ U1+ U2+".
/// Throws MalformedToken, DuplicatePassage, SignMismatch.
GaussDiagram parse_gauss_code(const std::string& text);

int writhe(const SurfaceDiagram& d);

/// Oriented smoothing at c. The under->over segment is the right walk of a
/// positive crossing and the left walk of a negative one.
struct SmoothingPair {
  ClosedWalk left;
  ClosedWalk right;
};

SmoothingPair smooth(const SurfaceDiagram& d, CrossingId c);

/// Over->under and under->over segments at c (orientation independent of sign).
ClosedWalk over_to_under(const SurfaceDiagram& d, CrossingId c);
ClosedWalk under_to_over(const SurfaceDiagram& d, CrossingId c);

SurfaceDiagram reverse_orientation(const SurfaceDiagram& d);
SurfaceDiagram mirror(const SurfaceDiagram& d);

/// Moves the basepoint: the result starts at event k.
SurfaceDiagram rotate(const SurfaceDiagram& d, std::size_t k);

/// Shifts every crossing id by `offset`.
SurfaceDiagram renumber(const SurfaceDiagram& d, CrossingId offset);

/// Splices d2 (read cyclically from gap site2) into d1 at gap site1. A gap g
/// sits just before event g; gap size() is the same point as gap 0. Crossing
/// ids of d2 are shifted past d1's when the two overlap. Throws GenusMismatch,
/// InvalidArgument (gap out of range).
SurfaceDiagram band_sum(const SurfaceDiagram& d1, const SurfaceDiagram& d2, std::size_t site1,
                        std::size_t site2);

}  // namespace chordidx
