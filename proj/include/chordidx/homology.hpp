#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "chordidx/diagram.hpp"

namespace chordidx {

/// Element of H_1(Σ_g, Z) in the basis e_1..e_{2g}. Ordering is lexicographic
/// on coordinates.
class HomologyClass {
 public:
  HomologyClass() = default;
  explicit HomologyClass(std::vector<std::int64_t> coords);

  static HomologyClass zero(int genus) { return HomologyClass(std::vector<std::int64_t>(2 * static_cast<std::size_t>(genus), 0)); }
  /// e_k, k in 1..2g.
  static HomologyClass basis(int genus, int k);

  int genus() const { return static_cast<int>(coords_.size() / 2); }
  std::size_t rank() const { return coords_.size(); }
  std::span<const std::int64_t> coords() const { return coords_; }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::int64_t& operator[](std::size_t i) { return coords_[i]; }
  bool is_zero() const;

  HomologyClass& operator+=(const HomologyClass& o);
  HomologyClass& operator-=(const HomologyClass& o);
  friend HomologyClass operator+(HomologyClass a, const HomologyClass& b) { return a += b; }
  friend HomologyClass operator-(HomologyClass a, const HomologyClass& b) { return a -= b; }
  HomologyClass operator-() const;
  friend HomologyClass operator*(std::int64_t k, const HomologyClass& a);

  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
  friend auto operator<=>(const HomologyClass&, const HomologyClass&) = default;

  /// "(a, b, ...)".
  std::string to_string() const;

 private:
  std::vector<std::int64_t> coords_;
};

/// Σ_i (x_{2i-1} y_{2i} - x_{2i} y_{2i-1}). Throws LengthMismatch.
std::int64_t intersection(const HomologyClass& x, const HomologyClass& y);

/// Net signed count of side events per basis index. Throws SideIndexOutOfRange.
HomologyClass walk_class(const ClosedWalk& walk, int genus);
HomologyClass walk_class(const SurfaceDiagram& d);

/// Z-basis of {α : α·[D] = 0}, in Hermite normal form (rows sorted by pivot).
std::vector<HomologyClass> admissible_subgroup_basis(const SurfaceDiagram& d);

/// Throws LengthMismatch.
bool is_admissible(const HomologyClass& alpha, const SurfaceDiagram& d);

/// Prefix sums of side events; the class of any cyclic segment in O(g).
class SegmentClasses {
 public:
  explicit SegmentClasses(const SurfaceDiagram& d);

  const HomologyClass& total() const { return total_; }
  /// Class of the events strictly between positions `from` and `to`.
  HomologyClass between(std::size_t from, std::size_t to) const;
  HomologyClass under_to_over(CrossingId c) const;
  HomologyClass over_to_under(CrossingId c) const;

 private:
  const SurfaceDiagram* diagram_;
  std::size_t rank_ = 0;
  // prefix_[i * rank_ + k]: coordinate k of the events before position i
  std::vector<std::int64_t> prefix_;
  HomologyClass total_;
};

/// H_1 modulo the cyclic subgroup generated by one class. A unimodular change
/// of basis puts the generator at (d, 0, ..., 0); representatives reduce that
/// coordinate into [0, d) and are mapped back to the original basis.
class CyclicQuotient {
 public:
  explicit CyclicQuotient(const HomologyClass& generator);

  HomologyClass canonical(const HomologyClass& x) const;
  std::int64_t generator_gcd() const { return gcd_; }

 private:
  std::vector<std::vector<std::int64_t>> forward_;
  std::vector<std::vector<std::int64_t>> inverse_;
  std::int64_t gcd_ = 0;
};

}  // namespace chordidx
