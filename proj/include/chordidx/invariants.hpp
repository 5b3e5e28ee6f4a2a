#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "chordidx/diagram.hpp"
#include "chordidx/homology.hpp"
#include "chordidx/indices.hpp"
#include "chordidx/polynomial.hpp"

namespace chordidx {

/// The symbol t_k^{p(s)}; k and p together form one key of F.
struct FormalKey {
  std::int64_t k = 0;
  CyclicPoly exponent;

  friend bool operator==(const FormalKey&, const FormalKey&) = default;
  friend auto operator<=>(const FormalKey&, const FormalKey&) = default;
};

using FormalSum = FreeModule<FormalKey, std::int64_t>;

/// Σ_{f(c) != 0} w(c) t^{f(c)}. Throws NotAdmissible.
LaurentPoly writhe_polynomial(const SurfaceDiagram& d, const HomologyClass& alpha);

/// Σ_{Ind(c) != 0} w(c) t^{Ind(c)}; with `normalized`, Σ_c w(c) t^{Ind(c)} - w(K).
LaurentPoly virtual_writhe_polynomial(const GaussDiagram& g, bool normalized = false);

/// Σ w(c) g(c) - w(D)([K] + [0]).
GroupRingElement group_ring_invariant(const SurfaceDiagram& d);

/// Σ w(c) g_F(c) - w(D)[0], classes taken modulo <[K]>.
GroupRingElement small_state_sum(const SurfaceDiagram& d);

/// Σ w(c) g_reg(c).
RegularElement regular_invariant(const SurfaceDiagram& d);

/// Σ_c w(c) t_{f(c)}^{g_c(s)} - w(K) t_0^0. Throws NotAdmissible.
FormalSum transcendental_invariant(const SurfaceDiagram& d, const HomologyClass& alpha);

/// Sends t_k^{p(s)} to t^k.
LaurentPoly collapse(const FormalSum& f);

/// Nontrivial admissible classes Σ n_i b_i (b_i the admissible basis,
/// |n_i| <= bound) with zero writhe polynomial, in lexicographic order of n.
/// Throws InvalidArgument for bound < 1.
std::vector<HomologyClass> zero_class_scan(const SurfaceDiagram& d, int bound);

std::string to_string(const FormalKey& key);

/// Every invariant of one diagram, computed with shared intermediate data.
struct InvariantSet {
  LaurentPoly writhe_polynomial;
  GroupRingElement group_ring;
  GroupRingElement small_state_sum;
  RegularElement regular;
  FormalSum transcendental;

  friend bool operator==(const InvariantSet&, const InvariantSet&) = default;
};

/// Throws NotAdmissible.
InvariantSet evaluate_invariants(const SurfaceDiagram& d, const HomologyClass& alpha);

}  // namespace chordidx
