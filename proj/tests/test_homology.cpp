#include <gtest/gtest.h>

#include <optional>
#include <random>

#include "chordidx/codec.hpp"
#include "chordidx/error.hpp"
#include "chordidx/homology.hpp"
#include "chordidx/moves.hpp"

using namespace chordidx;

namespace {

HomologyClass random_class(std::mt19937_64& rng, int genus, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  std::vector<std::int64_t> v(2 * static_cast<std::size_t>(genus));
  for (auto& x : v) x = dist(rng);
  return HomologyClass(v);
}

std::size_t pivot(const HomologyClass& x) {
  for (std::size_t i = 0; i < x.rank(); ++i)
    if (x[i] != 0) return i;
  return x.rank();
}

// Expresses x as an integer combination of an echelon basis, if possible.
bool in_span(HomologyClass x, const std::vector<HomologyClass>& basis) {
  for (const HomologyClass& b : basis) {
    const std::size_t p = pivot(b);
    if (x[p] % b[p] != 0) return false;
    x -= (x[p] / b[p]) * b;
  }
  return x.is_zero();
}

// Some multiple k*g with |k| <= bound equals x, or nothing.
std::optional<std::int64_t> multiple_of(const HomologyClass& x, const HomologyClass& g, int bound) {
  for (int k = -bound; k <= bound; ++k)
    if (k * g == x) return k;
  return std::nullopt;
}

}  // namespace

TEST(Homology, FormOnBasis) {
  EXPECT_EQ(intersection(HomologyClass::basis(1, 1), HomologyClass::basis(1, 2)), 1);
  EXPECT_EQ(intersection(HomologyClass::basis(1, 2), HomologyClass::basis(1, 1)), -1);
  EXPECT_EQ(intersection(HomologyClass::basis(2, 1), HomologyClass::basis(2, 4)), 0);
  EXPECT_EQ(intersection(HomologyClass::basis(2, 3), HomologyClass::basis(2, 4)), 1);
  EXPECT_EQ(intersection(HomologyClass({0, -1, 0, 1}), HomologyClass({1, 1, 1, 1})), 0);
  EXPECT_THROW(intersection(HomologyClass::zero(1), HomologyClass::zero(2)), Error);
  EXPECT_THROW(HomologyClass({1, 2, 3}), Error);
  EXPECT_THROW(HomologyClass::basis(1, 3), Error);
  EXPECT_EQ(HomologyClass({1, -2}).to_string(), "(1, -2)");
}

TEST(Homology, FormIsBilinearAndSkew) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int g = 1 + trial % 4;
    const HomologyClass x = random_class(rng, g, 9), y = random_class(rng, g, 9), z = random_class(rng, g, 9);
    EXPECT_EQ(intersection(x, y), -intersection(y, x));
    EXPECT_EQ(intersection(x, x), 0);
    EXPECT_EQ(intersection(x + z, y), intersection(x, y) + intersection(z, y));
    EXPECT_EQ(intersection(3 * x, y), 3 * intersection(x, y));
  }
}

TEST(Homology, WalkClass) {
  const SurfaceDiagram d = parse_diagram("genus 2\nwalk U1+ b1+ O3- O1+ a1+ U3- U2+ b2+ O4- O2+ a2+ U4-");
  EXPECT_EQ(walk_class(d), HomologyClass({1, 1, 1, 1}));
  const SegmentClasses seg(d);
  EXPECT_EQ(seg.total(), walk_class(d));
  for (const auto& [id, info] : d.crossings()) {
    EXPECT_EQ(seg.under_to_over(id), walk_class(under_to_over(d, id), 2));
    EXPECT_EQ(seg.over_to_under(id), walk_class(over_to_under(d, id), 2));
  }
}

TEST(Homology, SegmentClassesMatchDirectSum) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const SurfaceDiagram d = random_diagram(1 + static_cast<int>(seed % 3), 5, 9, seed);
    const SegmentClasses seg(d);
    for (std::size_t a = 0; a < d.size(); ++a)
      for (std::size_t b = 0; b < d.size(); ++b)
        EXPECT_EQ(seg.between(a, b), walk_class(cyclic_segment(d.events(), a, b), d.genus()));
  }
}

TEST(Homology, AdmissibleBasisSpansKernel) {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int g = 1 + static_cast<int>(seed % 2);
    const SurfaceDiagram d = random_diagram(g, 3, static_cast<int>(seed % 8), seed);
    const HomologyClass k = walk_class(d);
    const auto basis = admissible_subgroup_basis(d);
    EXPECT_EQ(basis.size(), k.is_zero() ? 2 * static_cast<std::size_t>(g) : 2 * static_cast<std::size_t>(g) - 1);
    std::size_t last = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      EXPECT_EQ(intersection(basis[i], k), 0);
      const std::size_t p = pivot(basis[i]);
      EXPECT_GT(basis[i][p], 0);
      if (i > 0) EXPECT_GT(p, last);
      last = p;
      for (std::size_t j = 0; j < i; ++j) {
        const std::int64_t above = basis[j][p];
        EXPECT_TRUE(above >= 0 && above < basis[i][p]) << "not reduced";
      }
    }
    for (int trial = 0; trial < 40; ++trial) {
      const HomologyClass a = random_class(rng, g, 3);
      EXPECT_EQ(is_admissible(a, d), intersection(a, k) == 0);
      if (intersection(a, k) == 0) EXPECT_TRUE(in_span(a, basis)) << a.to_string();
    }
  }
}

TEST(Homology, AdmissibleBasisExamples) {
  const SurfaceDiagram torus = parse_diagram("genus 1\nwalk a1+ a1+");
  const auto basis = admissible_subgroup_basis(torus);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0], HomologyClass({1, 0}));
  EXPECT_EQ(admissible_subgroup_basis(parse_diagram("genus 1\nwalk")).size(), 2u);
  EXPECT_TRUE(admissible_subgroup_basis(parse_diagram("genus 0\nwalk")).empty());
}

TEST(Homology, CyclicQuotientIsCanonical) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int g = 1 + trial % 2;
    HomologyClass gen = random_class(rng, g, 4);
    if (trial % 7 == 0) gen = HomologyClass::zero(g);
    const CyclicQuotient q(gen);
    for (int inner = 0; inner < 10; ++inner) {
      const HomologyClass x = random_class(rng, g, 6);
      const HomologyClass c = q.canonical(x);
      EXPECT_EQ(q.canonical(c), c);
      EXPECT_EQ(q.canonical(x + gen), c);
      EXPECT_EQ(q.canonical(x - 3 * gen), c);
      if (gen.is_zero())
        EXPECT_EQ(c, x);
      else
        EXPECT_TRUE(multiple_of(c - x, gen, 200).has_value());
      const HomologyClass y = random_class(rng, g, 2);
      const bool same = gen.is_zero() ? x == y : multiple_of(x - y, gen, 200).has_value();
      EXPECT_EQ(q.canonical(y) == c, same);
    }
  }
}

TEST(Homology, CyclicQuotientGcd) {
  EXPECT_EQ(CyclicQuotient(HomologyClass({2, 4})).generator_gcd(), 2);
  EXPECT_EQ(CyclicQuotient(HomologyClass({0, -3, 0, 6})).generator_gcd(), 3);
  EXPECT_EQ(CyclicQuotient(HomologyClass::zero(1)).generator_gcd(), 0);
}
