#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "chordidx/codec.hpp"
#include "chordidx/error.hpp"
#include "chordidx/indices.hpp"
#include "chordidx/invariants.hpp"
#include "chordidx/moves.hpp"
#include "chordidx/verify.hpp"
#include "placement.hpp"

using namespace chordidx;

namespace {

DiagramFile load(const std::string& name) {
  std::ifstream in(std::string(CHORDIDX_DATA_DIR) + "/" + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_diagram_file(buf.str());
}

LaurentPoly poly(std::initializer_list<std::pair<std::int64_t, std::int64_t>> terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

std::vector<SurfaceDiagram> random_corpus(int count, std::uint64_t base) {
  std::vector<SurfaceDiagram> out;
  for (int i = 0; i < count; ++i) {
    const int g = 1 + i % 3;
    out.push_back(random_diagram(g, 1 + i % 10, i % 14, base + static_cast<std::uint64_t>(i)));
  }
  return out;
}

}  // namespace

TEST(Invariants, Kishino) {
  const DiagramFile f = load("kishino.diag");
  EXPECT_EQ(writhe_polynomial(f.diagram, *f.alpha), poly({{-1, -1}, {1, -1}}));
  EXPECT_TRUE(virtual_writhe_polynomial(gauss_diagram(f.diagram)).is_zero());
  EXPECT_TRUE(virtual_writhe_polynomial(gauss_diagram(f.diagram), true).is_zero());
  EXPECT_EQ(writhe_polynomial(f.diagram, *f.alpha).to_string(), "-1*t^-1 + -1*t^1");
}

TEST(Invariants, TorusPairMultiples) {
  const DiagramFile f = load("torus_pair.diag");
  for (std::int64_t n = 1; n <= 3; ++n)
    EXPECT_EQ(writhe_polynomial(f.diagram, n * *f.alpha), poly({{-n, -1}, {n, -1}})) << n;
}

TEST(Invariants, ThreeHandles) {
  const DiagramFile f = load("three_handles.diag");
  const HomologyClass g = *f.alpha;
  EXPECT_EQ(writhe_polynomial(f.diagram, g), poly({{-2, 1}, {1, 2}}));
  EXPECT_EQ(writhe_polynomial(reverse_orientation(f.diagram), -g), poly({{-1, 2}, {2, 1}}));
  EXPECT_EQ(writhe_polynomial(mirror(f.diagram), g), poly({{-1, -2}, {2, -1}}));
}

TEST(Invariants, VirtualWrithe) {
  const GaussDiagram tre = parse_gauss_code("O1+ O2+ U1+ U2+");
  EXPECT_EQ(virtual_writhe_polynomial(tre), poly({{-1, 1}, {1, 1}}));
  EXPECT_EQ(virtual_writhe_polynomial(tre, true), poly({{-1, 1}, {1, 1}, {0, -2}}));
  const GaussDiagram kink = parse_gauss_code("O1- U1-");
  EXPECT_TRUE(virtual_writhe_polynomial(kink).is_zero());
  EXPECT_TRUE(virtual_writhe_polynomial(kink, true).is_zero());
}

TEST(Invariants, ZeroIndexCrossingsOmitted) {
  const SurfaceDiagram d = parse_diagram("genus 1\nwalk O1+ U1+ O2- a1+ U2-");
  const LaurentPoly w = writhe_polynomial(d, HomologyClass({1, 0}));
  EXPECT_TRUE(w.is_zero());
  EXPECT_EQ(writhe_polynomial(d, HomologyClass({2, 0})), LaurentPoly());
}

TEST(Invariants, NotAdmissible) {
  const DiagramFile f = load("kishino.diag");
  EXPECT_THROW(writhe_polynomial(f.diagram, HomologyClass({1, 0, 0, 0})), NotAdmissibleError);
  EXPECT_THROW(transcendental_invariant(f.diagram, HomologyClass({1, 0, 0, 0})), NotAdmissibleError);
  EXPECT_THROW(evaluate_invariants(f.diagram, HomologyClass({1, 0, 0, 0})), NotAdmissibleError);
}

TEST(Invariants, GroupRingExamples) {
  // a single positive kink cancels against its normalisation
  EXPECT_TRUE(group_ring_invariant(parse_diagram("genus 1\nwalk O1+ U1+ a1+")).is_zero());
  EXPECT_TRUE(group_ring_invariant(parse_diagram("genus 1\nwalk O1- a1+ U1-")).is_zero());
  EXPECT_TRUE(small_state_sum(parse_diagram("genus 1\nwalk O1+ U1+ a1+")).is_zero());
  EXPECT_TRUE(group_ring_invariant(parse_diagram("genus 0\nwalk")).is_zero());
}

TEST(Invariants, Transcendental) {
  const DiagramFile f = load("kishino.diag");
  const FormalSum t = transcendental_invariant(f.diagram, *f.alpha);
  EXPECT_EQ(t.size(), 4u);
  for (const auto& [key, c] : t.terms()) EXPECT_EQ(key.exponent.modulus(), std::abs(key.k));
  EXPECT_EQ(collapse(t), writhe_polynomial(f.diagram, *f.alpha) - poly({{0, -2}}));
  FormalKey k{2, CyclicPoly(2)};
  k.exponent.add_term(3, 1);
  EXPECT_EQ(to_string(k), "t_2^(1*s^1)");
}

TEST(Invariants, CollapseIsWritheMinusValueAtOne) {
  std::uint64_t state = 3;
  for (const SurfaceDiagram& d : random_corpus(80, 900)) {
    const HomologyClass a = random_admissible(d, 5, state);
    const LaurentPoly w = writhe_polynomial(d, a);
    EXPECT_EQ(collapse(transcendental_invariant(d, a)), w - LaurentPoly::monomial(w.at_one(), 0));
  }
}

TEST(Invariants, SharedEvaluationMatchesIndividual) {
  std::uint64_t state = 9;
  for (const SurfaceDiagram& d : random_corpus(80, 1000)) {
    const HomologyClass a = random_admissible(d, 5, state);
    const InvariantSet s = evaluate_invariants(d, a);
    EXPECT_EQ(s.writhe_polynomial, writhe_polynomial(d, a));
    EXPECT_EQ(s.group_ring, group_ring_invariant(d));
    EXPECT_EQ(s.small_state_sum, small_state_sum(d));
    EXPECT_EQ(s.regular, regular_invariant(d));
    EXPECT_EQ(s.transcendental, transcendental_invariant(d, a));
  }
}

TEST(Invariants, CoefficientSums) {
  for (const SurfaceDiagram& d : random_corpus(60, 1100)) {
    const GroupRingElement gr = group_ring_invariant(d), ss = small_state_sum(d);
    const RegularElement reg = regular_invariant(d);
    std::int64_t sum = 0;
    for (const auto& [cls, c] : gr.terms()) sum += c;
    EXPECT_EQ(sum, 0);
    sum = 0;
    for (const auto& [cls, c] : ss.terms()) sum += c;
    EXPECT_EQ(sum, 0);
    sum = 0;
    for (const auto& [cls, c] : reg.terms()) sum += c.at_one();
    EXPECT_EQ(sum, 2 * writhe(d));
  }
}

TEST(Invariants, SmallStateSumRespectsQuotient) {
  for (const SurfaceDiagram& d : random_corpus(60, 1200)) {
    const CyclicQuotient q(walk_class(d));
    const GroupRingElement ss = small_state_sum(d);
    for (const auto& [cls, c] : ss.terms()) EXPECT_EQ(q.canonical(cls), cls);
  }
}

TEST(Invariants, Symmetries) {
  std::uint64_t state = 13;
  for (const SurfaceDiagram& d : random_corpus(100, 1300)) {
    const HomologyClass a = random_admissible(d, 5, state);
    const LaurentPoly w = writhe_polynomial(d, a);
    EXPECT_EQ(writhe_polynomial(d, -a), w.inverted());
    EXPECT_EQ(writhe_polynomial(reverse_orientation(d), -a), w.inverted());
    EXPECT_EQ(writhe_polynomial(reverse_orientation(d), a), w);
    EXPECT_EQ(writhe_polynomial(mirror(d), a), -w.inverted());
    const HomologyClass k = walk_class(d);
    const SurfaceDiagram r = reverse_orientation(d);
    EXPECT_EQ(writhe_polynomial(r, walk_class(r)), writhe_polynomial(d, k).inverted());
  }
}

TEST(Invariants, DisjointBandSumIsAdditive) {
  std::uint64_t state = 21;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const int g1 = 1 + static_cast<int>(i % 2), g2 = 1 + static_cast<int>((i / 2) % 2);
    const SurfaceDiagram d1 = random_diagram(g1, static_cast<int>(i % 7), static_cast<int>(i % 9), 2000 + i);
    const SurfaceDiagram d2 = random_diagram(g2, static_cast<int>(i % 5), static_cast<int>(i % 8), 3000 + i);
    const HomologyClass a1 = random_admissible(d1, 5, state), a2 = random_admissible(d2, 5, state);
    const int g = g1 + g2;
    const SurfaceDiagram p1 = chordidx::testing::place(d1, g, 0), p2 = chordidx::testing::place(d2, g, g1);
    const HomologyClass b = chordidx::testing::place(a1, g, 0) + chordidx::testing::place(a2, g, g1);
    const SurfaceDiagram s = band_sum(p1, p2, i % (p1.size() + 1), i % (p2.size() + 1));
    EXPECT_EQ(writhe_polynomial(s, b), writhe_polynomial(d1, a1) + writhe_polynomial(d2, a2)) << i;
  }
}

TEST(Invariants, ZeroClassScan) {
  EXPECT_TRUE(zero_class_scan(parse_diagram("genus 0\nwalk O1+ O2+ U1+ U2+"), 2).empty());
  const auto all = zero_class_scan(parse_diagram("genus 1\nwalk O1+ O2+ U1+ U2+"), 1);
  EXPECT_EQ(all.size(), 8u);
  EXPECT_EQ(all.front(), HomologyClass({-1, -1}));
  EXPECT_EQ(zero_class_scan(parse_diagram("genus 1\nwalk"), 2).size(), 24u);
  EXPECT_THROW(zero_class_scan(parse_diagram("genus 1\nwalk"), 0), Error);
  const DiagramFile f = load("kishino.diag");
  for (const HomologyClass& a : zero_class_scan(f.diagram, 1)) {
    EXPECT_TRUE(is_admissible(a, f.diagram));
    EXPECT_FALSE(a.is_zero());
    EXPECT_TRUE(writhe_polynomial(f.diagram, a).is_zero());
  }
  EXPECT_TRUE(zero_class_scan(load("three_handles.diag").diagram, 1).size() < 728u);
}
