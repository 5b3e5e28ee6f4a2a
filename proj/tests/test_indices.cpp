#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "chordidx/codec.hpp"
#include "chordidx/error.hpp"
#include "chordidx/indices.hpp"
#include "chordidx/invariants.hpp"
#include "chordidx/moves.hpp"
#include "chordidx/verify.hpp"
#include "gauss_oracle.hpp"
#include "realizable.hpp"

using namespace chordidx;
namespace oracle = chordidx::testing;

namespace {

DiagramFile load(const std::string& name) {
  std::ifstream in(std::string(CHORDIDX_DATA_DIR) + "/" + name);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_diagram_file(buf.str());
}

std::vector<std::int64_t> values(const std::map<CrossingId, std::int64_t>& m) {
  std::vector<std::int64_t> out;
  for (const auto& [id, v] : m) out.push_back(v);
  return out;
}

std::vector<SurfaceDiagram> random_corpus(int count, std::uint64_t base) {
  std::vector<SurfaceDiagram> out;
  for (int i = 0; i < count; ++i) {
    const int g = 1 + i % 3;
    out.push_back(random_diagram(g, 1 + i % 10, i % 14, base + static_cast<std::uint64_t>(i)));
  }
  return out;
}

GroupRingElement two_term(const HomologyClass& a, const HomologyClass& b) {
  GroupRingElement e;
  e.add(a, 1);
  e.add(b, 1);
  return e;
}

}  // namespace

TEST(Indices, KishinoValues) {
  const DiagramFile f = load("kishino.diag");
  EXPECT_EQ(values(chord_indices(f.diagram, *f.alpha)), (std::vector<std::int64_t>{0, 0, -1, 1}));
  for (CrossingId c = 1; c <= 4; ++c) EXPECT_EQ(parity(f.diagram, *f.alpha, c), c <= 2 ? 0 : 1);
}

TEST(Indices, TorusPairValues) {
  const DiagramFile f = load("torus_pair.diag");
  EXPECT_TRUE(walk_class(f.diagram).is_zero());
  EXPECT_EQ(f.diagram.crossing_count(), 2u);
  EXPECT_EQ(values(chord_indices(f.diagram, *f.alpha)), (std::vector<std::int64_t>{-1, 1}));
}

TEST(Indices, ThreeHandlesValues) {
  const DiagramFile f = load("three_handles.diag");
  EXPECT_EQ(*f.alpha, walk_class(f.diagram));
  EXPECT_EQ(values(chord_indices(f.diagram, *f.alpha)), (std::vector<std::int64_t>{1, 1, -2}));
}

TEST(Indices, ZeroClassGivesZeroIndex) {
  for (const SurfaceDiagram& d : random_corpus(30, 50)) {
    for (const auto& [id, v] : chord_indices(d, HomologyClass::zero(d.genus()))) EXPECT_EQ(v, 0);
    for (const auto& [id, info] : d.crossings()) EXPECT_EQ(parity(d, HomologyClass::zero(d.genus()), id), 0);
  }
}

TEST(Indices, NotAdmissibleCarriesPairing) {
  const DiagramFile f = load("kishino.diag");
  try {
    chord_index(f.diagram, HomologyClass({1, 0, 0, 0}), 1);
    FAIL();
  } catch (const NotAdmissibleError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAdmissible);
    EXPECT_EQ(e.pairing(), 1);
  }
  EXPECT_THROW(coloring(f.diagram, HomologyClass({0, 1, 0, 0})), NotAdmissibleError);
  EXPECT_THROW(chord_index(f.diagram, HomologyClass({1, 0}), 1), Error);
  try {
    chord_index(f.diagram, *f.alpha, 9);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownCrossing);
  }
}

TEST(Indices, ThreeAlgorithmsAgree) {
  std::uint64_t state = 99;
  for (const SurfaceDiagram& d : random_corpus(120, 200)) {
    for (int t = 0; t < 3; ++t) {
      const HomologyClass a = random_admissible(d, 5, state);
      const auto direct = chord_indices(d, a);
      EXPECT_EQ(chord_indices_by_coloring(d, a), direct);
      for (const auto& [id, v] : direct) EXPECT_EQ(oracle::reference_chord_index(d, a, id), v);
    }
  }
}

TEST(Indices, ColoringStartsAtZeroAndCloses) {
  std::uint64_t state = 5;
  for (const SurfaceDiagram& d : random_corpus(40, 300)) {
    const HomologyClass a = random_admissible(d, 4, state);
    const Coloring col = coloring(d, a);
    ASSERT_FALSE(col.colors.empty());
    EXPECT_EQ(col.colors[0], 0);
    EXPECT_EQ(col.arc_of.size(), d.size());
    if (d.size() > 0 && d.events()[0].is_passage()) EXPECT_EQ(col.arc_of[0], 0u);
  }
}

TEST(Indices, LinearityAndAntipode) {
  std::uint64_t state = 17;
  for (const SurfaceDiagram& d : random_corpus(100, 400)) {
    const HomologyClass a = random_admissible(d, 5, state), b = random_admissible(d, 5, state);
    const auto fa = chord_indices(d, a), fb = chord_indices(d, b), fab = chord_indices(d, a + b);
    const auto fneg = chord_indices(d, -a), f3 = chord_indices(d, 3 * a);
    for (const auto& [id, v] : fa) {
      EXPECT_EQ(fab.at(id), v + fb.at(id));
      EXPECT_EQ(fneg.at(id), -v);
      EXPECT_EQ(f3.at(id), 3 * v);
    }
  }
}

TEST(Indices, ParityMatchesIndexModTwo) {
  std::uint64_t state = 23;
  for (const SurfaceDiagram& d : random_corpus(60, 500)) {
    const HomologyClass a = random_admissible(d, 5, state);
    for (const auto& [id, v] : chord_indices(d, a)) EXPECT_EQ(parity(d, a, id), ((v % 2) + 2) % 2);
  }
}

TEST(Indices, ParityOnlyModTwoAdmissible) {
  // [D] = (2, 0): α = (0, 1) pairs to -2, admissible mod 2 only
  const SurfaceDiagram d = parse_diagram("genus 1\nwalk O1+ a1+ O2- U1+ a1+ U2-");
  const HomologyClass a({0, 1});
  EXPECT_EQ(intersection(a, walk_class(d)), -2);
  EXPECT_THROW(chord_index(d, a, 1), NotAdmissibleError);
  // colours mod 2 flip at each a-side event
  EXPECT_EQ(parity(d, a, 1), 1);
  EXPECT_EQ(parity(d, a, 2), 1);
  try {
    parity(parse_diagram("genus 1\nwalk O1+ a1+ U1+"), HomologyClass({0, 1}), 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotMod2Admissible);
  }
}

TEST(Indices, IndMatchesOracleOnAllSmallGaussDiagrams) {
  std::size_t count = 0;
  for (const GaussDiagram& g : oracle::all_gauss_diagrams(3)) {
    std::int64_t weighted = 0;
    for (const Chord& c : g.chords()) {
      const std::int64_t v = ind(g, c.id);
      EXPECT_EQ(v, oracle::reference_ind(g, c.id));
      weighted += c.sign * v;
      const CrossingSides sides = crossing_sides(g, c.id);
      std::int64_t from_sides = 0;
      for (const Chord& r : sides.left_to_right) from_sides += r.sign;
      for (const Chord& l : sides.right_to_left) from_sides -= l.sign;
      EXPECT_EQ(from_sides, v);
    }
    EXPECT_EQ(weighted, 0);
    ++count;
  }
  // 1 + 4 + 48 + 960 diagrams with 0..3 chords
  EXPECT_EQ(count, 1013u);
}

TEST(Indices, IndExamples) {
  const GaussDiagram tre = parse_gauss_code("O1+ O2+ U1+ U2+");
  std::multiset<std::int64_t> got{ind(tre, 1), ind(tre, 2)};
  EXPECT_EQ(got, (std::multiset<std::int64_t>{-1, 1}));
  EXPECT_EQ(ind(parse_gauss_code("O1+ U1+ O2- U2-"), 1), 0);
  EXPECT_THROW(ind(tre, 3), Error);
  // the unweighted sum need not vanish
  const GaussDiagram kishino = gauss_diagram(load("kishino.diag").diagram);
  std::int64_t sum = 0;
  for (const Chord& c : kishino.chords()) sum += ind(kishino, c.id);
  EXPECT_EQ(sum, 4);
}

TEST(Indices, KnotClassIndexIsIndOnRealizableEncodings) {
  const auto corpus = oracle::realizable_corpus();
  EXPECT_GE(corpus.size(), 10u);
  for (const auto& [name, d] : corpus) {
    const HomologyClass k = walk_class(d);
    const GaussDiagram g = gauss_diagram(d);
    for (const Chord& c : g.chords()) {
      EXPECT_EQ(chord_index(d, k, c.id), ind(g, c.id)) << name << " crossing " << c.id;
      EXPECT_EQ(index_function(d, k, c.id).at_one(), ind(g, c.id)) << name;
    }
    EXPECT_EQ(writhe_polynomial(d, k), virtual_writhe_polynomial(g)) << name;
  }
}

TEST(Indices, GroupIndexExamples) {
  const SurfaceDiagram d = parse_diagram("genus 1\nwalk O1+ a1+ U1+ b1+");
  EXPECT_EQ(group_index(d, 1), two_term(HomologyClass({1, 0}), HomologyClass({0, 1})));
  EXPECT_EQ(fiedler_index(d, 1), HomologyClass({1, 0}));
  RegularElement reg;
  reg.add(HomologyClass({1, 0}), BivariatePoly::x());
  reg.add(HomologyClass({0, 1}), BivariatePoly::y());
  EXPECT_EQ(regular_index(d, 1), reg);

  const SurfaceDiagram neg = parse_diagram("genus 1\nwalk O1- a1+ U1- b1+");
  // the right walk of a negative crossing is the over-to-under segment
  EXPECT_EQ(fiedler_index(neg, 1), HomologyClass({1, 0}));
  RegularElement swapped;
  swapped.add(HomologyClass({1, 0}), BivariatePoly::x());
  swapped.add(HomologyClass({0, 1}), BivariatePoly::y());
  EXPECT_EQ(regular_index(neg, 1), swapped);
}

TEST(Indices, KinkGroupIndex) {
  const SurfaceDiagram d = parse_diagram("genus 1\nwalk O1+ U1+ a1+");
  const HomologyClass k = walk_class(d);
  EXPECT_EQ(group_index(d, 1), two_term(k, HomologyClass::zero(1)));
  const HomologyClass gf = fiedler_index(d, 1);
  EXPECT_TRUE(gf == k || gf.is_zero());
  GroupRingElement merged;
  merged.add(HomologyClass::zero(1), 2);
  EXPECT_EQ(group_index(parse_diagram("genus 1\nwalk O1- U1-"), 1), merged);
}

TEST(Indices, GroupIndexStructure) {
  for (const SurfaceDiagram& d : random_corpus(60, 600)) {
    const SegmentClasses seg(d);
    for (const auto& [id, info] : d.crossings()) {
      const auto [l, r] = smoothing_classes(d, seg, id);
      EXPECT_EQ(l + r, walk_class(d));
      EXPECT_EQ(group_index(d, id), two_term(l, r));
      EXPECT_EQ(fiedler_index(d, id), info.sign > 0 ? l : r);
      const SurfaceDiagram m = mirror(d);
      EXPECT_EQ(fiedler_index(m, id), info.sign > 0 ? r : l);
      GroupRingElement at_one;
      const RegularElement reg = regular_index(d, id);
      for (const auto& [cls, poly] : reg.terms()) at_one.add(cls, poly.at_one());
      EXPECT_EQ(at_one, group_index(d, id));
    }
  }
}

TEST(Indices, IndexFunction) {
  const DiagramFile t = load("virtual_trefoil.diag");
  const HomologyClass k = walk_class(t.diagram);
  for (const auto& [id, info] : t.diagram.crossings()) {
    const CyclicPoly p = index_function(t.diagram, k, id);
    ASSERT_EQ(p.terms().size(), 1u);
    EXPECT_EQ(std::abs(p.terms().begin()->second), 1);
    EXPECT_EQ(p.modulus(), std::abs(chord_index(t.diagram, k, id)));
  }
  const SurfaceDiagram iso = parse_diagram("genus 1\nwalk O1+ U1+ a1+ O2- a1- U2-");
  EXPECT_TRUE(index_function(iso, HomologyClass({1, 0}), 1).is_zero());
  std::uint64_t state = 31;
  for (const SurfaceDiagram& d : random_corpus(80, 700)) {
    const HomologyClass a = random_admissible(d, 5, state);
    const GaussDiagram g = gauss_diagram(d);
    for (const auto& [id, info] : d.crossings()) {
      const CyclicPoly p = index_function(d, a, id);
      EXPECT_EQ(p.at_one(), ind(g, id));
      EXPECT_EQ(p.modulus(), std::abs(chord_index(d, a, id)));
      if (p.modulus() == 1)
        for (const auto& [e, c] : p.terms()) EXPECT_EQ(e, 0);
    }
  }
}

TEST(Indices, BasepointIndependence) {
  std::uint64_t state = 41;
  for (const SurfaceDiagram& d : random_corpus(30, 800)) {
    const HomologyClass a = random_admissible(d, 5, state);
    const auto f = chord_indices(d, a);
    const GaussDiagram g = gauss_diagram(d);
    for (std::size_t k = 0; k < d.size(); ++k) {
      const SurfaceDiagram r = rotate(d, k);
      EXPECT_EQ(chord_indices(r, a), f);
      const GaussDiagram gr = gauss_diagram(r);
      for (const Chord& c : g.chords()) {
        EXPECT_EQ(ind(gr, c.id), ind(g, c.id));
        EXPECT_EQ(group_index(r, c.id), group_index(d, c.id));
        EXPECT_EQ(index_function(r, a, c.id), index_function(d, a, c.id));
      }
    }
  }
}
