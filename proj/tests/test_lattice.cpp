#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "regopen/enumerate.hpp"
#include "regopen/lattice.hpp"
#include "regopen/regular_open.hpp"

using namespace regopen;

namespace {

// Order isomorphisms by trying every permutation of the elements.
std::vector<std::vector<std::size_t>> brute_force_isos(const FiniteLattice& a, const FiniteLattice& b) {
  std::vector<std::vector<std::size_t>> out;
  if (a.size() != b.size()) return out;
  std::vector<std::size_t> p(a.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i)
      for (std::size_t j = 0; j < a.size() && ok; ++j) ok = a.leq(i, j) == b.leq(p[i], p[j]);
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<PointSet> sets(std::size_t n, std::vector<std::vector<std::size_t>> raw) {
  std::vector<PointSet> out;
  for (auto& r : raw) out.emplace_back(n, r);
  return out;
}

}  // namespace

TEST(FiniteLattice, RejectsNonLattices) {
  // Two incomparable maximal elements: no top.
  EXPECT_THROW(FiniteLattice::from_pairs(3, {{0, 1}, {0, 2}}), Error);
  // Cycle: not antisymmetric.
  EXPECT_THROW(FiniteLattice::from_pairs(2, {{0, 1}, {1, 0}}), Error);
  // Bowtie: two upper bounds of {0,1} with no least one.
  EXPECT_THROW(FiniteLattice::from_pairs(6, {{4, 0}, {4, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 5}, {3, 5}}), Error);
}

TEST(FiniteLattice, TablesFromOrder) {
  const auto m3 = lattices::diamond();
  EXPECT_EQ(m3.bottom(), 0u);
  EXPECT_EQ(m3.top(), 4u);
  EXPECT_EQ(m3.join(1, 2), 4u);
  EXPECT_EQ(m3.meet(1, 2), 0u);
  EXPECT_EQ(m3.atoms(), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(m3.covers().size(), 6u);
}

TEST(Distributive, Examples) {
  EXPECT_TRUE(check_distributive(regular_open_lattice(spaces::x3()).lattice()));
  const auto m3 = check_distributive(lattices::diamond());
  EXPECT_FALSE(m3);
  // Full triple scan: (1,2,3) is the first violation, 1 ∧ (2 ∨ 3) = 1 but (1∧2) ∨ (1∧3) = 0.
  EXPECT_EQ(m3.witness, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_TRUE(check_distributive(lattices::chain(2)));
}

TEST(Wallman, Examples) {
  EXPECT_TRUE(wallman_disjunction(lattices::powerset(3)));
  EXPECT_TRUE(wallman_disjunction(regular_open_lattice(spaces::x3()).lattice()));
  EXPECT_TRUE(wallman_disjunction(lattices::chain(2)));
  // In 0 < 1 < 2 every nonzero h meets both 1 and 2 above 0.
  const auto c3 = wallman_disjunction(lattices::chain(3));
  EXPECT_FALSE(c3);
  EXPECT_EQ(c3.witness, (std::vector<std::size_t>{1, 2}));
}

TEST(RegularOpenLattice, Examples) {
  const auto rs = regular_open_lattice(spaces::sierpinski());
  EXPECT_EQ(rs.elements(), sets(2, {{}, {0, 1}}));

  const auto rx = regular_open_lattice(spaces::x3());
  EXPECT_EQ(rx.elements(), sets(3, {{}, {0}, {1}, {0, 1, 2}}));
  EXPECT_EQ(rx.atoms(), (std::vector<std::size_t>{1, 2}));
  // {0} ∨ {1} = int cl {0,1} = X, not {0,1}.
  EXPECT_EQ(rx.element(rx.lattice().join(1, 2)), PointSet::full(3));
  EXPECT_EQ(rx.element(rx.complement(1)), PointSet(3, {1}));

  const auto rd = regular_open_lattice(spaces::discrete(2));
  EXPECT_EQ(rd.elements(), all_subsets(2));
}

TEST(BooleanAlgebra, Examples) {
  EXPECT_TRUE(check_boolean_algebra(regular_open_lattice(spaces::sierpinski())));
  EXPECT_TRUE(check_boolean_algebra(regular_open_lattice(spaces::x3())));
  EXPECT_TRUE(check_boolean_algebra(regular_open_lattice(spaces::discrete(3))));
  // A wrong complement table is caught.
  const auto l = lattices::powerset(1);
  EXPECT_FALSE(check_boolean_algebra(l, {0, 1}));
  EXPECT_FALSE(find_complements(lattices::diamond()));
  EXPECT_FALSE(find_complements(lattices::chain(3)));
}

TEST(GGRelation, DiscreteIsGreaterEqual) {
  const auto r = regular_open_lattice(spaces::discrete(2));
  EXPECT_EQ(gg_from_topology(r), GGRelation::greater_equal(r.lattice()));
}

TEST(GGRelation, X3) {
  const auto r = regular_open_lattice(spaces::x3());
  const auto gg = gg_from_topology(r);
  const std::size_t zero = 0, a = 1, b = 2, top = 3;
  EXPECT_TRUE(gg.contains(top, a));    // X ⊇ cl{0} = {0,2}
  EXPECT_FALSE(gg.contains(b, a));     // {1} ⊉ {0,2}
  EXPECT_FALSE(gg.contains(a, a));     // {0} ⊉ {0,2}
  EXPECT_TRUE(gg.contains(top, zero));
  EXPECT_TRUE(gg.contains(zero, zero));
}

TEST(GGRelation, TopAboveBottomEverywhere) {
  for (const auto& t : enumerate_up_to(3)) {
    const auto r = regular_open_lattice(t);
    EXPECT_TRUE(gg_from_topology(r).contains(r.top(), r.bottom()));
  }
}

TEST(RLattice, PowersetWithGreaterEqual) {
  const auto p3 = lattices::powerset(3);
  const auto rep = check_r_lattice(p3, GGRelation::greater_equal(p3));
  EXPECT_TRUE(rep.distributive);
  for (const auto& a : rep.axioms) EXPECT_TRUE(a.result) << "axiom " << a.number;
  EXPECT_TRUE(rep.all_pass());
}

TEST(RLattice, DiscreteTopologicalRelation) {
  const auto r = regular_open_lattice(spaces::discrete(2));
  EXPECT_TRUE(check_r_lattice(r.lattice(), gg_from_topology(r)).all_pass());
}

TEST(RLattice, EmptyRelationFailsExistence) {
  const auto c2 = lattices::chain(2);
  const auto rep = check_r_lattice(c2, GGRelation(2));
  EXPECT_FALSE(rep.axioms[4].result);
  EXPECT_EQ(rep.axioms[4].result.witness, (std::vector<std::size_t>{1}));
  EXPECT_FALSE(rep.all_pass());
  // The quantified-over-pairs axioms hold vacuously.
  EXPECT_TRUE(rep.axioms[1].result);
  EXPECT_TRUE(rep.axioms[2].result);
  EXPECT_TRUE(rep.axioms[3].result);
  EXPECT_TRUE(rep.axioms[5].result);
}

TEST(RLattice, X3TopologicalRelationFailsExistence) {
  // {0} has nothing nonzero well inside it: cl{0} ⊄ {0}.
  const auto r = regular_open_lattice(spaces::x3());
  const auto rep = check_r_lattice(r.lattice(), gg_from_topology(r));
  EXPECT_FALSE(rep.axioms[4].result);
}

TEST(OrderIsomorphisms, Examples) {
  const auto rx = regular_open_lattice(spaces::x3());
  const auto rd = regular_open_lattice(spaces::discrete(2));
  const auto isos = find_order_isomorphisms(rx.lattice(), rd.lattice());
  EXPECT_EQ(isos, brute_force_isos(rx.lattice(), rd.lattice()));
  EXPECT_EQ(isos.size(), 2u);
  EXPECT_TRUE(find_order_isomorphisms(regular_open_lattice(spaces::sierpinski()).lattice(), rd.lattice()).empty());
}

TEST(OrderIsomorphisms, MatchBruteForceAndContainIdentity) {
  std::vector<FiniteLattice> ls = {lattices::chain(3), lattices::diamond(), lattices::powerset(2),
                                   lattices::powerset(3)};
  for (const auto& t : enumerate_topologies(3)) ls.push_back(regular_open_lattice(t).lattice());
  for (const auto& l : ls) {
    const auto isos = find_order_isomorphisms(l, l);
    EXPECT_EQ(isos, brute_force_isos(l, l));
    std::vector<std::size_t> id(l.size());
    std::iota(id.begin(), id.end(), 0);
    EXPECT_NE(std::find(isos.begin(), isos.end(), id), isos.end());
    for (const auto& phi : isos) EXPECT_NE(std::find(isos.begin(), isos.end(), invert_bijection(phi)), isos.end());
  }
}

TEST(AllRegularOpenLattices, BooleanAndDistributive) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_topologies(n)) {
      const auto r = regular_open_lattice(t);
      ASSERT_TRUE(check_boolean_algebra(r));
      ASSERT_TRUE(check_distributive(r.lattice()));
      ASSERT_TRUE(check_r_lattice(r.lattice(), GGRelation::greater_equal(r.lattice())).all_pass());
    }
}

TEST(AllRegularOpenLattices, GGMonotone) {
  for (const auto& t : enumerate_up_to(4)) {
    const auto r = regular_open_lattice(t);
    const auto& l = r.lattice();
    const auto gg = gg_from_topology(r);
    for (std::size_t f = 0; f < l.size(); ++f)
      for (std::size_t g = 0; g < l.size(); ++g)
        if (gg.contains(f, g))
          for (std::size_t h = 0; h < l.size(); ++h) {
            if (l.leq(f, h)) {
              ASSERT_TRUE(gg.contains(h, g));
            }
            if (l.leq(h, g)) {
              ASSERT_TRUE(gg.contains(f, h));
            }
          }
  }
}

TEST(Stone, Examples) {
  const auto sx = stone_space(regular_open_lattice(spaces::x3()));
  EXPECT_EQ(sx.space, spaces::discrete(2));
  EXPECT_EQ(sx.generators, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(stone_space(regular_open_lattice(spaces::sierpinski())).space, spaces::point());
  EXPECT_EQ(stone_space(regular_open_lattice(spaces::discrete(3))).space, spaces::discrete(3));
}

TEST(Stone, RejectsNonBoolean) {
  for (const auto& l : {lattices::diamond(), lattices::chain(3)}) {
    try {
      stone_space(l);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::NotBoolean);
    }
  }
}

TEST(Stone, AllSpacesUpTo3) {
  for (const auto& t : enumerate_up_to(3)) {
    const auto r = regular_open_lattice(t);
    const auto s = stone_space(r);
    ASSERT_EQ(s.space.size(), r.atoms().size());
    ASSERT_TRUE(is_order_isomorphism(r.lattice(), regular_open_lattice(s.space).lattice(), s.iso));
  }
}
