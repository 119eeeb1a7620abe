#include <gtest/gtest.h>

#include <numeric>

#include "regopen/density.hpp"
#include "regopen/enumerate.hpp"

using namespace regopen;

namespace {

PointSet set(std::size_t n, std::initializer_list<std::size_t> m) { return PointSet(n, m); }

template <typename Fn>
Errc code_of(Fn fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return Errc::ParseError;
}

std::vector<std::size_t> identity(std::size_t n) {
  std::vector<std::size_t> id(n);
  std::iota(id.begin(), id.end(), 0);
  return id;
}

}  // namespace

TEST(DenseEmbedding, RequiresDensity) {
  EXPECT_EQ(code_of([] { make_dense_embedding(spaces::discrete(2), set(2, {0})); }), Errc::NotDense);
  const auto e = make_dense_embedding(spaces::x3(), set(3, {0, 1}));
  EXPECT_EQ(e.sub_topology(), spaces::discrete(2));
}

TEST(RestrictRegular, Examples) {
  const auto e = make_dense_embedding(spaces::x3(), set(3, {0, 1}));
  EXPECT_EQ(restrict_regular(e, set(3, {0})), set(2, {0}));
  EXPECT_EQ(restrict_regular(e, set(3, {})), set(2, {}));

  const auto s = make_dense_embedding(spaces::sierpinski(), set(2, {0}));
  EXPECT_EQ(restrict_regular(s, set(2, {0, 1})), set(1, {0}));
  EXPECT_EQ(code_of([&] { restrict_regular(s, set(2, {0})); }), Errc::NotRegularOpen);
}

TEST(ExtendRegular, Examples) {
  const auto e = make_dense_embedding(spaces::x3(), set(3, {0, 1}));
  EXPECT_EQ(extend_regular(e, set(2, {0, 1})), PointSet::full(3));
  EXPECT_EQ(extend_regular(e, set(2, {})), set(3, {}));
  const auto s = make_dense_embedding(spaces::sierpinski(), set(2, {0}));
  EXPECT_EQ(extend_regular(s, set(1, {0})), set(2, {0, 1}));
}

TEST(VerifyUx0, Examples) {
  const auto w = verify_ux0(make_dense_embedding(spaces::x3(), set(3, {0, 1})));
  EXPECT_EQ(w.source.size(), 4u);
  EXPECT_EQ(w.target.elements(), all_subsets(2));
  EXPECT_EQ(w.forward, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(w.image(PointSet::full(3)), set(2, {0, 1}));

  const auto s = verify_ux0(make_dense_embedding(spaces::sierpinski(), set(2, {0})));
  EXPECT_EQ(s.source.size(), 2u);
  EXPECT_EQ(s.forward, (std::vector<std::size_t>{0, 1}));

  for (const auto& t : enumerate_topologies(3)) {
    const auto id = verify_ux0(make_dense_embedding(t, t.full()));
    EXPECT_EQ(id.forward, identity(id.source.size()));
  }
}

TEST(VerifyUx0, ExhaustiveUpTo4) {
  std::size_t instances = 0;
  for (const auto& t : enumerate_up_to(4))
    for (const auto& y : enumerate_dense_subsets(t)) {
      const auto w = verify_ux0(make_dense_embedding(t, y));
      ASSERT_TRUE(is_order_isomorphism(w.source.lattice(), w.target.lattice(), w.forward));
      ++instances;
    }
  EXPECT_GT(instances, 389u);
}

TEST(ClosureDensity, Examples) {
  EXPECT_TRUE(closure_density_check(spaces::sierpinski(), set(2, {0}), set(2, {0, 1})));
  EXPECT_TRUE(closure_density_check(spaces::x3(), set(3, {0, 1}), set(3, {0})));
  EXPECT_EQ(closure(spaces::x3(), set(3, {0})), set(3, {0, 2}));
  EXPECT_TRUE(closure_density_check(spaces::x3(), set(3, {0, 1}), set(3, {})));
  EXPECT_EQ(code_of([] { closure_density_check(spaces::x3(), set(3, {0, 1}), set(3, {0, 2})); }), Errc::NotOpen);
  EXPECT_EQ(code_of([] { closure_density_check(spaces::x3(), set(3, {0}), set(3, {0})); }), Errc::NotDense);
}

TEST(ClosureDensity, ExhaustiveUpTo4) {
  for (const auto& t : enumerate_up_to(4))
    for (const auto& y : enumerate_dense_subsets(t))
      for (const auto& u : t.opens()) ASSERT_TRUE(closure_density_check(t, y, u));
}

TEST(SeparatingWitness, Examples) {
  EXPECT_EQ(separating_witness(spaces::discrete(3), set(3, {0, 1}), set(3, {1, 2})), set(3, {0}));
  EXPECT_EQ(separating_witness(spaces::x3(), set(3, {0}), set(3, {1})), set(3, {0}));
  EXPECT_EQ(code_of([] { separating_witness(spaces::x3(), set(3, {0}), PointSet::full(3)); }), Errc::ContainmentHolds);
  EXPECT_EQ(code_of([] { separating_witness(spaces::sierpinski(), set(2, {0}), set(2, {})); }), Errc::NotRegularOpen);
}

TEST(SeparatingWitness, StatedRolesCanBeUnsatisfiable) {
  // With V = ∅ nothing nonempty lies inside V, yet U \ cl V = U separates.
  const auto t = spaces::discrete(1);
  const auto u = PointSet::full(1);
  const auto v = PointSet(1);
  EXPECT_EQ(separating_witness(t, u, v), u);
  for (const auto& w : all_subsets(1)) EXPECT_FALSE(!w.empty() && w.subset_of(v));
}

TEST(SeparatingWitness, ExhaustiveUpTo4) {
  for (const auto& t : enumerate_up_to(4)) {
    const auto r = regular_open_lattice(t);
    for (const auto& u : r.elements())
      for (const auto& v : r.elements()) {
        if (u.subset_of(v)) continue;
        const auto w = separating_witness(t, u, v);
        ASSERT_FALSE(w.empty());
        ASSERT_TRUE(is_regular_open(t, w));
        ASSERT_TRUE(w.subset_of(u));
        ASSERT_FALSE(w.intersects(v));
      }
  }
}

TEST(TransferIsomorphism, X3ToD2) {
  const auto ex = make_dense_embedding(spaces::x3(), set(3, {0, 1}));
  const auto ey = make_dense_embedding(spaces::discrete(2), PointSet::full(2));
  const auto w = transfer_isomorphism(ex, ey, {0, 1});
  EXPECT_EQ(w.forward, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(w.image(PointSet::full(3)), set(2, {0, 1}));
  EXPECT_FALSE(is_homeomorphic(spaces::x3(), spaces::discrete(2)));

  // Swapping the core points swaps the atoms.
  const auto swapped = transfer_isomorphism(ex, ey, {1, 0});
  EXPECT_EQ(swapped.forward, (std::vector<std::size_t>{0, 2, 1, 3}));
}

TEST(TransferIsomorphism, IdentityAndPoint) {
  const auto t = spaces::x3();
  const auto e = make_dense_embedding(t, t.full());
  EXPECT_EQ(transfer_isomorphism(e, e, identity(3)).forward, identity(4));

  const auto ex = make_dense_embedding(spaces::sierpinski(), set(2, {0}));
  const auto ey = make_dense_embedding(spaces::point(), set(1, {0}));
  const auto w = transfer_isomorphism(ex, ey, {0});
  EXPECT_EQ(w.forward, (std::vector<std::size_t>{0, 1}));
}

TEST(TransferIsomorphism, CoresMustBeHomeomorphic) {
  const auto ex = make_dense_embedding(spaces::x3(), set(3, {0, 1}));
  const auto ey = make_dense_embedding(spaces::sierpinski(), PointSet::full(2));
  EXPECT_EQ(code_of([&] { transfer_isomorphism(ex, ey, {0, 1}); }), Errc::CoresNotHomeomorphic);
  EXPECT_EQ(code_of([&] { transfer_isomorphism(ex, ex, {0, 0}); }), Errc::CoresNotHomeomorphic);
}

TEST(TransferIsomorphism, RoundTripIsIdentity) {
  for (const auto& t : enumerate_up_to(3))
    for (const auto& y : enumerate_dense_subsets(t)) {
      const auto ex = make_dense_embedding(t, y);
      const auto core = ex.sub_topology();
      const auto ey = make_dense_embedding(core, core.full());
      const auto there = transfer_isomorphism(ex, ey, identity(core.size()));
      const auto back = transfer_isomorphism(ey, ex, identity(core.size()));
      for (std::size_t i = 0; i < there.forward.size(); ++i) ASSERT_EQ(back.forward[there.forward[i]], i);
    }
}

TEST(PointRecovery, IdentityOnDiscrete) {
  const auto d2 = spaces::discrete(2);
  const auto b = regular_open_family(d2);
  const auto ph = point_recovery(d2, b, d2, b, identity(b.size()));
  EXPECT_TRUE(ph.x0.is_full());
  EXPECT_TRUE(ph.y0.is_full());
  EXPECT_EQ(ph.tau[0], 0u);
  EXPECT_EQ(ph.tau[1], 1u);
}

TEST(PointRecovery, X3AgainstD2) {
  const auto ex = make_dense_embedding(spaces::x3(), set(3, {0, 1}));
  const auto ey = make_dense_embedding(spaces::discrete(2), PointSet::full(2));
  const auto w = transfer_isomorphism(ex, ey, {0, 1});
  const std::vector<PointSet> bx = {set(3, {0}), set(3, {1}), PointSet::full(3)};
  auto [by, iso] = induced_basis_map(w, bx);
  EXPECT_EQ(by, (std::vector<PointSet>{set(2, {0}), set(2, {1}), set(2, {0, 1})}));

  const auto ph = point_recovery(spaces::x3(), bx, spaces::discrete(2), by, iso);
  EXPECT_EQ(ph.recovery_x[2], set(2, {0, 1}));
  EXPECT_EQ(ph.x0, set(3, {0, 1}));
  EXPECT_EQ(ph.y0, set(2, {0, 1}));
  EXPECT_EQ(ph.tau[0], 0u);
  EXPECT_EQ(ph.tau[1], 1u);
  EXPECT_FALSE(ph.tau[2]);
  EXPECT_TRUE(ph.x0_dense);
  EXPECT_TRUE(ph.y0_dense);
}

TEST(PointRecovery, SwappedIso) {
  const std::vector<PointSet> bx = {set(3, {0}), set(3, {1}), PointSet::full(3)};
  const std::vector<PointSet> by = {set(2, {1}), set(2, {0}), set(2, {0, 1})};
  const auto ph = point_recovery(spaces::x3(), bx, spaces::discrete(2), by, {0, 1, 2});
  EXPECT_EQ(ph.tau[0], 1u);
  EXPECT_EQ(ph.tau[1], 0u);
}

TEST(PointRecovery, RejectsBadInput) {
  const std::vector<PointSet> by = {set(2, {0}), set(2, {1}), set(2, {0, 1})};
  // {0} alone cannot produce {1}.
  EXPECT_EQ(code_of([&] {
              point_recovery(spaces::x3(), {set(3, {0}), PointSet::full(3)}, spaces::discrete(2), {set(2, {0}), set(2, {0, 1})},
                             {0, 1});
            }),
            Errc::NotABasis);
  EXPECT_EQ(code_of([&] {
              point_recovery(spaces::x3(), {set(3, {0}), set(3, {1}), PointSet::full(3)}, spaces::discrete(2), by, {2, 1, 0});
            }),
            Errc::NotInclusionPreserving);
}

TEST(PointRecovery, RecoveredPointsAreFixedByTheDenseInclusion) {
  std::size_t checked = 0;
  for (const auto& t : enumerate_up_to(4)) {
    const auto bx = regular_open_family(t);
    if (!is_basis(t, bx)) continue;
    for (const auto& y : enumerate_dense_subsets(t)) {
      const auto e = make_dense_embedding(t, y);
      auto [by, iso] = induced_basis_map(verify_ux0(e), bx);
      if (!is_basis(e.sub_topology(), by)) continue;
      const auto ph = point_recovery(t, bx, e.sub_topology(), by, iso);
      for (std::size_t x : ph.x0.members()) ASSERT_EQ(e.index_map()[*ph.tau[x]], x);
      ++checked;
    }
  }
  EXPECT_GT(checked, 0u);
}
