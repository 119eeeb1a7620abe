#ifndef REGOPEN_DENSITY_HPP
#define REGOPEN_DENSITY_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "regopen/error.hpp"
#include "regopen/lattice.hpp"
#include "regopen/regular_open.hpp"
#include "regopen/topology.hpp"

namespace regopen {

/// A dense subset Y of an ambient space together with the re-indexed
/// subspace on Y.
struct DenseEmbedding {
  Topology ambient;
  PointSet subset;
  Subspace sub;

  const Topology& sub_topology() const noexcept { return sub.topology; }
  const std::vector<std::size_t>& index_map() const noexcept { return sub.to_ambient; }
};

inline DenseEmbedding make_dense_embedding(const Topology& ambient, const PointSet& y) {
  ambient.check(y);
  if (!is_dense(ambient, y)) throw Error(Errc::NotDense, y.to_string() + " is not dense", {y.mask()});
  return DenseEmbedding{ambient, y, subspace(ambient, y)};
}

/// A pair of mutually inverse, order-preserving maps between two
/// regular-open algebras, by element index.
struct LatticeIsoWitness {
  RegularOpenLattice source;
  RegularOpenLattice target;
  std::vector<std::size_t> forward;
  std::vector<std::size_t> backward;

  const PointSet& image(const PointSet& u) const { return target.element(forward.at(source.require_index(u))); }
  const PointSet& preimage(const PointSet& v) const { return source.element(backward.at(target.require_index(v))); }
};

/// U ↦ U ∩ Y, in subspace coordinates.
inline PointSet restrict_regular(const DenseEmbedding& e, const PointSet& u) {
  if (!is_regular_open(e.ambient, u)) throw Error(Errc::NotRegularOpen, u.to_string() + " is not regular open", {u.mask()});
  PointSet v = e.sub.restrict_set(u);
  if (!is_regular_open(e.sub_topology(), v)) {
    throw Error(Errc::NotRegularOpen, "trace " + v.to_string() + " is not regular open in the subspace",
                {u.mask(), v.mask()});
  }
  return v;
}

/// V ↦ int(cl(V)), computed in the ambient space.
inline PointSet extend_regular(const DenseEmbedding& e, const PointSet& v) {
  if (!is_regular_open(e.sub_topology(), v))
    throw Error(Errc::NotRegularOpen, v.to_string() + " is not regular open in the subspace", {v.mask()});
  return regularize(e.ambient, e.sub.lift(v));
}

namespace detail {

inline void check_mutual_inverse(const LatticeIsoWitness& w) {
  for (std::size_t i = 0; i < w.forward.size(); ++i)
    if (w.backward.at(w.forward[i]) != i)
      throw Error(Errc::CompositionNotIdentity, "backward(forward(U)) != U", {w.source.element(i).mask()}, {i});
  for (std::size_t j = 0; j < w.backward.size(); ++j)
    if (w.forward.at(w.backward[j]) != j)
      throw Error(Errc::CompositionNotIdentity, "forward(backward(V)) != V", {w.target.element(j).mask()}, {j});
}

}  // namespace detail

/// Builds U ↦ U∩Y and V ↦ int cl V over the whole of R(X) and R(Y) and
/// checks that they are mutually inverse and preserve order both ways.
inline LatticeIsoWitness verify_ux0(const DenseEmbedding& e) {
  LatticeIsoWitness w{RegularOpenLattice(e.ambient), RegularOpenLattice(e.sub_topology()), {}, {}};
  for (const auto& u : w.source.elements()) w.forward.push_back(w.target.require_index(restrict_regular(e, u)));
  for (const auto& v : w.target.elements()) w.backward.push_back(w.source.require_index(extend_regular(e, v)));
  detail::check_mutual_inverse(w);
  if (!is_order_isomorphism(w.source.lattice(), w.target.lattice(), w.forward) ||
      !is_order_isomorphism(w.target.lattice(), w.source.lattice(), w.backward)) {
    throw Error(Errc::CompositionNotIdentity, "restriction does not preserve order in both directions");
  }
  return w;
}

/// cl(U) == cl(U ∩ Y) for open U and dense Y; both closures are computed
/// separately.
inline bool closure_density_check(const Topology& t, const PointSet& y, const PointSet& u) {
  t.check(y);
  if (!t.is_open(u)) throw Error(Errc::NotOpen, u.to_string() + " is not open", {u.mask()});
  if (!is_dense(t, y)) throw Error(Errc::NotDense, y.to_string() + " is not dense", {y.mask()});
  return closure(t, u) == closure(t, u & y);
}

/// For regular opens U ⊄ V returns W = U \ cl(V): nonempty, regular open,
/// contained in U and disjoint from V.
inline PointSet separating_witness(const Topology& t, const PointSet& u, const PointSet& v) {
  if (!is_regular_open(t, u)) throw Error(Errc::NotRegularOpen, u.to_string() + " is not regular open", {u.mask()});
  if (!is_regular_open(t, v)) throw Error(Errc::NotRegularOpen, v.to_string() + " is not regular open", {v.mask()});
  if (u.subset_of(v)) throw Error(Errc::ContainmentHolds, u.to_string() + " ⊆ " + v.to_string(), {u.mask(), v.mask()});
  return u & closure(t, v).complement();
}

/// Transfers R(X) to R(Y) through a common dense core Z. Z is taken to be
/// ex's subspace; `core_map[i]` is the point of ey's subspace that core
/// point i corresponds to, and must be a homeomorphism between the two
/// subspaces. The map is computed arrow by arrow
///   U ↦ U∩X0 ↦ pull back to Z ↦ push forward into Y ↦ int cl
/// and compared against extend(ey) ∘ relabel ∘ restrict(ex).
inline LatticeIsoWitness transfer_isomorphism(const DenseEmbedding& ex, const DenseEmbedding& ey,
                                              const std::vector<std::size_t>& core_map) {
  const Topology& zx = ex.sub_topology();
  const Topology& zy = ey.sub_topology();
  if (core_map.size() != zx.size() || zx.size() != zy.size() || zx.opens().size() != zy.opens().size())
    throw Error(Errc::CoresNotHomeomorphic, "cores differ in size");
  std::vector<bool> hit(zy.size(), false);
  for (std::size_t p : core_map) {
    if (p >= zy.size() || hit[p]) throw Error(Errc::CoresNotHomeomorphic, "core map is not a bijection");
    hit[p] = true;
  }
  for (const auto& u : zx.opens())
    if (!zy.is_open(image(u, core_map, zy.size())))
      throw Error(Errc::CoresNotHomeomorphic, "core map does not carry " + u.to_string() + " to an open set", {u.mask()});

  LatticeIsoWitness w{RegularOpenLattice(ex.ambient), RegularOpenLattice(ey.ambient), {}, {}};
  for (const auto& u : w.source.elements()) {
    const PointSet in_core = u & ex.subset;                                    // U ∩ X0
    const PointSet pulled = ex.sub.restrict_set(in_core);                       // φX^-1
    const PointSet pushed = ey.sub.lift(image(pulled, core_map, zy.size()));    // φY
    const PointSet arrows = regularize(ey.ambient, pushed);                     // int cl

    const PointSet composed = extend_regular(ey, image(restrict_regular(ex, u), core_map, zy.size()));
    if (arrows != composed) {
      throw Error(Errc::CompositionNotIso, "arrow-by-arrow image differs from the composed maps",
                  {u.mask(), arrows.mask(), composed.mask()});
    }
    const auto idx = w.target.index_of(arrows);
    if (!idx) throw Error(Errc::CompositionNotIso, "image is not regular open", {u.mask(), arrows.mask()});
    w.forward.push_back(*idx);
  }
  if (!is_order_isomorphism(w.source.lattice(), w.target.lattice(), w.forward))
    throw Error(Errc::CompositionNotIso, "transfer map is not an order isomorphism");
  w.backward = invert_bijection(w.forward);
  return w;
}

/// Points recovered from an inclusion-preserving bijection between bases.
struct PartialHomeomorphism {
  PointSet x0;
  PointSet y0;
  /// tau[x] is set exactly for x in x0.
  std::vector<std::optional<std::size_t>> tau;
  std::vector<PointSet> recovery_x;
  std::vector<PointSet> recovery_y;
  bool x0_dense = false;
  bool y0_dense = false;
};

/// Every open set of `t` is a union of members of `basis` (all of them open).
inline bool is_basis(const Topology& t, const std::vector<PointSet>& basis) {
  for (const auto& b : basis)
    if (!t.is_open(b)) return false;
  for (const auto& u : t.opens()) {
    PointSet covered = t.empty_set();
    for (const auto& b : basis)
      if (b.subset_of(u)) covered = covered | b;
    if (covered != u) return false;
  }
  return true;
}

/// Nonempty regular open sets of `t`.
inline std::vector<PointSet> regular_open_family(const Topology& t) {
  std::vector<PointSet> out;
  for (const auto& u : t.opens())
    if (!u.empty() && regularize(t, u) == u) out.push_back(u);
  return out;
}

/// R_X(x) = ⋂ { iso(U) : x ∈ U ∈ BX } and symmetrically R_Y(y), by literal
/// finite intersection. X0 holds the x with R_X(x) = {y} and R_Y(y) = {x};
/// tau sends x to that y. `iso[i]` is the index in `by` of the image of bx[i].
inline PartialHomeomorphism point_recovery(const Topology& tx, const std::vector<PointSet>& bx, const Topology& ty,
                                           const std::vector<PointSet>& by, const std::vector<std::size_t>& iso) {
  if (!is_basis(tx, bx)) throw Error(Errc::NotABasis, "first family is not a basis");
  if (!is_basis(ty, by)) throw Error(Errc::NotABasis, "second family is not a basis");
  if (bx.size() != by.size() || iso.size() != bx.size())
    throw Error(Errc::NotInclusionPreserving, "bases differ in size");
  std::vector<bool> hit(by.size(), false);
  for (std::size_t j : iso) {
    if (j >= by.size() || hit[j]) throw Error(Errc::NotInclusionPreserving, "map between bases is not a bijection");
    hit[j] = true;
  }
  for (std::size_t i = 0; i < bx.size(); ++i)
    for (std::size_t k = 0; k < bx.size(); ++k)
      if (bx[i].subset_of(bx[k]) != by[iso[i]].subset_of(by[iso[k]]))
        throw Error(Errc::NotInclusionPreserving, "inclusion not preserved", {bx[i].mask(), bx[k].mask()}, {i, k});
  const auto inv = invert_bijection(iso);

  PartialHomeomorphism out{PointSet(tx.size()), PointSet(ty.size()), std::vector<std::optional<std::size_t>>(tx.size()),
                           {}, {}, false, false};
  for (std::size_t x = 0; x < tx.size(); ++x) {
    PointSet r = ty.full();
    for (std::size_t i = 0; i < bx.size(); ++i)
      if (bx[i].contains(x)) r = r & by[iso[i]];
    out.recovery_x.push_back(r);
  }
  for (std::size_t y = 0; y < ty.size(); ++y) {
    PointSet r = tx.full();
    for (std::size_t j = 0; j < by.size(); ++j)
      if (by[j].contains(y)) r = r & bx[inv[j]];
    out.recovery_y.push_back(r);
  }
  for (std::size_t x = 0; x < tx.size(); ++x) {
    if (out.recovery_x[x].size() != 1) continue;
    const std::size_t y = out.recovery_x[x].members().front();
    if (out.recovery_y[y] == PointSet(tx.size(), {x})) {
      out.x0.insert(x);
      out.y0.insert(y);
      out.tau[x] = y;
    }
  }

  for (std::size_t x : out.x0.members())
    for (std::size_t i = 0; i < bx.size(); ++i)
      if (by[iso[i]].contains(*out.tau[x]) != bx[i].contains(x))
        throw Error(Errc::CompositionNotIso, "tau(x) ∈ T(U) <=> x ∈ U fails", {bx[i].mask()}, {x});

  if (!out.x0.empty()) {
    const Subspace sx = subspace(tx, out.x0);
    const Subspace sy = subspace(ty, out.y0);
    std::vector<std::size_t> local(sx.to_ambient.size());
    for (std::size_t i = 0; i < local.size(); ++i) {
      const std::size_t y = *out.tau[sx.to_ambient[i]];
      local[i] = sy.restrict_set(PointSet(ty.size(), {y})).members().front();
    }
    if (sx.topology.opens().size() != sy.topology.opens().size())
      throw Error(Errc::CompositionNotIso, "tau is not a homeomorphism of subspaces");
    for (const auto& u : sx.topology.opens())
      if (!sy.topology.is_open(image(u, local, sy.to_ambient.size())))
        throw Error(Errc::CompositionNotIso, "tau is not a homeomorphism of subspaces", {u.mask()});
  }
  out.x0_dense = is_dense(tx, out.x0);
  out.y0_dense = is_dense(ty, out.y0);
  return out;
}

/// The basis map induced by a lattice isomorphism on the listed members of
/// R(source): returns the image family and the index map for point_recovery.
inline std::pair<std::vector<PointSet>, std::vector<std::size_t>> induced_basis_map(const LatticeIsoWitness& w,
                                                                                    const std::vector<PointSet>& bx) {
  std::vector<PointSet> by;
  std::vector<std::size_t> iso;
  for (const auto& u : bx) {
    by.push_back(w.image(u));
    iso.push_back(iso.size());
  }
  return {by, iso};
}

}  // namespace regopen

#endif  // REGOPEN_DENSITY_HPP
