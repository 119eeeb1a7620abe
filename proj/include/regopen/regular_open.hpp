#ifndef REGOPEN_REGULAR_OPEN_HPP
#define REGOPEN_REGULAR_OPEN_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "regopen/error.hpp"
#include "regopen/lattice.hpp"
#include "regopen/topology.hpp"

namespace regopen {

/// a∧¬a = 0, a∨¬a = 1, ¬¬a = a and both De Morgan laws, for all a, b.
inline CheckResult check_boolean_algebra(const FiniteLattice& l, const std::vector<std::size_t>& complement) {
  const std::size_t n = l.size();
  if (complement.size() != n) return CheckResult::fail("complement table size", {});
  for (std::size_t a = 0; a < n; ++a) {
    if (complement[a] >= n) return CheckResult::fail("complement table range", {a});
    if (complement[complement[a]] != a) return CheckResult::fail("involution", {a});
    if (l.meet(a, complement[a]) != l.bottom()) return CheckResult::fail("a meet not-a is bottom", {a});
    if (l.join(a, complement[a]) != l.top()) return CheckResult::fail("a join not-a is top", {a});
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (complement[l.meet(a, b)] != l.join(complement[a], complement[b]))
        return CheckResult::fail("de morgan (meet)", {a, b});
      if (complement[l.join(a, b)] != l.meet(complement[a], complement[b]))
        return CheckResult::fail("de morgan (join)", {a, b});
    }
  return CheckResult::pass();
}

/// Complement of every element when each has exactly one; nullopt otherwise.
inline std::optional<std::vector<std::size_t>> find_complements(const FiniteLattice& l) {
  std::vector<std::size_t> out(l.size());
  for (std::size_t a = 0; a < l.size(); ++a) {
    std::optional<std::size_t> found;
    for (std::size_t b = 0; b < l.size(); ++b) {
      if (l.meet(a, b) != l.bottom() || l.join(a, b) != l.top()) continue;
      if (found) return std::nullopt;
      found = b;
    }
    if (!found) return std::nullopt;
    out[a] = *found;
  }
  return out;
}

/// R(X): the regular open sets of a finite space, ordered by inclusion.
/// Element indices follow mask order, so the empty set is element 0 and
/// the full set is the last element.
class RegularOpenLattice {
 public:
  explicit RegularOpenLattice(const Topology& t) : source_(t), lattice_(build(t)) {
    const auto& sets = lattice_.payloads();
    complement_.reserve(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) {
      auto c = lattice_.index_of(interior(t, sets[i].complement()));
      if (!c) throw Error(Errc::InvalidLattice, "interior of complement is not regular", {sets[i].mask()});
      complement_.push_back(*c);
      for (std::size_t j = 0; j < sets.size(); ++j) {
        if (sets[lattice_.meet(i, j)] != (sets[i] & sets[j]))
          throw Error(Errc::InvalidLattice, "meet is not intersection", {sets[i].mask(), sets[j].mask()});
        if (sets[lattice_.join(i, j)] != regularize(t, sets[i] | sets[j]))
          throw Error(Errc::InvalidLattice, "join is not the regularized union", {sets[i].mask(), sets[j].mask()});
      }
    }
    if (auto r = check_boolean_algebra(lattice_, complement_); !r) {
      throw Error(Errc::NotBoolean, "regular open algebra fails " + r.law, {}, r.witness);
    }
  }

  const Topology& source() const noexcept { return source_; }
  const FiniteLattice& lattice() const noexcept { return lattice_; }
  std::size_t size() const noexcept { return lattice_.size(); }
  const PointSet& element(std::size_t i) const { return lattice_.payload(i); }
  const std::vector<PointSet>& elements() const noexcept { return lattice_.payloads(); }
  const std::vector<std::size_t>& complement_table() const noexcept { return complement_; }
  std::size_t complement(std::size_t i) const { return complement_.at(i); }
  std::size_t top() const noexcept { return lattice_.top(); }
  std::size_t bottom() const noexcept { return lattice_.bottom(); }
  std::vector<std::size_t> atoms() const { return lattice_.atoms(); }

  std::optional<std::size_t> index_of(const PointSet& s) const { return lattice_.index_of(s); }

  std::size_t require_index(const PointSet& s) const {
    if (auto i = index_of(s)) return *i;
    throw Error(Errc::NotRegularOpen, s.to_string() + " is not regular open", {s.mask()});
  }

 private:
  static FiniteLattice build(const Topology& t) {
    std::vector<PointSet> regular;
    for (const auto& u : t.opens())
      if (regularize(t, u) == u) regular.push_back(u);
    return FiniteLattice::from_sets(regular);
  }

  Topology source_;
  FiniteLattice lattice_;
  std::vector<std::size_t> complement_;
};

inline RegularOpenLattice regular_open_lattice(const Topology& t) { return RegularOpenLattice(t); }

inline CheckResult check_boolean_algebra(const RegularOpenLattice& b) {
  return check_boolean_algebra(b.lattice(), b.complement_table());
}

/// f >> g iff U(f) contains the closure of U(g).
inline GGRelation gg_from_topology(const Topology& t, const RegularOpenLattice& l) {
  if (!(l.source() == t)) throw Error(Errc::SizeMismatch, "lattice was not built from this topology");
  GGRelation r(l.size());
  for (std::size_t g = 0; g < l.size(); ++g) {
    const PointSet cl = closure(t, l.element(g));
    for (std::size_t f = 0; f < l.size(); ++f)
      if (cl.subset_of(l.element(f))) r.insert(f, g);
  }
  return r;
}

inline GGRelation gg_from_topology(const RegularOpenLattice& l) { return gg_from_topology(l.source(), l); }

/// Finite Stone space of a Boolean lattice: one point per ultrafilter,
/// discrete topology, and the isomorphism element -> clopen set of points.
struct StoneSpace {
  Topology space;
  /// ultrafilters[p] lists the lattice elements in ultrafilter p.
  std::vector<std::vector<std::size_t>> ultrafilters;
  /// Generator of each (necessarily principal) ultrafilter; an atom.
  std::vector<std::size_t> generators;
  /// clopen[e] = points whose ultrafilter contains element e.
  std::vector<PointSet> clopen;
  /// Element index -> index in R(space).
  std::vector<std::size_t> iso;
};

/// Ultrafilters are found from the definition: among the filters of a
/// finite lattice (all principal, since a finite filter holds the meet of
/// its members) keep the proper ones containing exactly one of b, ¬b for
/// every b.
inline StoneSpace stone_space(const FiniteLattice& l) {
  auto complement = find_complements(l);
  if (!complement) throw Error(Errc::NotBoolean, "some element has no unique complement");
  if (auto d = check_distributive(l); !d) throw Error(Errc::NotBoolean, "lattice is not distributive", {}, d.witness);
  if (auto r = check_boolean_algebra(l, *complement); !r) throw Error(Errc::NotBoolean, r.law, {}, r.witness);

  StoneSpace out{spaces::discrete(0), {}, {}, {}, {}};
  for (std::size_t a = 0; a < l.size(); ++a) {
    if (a == l.bottom()) continue;
    std::vector<std::size_t> filter;
    for (std::size_t b = 0; b < l.size(); ++b)
      if (l.leq(a, b)) filter.push_back(b);
    auto in = [&](std::size_t b) { return l.leq(a, b); };
    bool ultra = true;
    for (std::size_t b = 0; b < l.size() && ultra; ++b) ultra = in(b) != in((*complement)[b]);
    if (ultra) {
      out.ultrafilters.push_back(std::move(filter));
      out.generators.push_back(a);
    }
  }
  const std::size_t k = out.ultrafilters.size();
  out.space = spaces::discrete(k);
  for (std::size_t e = 0; e < l.size(); ++e) {
    PointSet s(k);
    for (std::size_t p = 0; p < k; ++p)
      if (l.leq(out.generators[p], e)) s.insert(p);
    out.clopen.push_back(s);
  }
  const RegularOpenLattice clopens(out.space);
  for (const auto& s : out.clopen) out.iso.push_back(clopens.require_index(s));
  if (!is_order_isomorphism(l, clopens.lattice(), out.iso)) {
    throw Error(Errc::CompositionNotIso, "element -> clopen map is not an order isomorphism");
  }
  return out;
}

inline StoneSpace stone_space(const RegularOpenLattice& b) {
  if (auto r = check_boolean_algebra(b); !r) throw Error(Errc::NotBoolean, r.law, {}, r.witness);
  return stone_space(b.lattice());
}

}  // namespace regopen

#endif  // REGOPEN_REGULAR_OPEN_HPP
