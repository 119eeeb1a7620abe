#ifndef REGOPEN_IDEALS_HPP
#define REGOPEN_IDEALS_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regopen/error.hpp"
#include "regopen/point_set.hpp"
#include "regopen/topology.hpp"

namespace regopen {

inline constexpr std::size_t kMaxPowersetSize = 5;

/// A family of subsets of {0..ambient-1}, sorted by mask. Used for ideals
/// and ultrafilters of the powerset lattice.
struct SetFamily {
  std::size_t ambient = 0;
  std::vector<PointSet> members;

  bool contains(const PointSet& s) const { return std::binary_search(members.begin(), members.end(), s); }

  bool subset_of(const SetFamily& other) const {
    return std::all_of(members.begin(), members.end(), [&](const PointSet& s) { return other.contains(s); });
  }

  friend bool operator==(const SetFamily&, const SetFamily&) = default;
};

using IdealFamily = SetFamily;

namespace detail {

inline void guard_powerset(std::size_t n) {
  if (n > kMaxPowersetSize) {
    throw Error(Errc::SizeGuardExceeded,
                "powerset enumeration limited to n <= " + std::to_string(kMaxPowersetSize));
  }
}

// Family of subsets encoded as a bit mask over the 2^n subset masks.
inline SetFamily decode_family(std::size_t n, std::uint64_t family) {
  SetFamily out{n, {}};
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
    if ((family >> s) & 1U) out.members.push_back(PointSet::from_mask(n, s));
  return out;
}

/// Every down-closed family of subsets of {0..n-1}. Subsets are decided in
/// order of increasing size; a subset may be included only if every subset
/// obtained by dropping one point already is.
inline std::vector<std::uint64_t> down_closed_families(std::size_t n) {
  std::vector<std::uint64_t> order;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) order.push_back(s);
  std::stable_sort(order.begin(), order.end(),
                   [](std::uint64_t a, std::uint64_t b) { return std::popcount(a) < std::popcount(b); });
  std::vector<std::uint64_t> out;
  auto rec = [&](auto&& self, std::size_t k, std::uint64_t fam) -> void {
    if (k == order.size()) {
      out.push_back(fam);
      return;
    }
    const std::uint64_t s = order[k];
    self(self, k + 1, fam);
    for (std::uint64_t b = s; b != 0; b &= b - 1) {
      const std::uint64_t lower = s & ~(b & (~b + 1));
      if (((fam >> lower) & 1U) == 0) return;
    }
    self(self, k + 1, fam | (std::uint64_t{1} << s));
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Ideals of P({0..n-1}): families containing the empty set, closed
/// downward under inclusion and under pairwise union.
inline std::vector<IdealFamily> ideals(std::size_t n) {
  detail::guard_powerset(n);
  std::vector<IdealFamily> out;
  for (std::uint64_t fam : detail::down_closed_families(n)) {
    if ((fam & 1U) == 0) continue;
    bool union_closed = true;
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << n) && union_closed; ++a)
      for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b)
        if (((fam >> a) & 1U) && ((fam >> b) & 1U) && !((fam >> (a | b)) & 1U)) {
          union_closed = false;
          break;
        }
    if (union_closed) out.push_back(detail::decode_family(n, fam));
  }
  return out;
}

inline bool is_proper(const IdealFamily& i) { return !i.contains(PointSet::full(i.ambient)); }

/// Proper ideals not strictly contained in another proper ideal.
inline std::vector<IdealFamily> maximal_ideals(std::size_t n) {
  const auto all = ideals(n);
  std::vector<IdealFamily> out;
  for (const auto& i : all) {
    if (!is_proper(i)) continue;
    bool maximal = true;
    for (const auto& j : all)
      if (is_proper(j) && j != i && i.subset_of(j)) maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

/// Complements (within the powerset) of the maximal ideals.
inline std::vector<SetFamily> ultrafilters(std::size_t n) {
  std::vector<SetFamily> out;
  for (const auto& m : maximal_ideals(n)) {
    SetFamily u{n, {}};
    for (const auto& s : all_subsets(n))
      if (!m.contains(s)) u.members.push_back(s);
    out.push_back(std::move(u));
  }
  return out;
}

/// The point x with u = {S : x in S}, if there is one.
inline std::optional<std::size_t> principal_point(const SetFamily& u) {
  for (std::size_t x = 0; x < u.ambient; ++x) {
    bool match = true;
    for (const auto& s : all_subsets(u.ambient))
      if (s.contains(x) != u.contains(s)) {
        match = false;
        break;
      }
    if (match) return x;
  }
  return std::nullopt;
}

/// {I : I ⊆ w}.
inline IdealFamily ideal_of_open(const PointSet& w) {
  IdealFamily out{w.universe(), {}};
  for (const auto& s : all_subsets(w.universe()))
    if (s.subset_of(w)) out.members.push_back(s);
  return out;
}

/// Union of the members of the ideal.
inline PointSet open_of_ideal(const IdealFamily& a) {
  PointSet w(a.ambient);
  for (const auto& s : a.members) w = w | s;
  return w;
}

/// The verified correspondence between proper opens of the discrete space
/// D_n and proper ideals of P(n).
struct IdealOpenCorrespondence {
  std::size_t n = 0;
  std::vector<PointSet> opens;
  std::vector<IdealFamily> ideals;  // ideals[i] corresponds to opens[i]
};

inline IdealOpenCorrespondence ideal_open_correspondence(std::size_t n) {
  detail::guard_powerset(n);
  const Topology dn = spaces::discrete(n);
  IdealOpenCorrespondence out{n, {}, {}};
  for (const auto& w : dn.opens()) {
    if (w.is_full()) continue;
    out.opens.push_back(w);
    out.ideals.push_back(ideal_of_open(w));
  }
  std::vector<IdealFamily> proper;
  for (auto& i : ideals(n))
    if (is_proper(i)) proper.push_back(std::move(i));

  if (proper.size() != out.ideals.size()) {
    throw Error(Errc::CompositionNotIso, "proper opens and proper ideals differ in number");
  }
  for (const auto& i : proper) {
    if (std::find(out.ideals.begin(), out.ideals.end(), i) == out.ideals.end())
      throw Error(Errc::CompositionNotIso, "ideal not reached from any open", {open_of_ideal(i).mask()});
  }
  for (std::size_t i = 0; i < out.opens.size(); ++i) {
    if (open_of_ideal(out.ideals[i]) != out.opens[i])
      throw Error(Errc::CompositionNotIdentity, "W -> A_W -> W is not the identity", {out.opens[i].mask()});
    for (std::size_t j = 0; j < out.opens.size(); ++j) {
      if (out.opens[i].subset_of(out.opens[j]) != out.ideals[i].subset_of(out.ideals[j]))
        throw Error(Errc::NotInclusionPreserving, "W ⊆ V  <=>  A_W ⊆ A_V fails",
                    {out.opens[i].mask(), out.opens[j].mask()});
    }
  }
  return out;
}

}  // namespace regopen

#endif  // REGOPEN_IDEALS_HPP
