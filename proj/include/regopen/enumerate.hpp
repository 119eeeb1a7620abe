#ifndef REGOPEN_ENUMERATE_HPP
#define REGOPEN_ENUMERATE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "regopen/error.hpp"
#include "regopen/lattice.hpp"
#include "regopen/regular_open.hpp"
#include "regopen/topology.hpp"

namespace regopen {

inline constexpr std::size_t kMaxEnumerationSize = 5;

struct EnumerationSpec {
  enum class Mode { All, UpToHomeomorphism };

  std::size_t n = 1;
  Mode mode = Mode::All;
  std::optional<std::size_t> limit = std::nullopt;
  /// n = 5 is only enumerated when this is set.
  bool allow_n5 = false;
};

namespace detail {

using Family = std::uint64_t;  // bit s set iff the subset with mask s is open

inline void guard_enumeration(std::size_t n, bool allow_n5) {
  if (n == 0 || n > kMaxEnumerationSize)
    throw Error(Errc::SizeGuardExceeded, "enumeration needs 1 <= n <= " + std::to_string(kMaxEnumerationSize));
  if (n == kMaxEnumerationSize && !allow_n5)
    throw Error(Errc::SizeGuardExceeded, "n = 5 must be requested explicitly");
}

inline Family union_intersection_closure(Family fam, std::size_t n) {
  const std::uint64_t subsets = std::uint64_t{1} << n;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::uint64_t a = 0; a < subsets; ++a) {
      if (!((fam >> a) & 1U)) continue;
      for (std::uint64_t b = a + 1; b < subsets; ++b) {
        if (!((fam >> b) & 1U)) continue;
        const Family add = (Family{1} << (a | b)) | (Family{1} << (a & b));
        if ((fam | add) != fam) {
          fam |= add;
          grew = true;
        }
      }
    }
  }
  return fam;
}

inline Topology to_topology(std::size_t n, Family fam) {
  std::vector<PointSet> opens;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
    if ((fam >> s) & 1U) opens.push_back(PointSet::from_mask(n, s));
  return Topology::validate(n, std::move(opens));
}

inline Family to_family(const Topology& t) {
  Family fam = 0;
  for (const auto& u : t.opens()) fam |= Family{1} << u.mask();
  return fam;
}

inline std::uint64_t relabel_mask(std::uint64_t s, const std::vector<std::size_t>& perm) {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    if ((s >> i) & 1U) out |= std::uint64_t{1} << perm[i];
  return out;
}

inline Family relabel_family(Family fam, std::size_t n, const std::vector<std::size_t>& perm) {
  Family out = 0;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
    if ((fam >> s) & 1U) out |= Family{1} << relabel_mask(s, perm);
  return out;
}

/// Every labeled topology on n points. Starting from {∅, X}, repeatedly add
/// one missing subset and close under ∪ and ∩; every topology is reached
/// because the closure of any subfamily of a topology stays inside it.
inline std::vector<Family> generate_families(std::size_t n) {
  const std::uint64_t subsets = std::uint64_t{1} << n;
  const Family start = Family{1} | (Family{1} << (subsets - 1));
  std::unordered_set<Family> seen{start};
  std::vector<Family> frontier{start};
  while (!frontier.empty()) {
    std::vector<Family> next;
    for (Family fam : frontier)
      for (std::uint64_t s = 1; s + 1 < subsets; ++s) {
        if ((fam >> s) & 1U) continue;
        const Family grown = union_intersection_closure(fam | (Family{1} << s), n);
        if (seen.insert(grown).second) next.push_back(grown);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace detail

/// Canonical representative of t's homeomorphism class: the relabeling whose
/// open family, read as a mask over subset masks, is smallest.
inline Topology canonical_form(const Topology& t) {
  const std::size_t n = t.size();
  if (n > 6) throw Error(Errc::SizeGuardExceeded, "canonical form needs n <= 6");
  const detail::Family fam = detail::to_family(t);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  detail::Family best = fam;
  do {
    best = std::min(best, detail::relabel_family(fam, n, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return detail::to_topology(n, best);
}

/// Topologies on {0..n-1}, sorted, each exactly once. In up-to-homeomorphism
/// mode one canonical representative per class is emitted.
inline std::vector<Topology> enumerate_topologies(const EnumerationSpec& spec) {
  detail::guard_enumeration(spec.n, spec.allow_n5);
  auto families = detail::generate_families(spec.n);
  std::vector<Topology> out;
  if (spec.mode == EnumerationSpec::Mode::All) {
    for (auto fam : families) out.push_back(detail::to_topology(spec.n, fam));
  } else {
    std::unordered_set<detail::Family> classes;
    for (auto fam : families) {
      Topology c = canonical_form(detail::to_topology(spec.n, fam));
      if (classes.insert(detail::to_family(c)).second) out.push_back(std::move(c));
    }
  }
  std::sort(out.begin(), out.end());
  if (spec.limit && out.size() > *spec.limit) out.erase(out.begin() + static_cast<std::ptrdiff_t>(*spec.limit), out.end());
  return out;
}

inline std::vector<Topology> enumerate_topologies(std::size_t n) { return enumerate_topologies(EnumerationSpec{n}); }

/// Labeled topologies for every n in 1..max_n, in order.
inline std::vector<Topology> enumerate_up_to(std::size_t max_n, bool allow_n5 = false) {
  std::vector<Topology> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto batch = enumerate_topologies(EnumerationSpec{n, EnumerationSpec::Mode::All, std::nullopt, allow_n5});
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

/// Nonempty Y with cl(Y) = X, in mask order.
inline std::vector<PointSet> enumerate_dense_subsets(const Topology& t) {
  std::vector<PointSet> out;
  for (const auto& y : all_subsets(t.size()))
    if (!y.empty() && is_dense(t, y)) out.push_back(y);
  return out;
}

/// Two non-homeomorphic spaces with order-isomorphic regular-open algebras.
struct CounterexamplePair {
  Topology first;
  Topology second;
  /// One isomorphism R(first) -> R(second), lexicographically first.
  std::vector<std::size_t> iso;
  std::size_t iso_count = 0;
  GGRelation gg_first;
  GGRelation gg_second;
  /// (f, g) ∈ >>_first  xor  (iso f, iso g) ∈ >>_second for some pair.
  bool gg_differs = false;
  bool gg_differs_under_every_iso = false;
};

namespace detail {

inline bool gg_differs_under(const GGRelation& a, const GGRelation& b, const std::vector<std::size_t>& phi) {
  for (std::size_t f = 0; f < a.size(); ++f)
    for (std::size_t g = 0; g < a.size(); ++g)
      if (a.contains(f, g) != b.contains(phi[f], phi[g])) return true;
  return false;
}

}  // namespace detail

/// All pairs of homeomorphism classes on at most max_n points (first before
/// second in canonical order) whose regular-open algebras are isomorphic.
inline std::vector<CounterexamplePair> counterexample_search(std::size_t max_n) {
  if (max_n == 0 || max_n > 4) throw Error(Errc::SizeGuardExceeded, "counterexample search needs 1 <= max_n <= 4");
  std::vector<Topology> classes;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto batch = enumerate_topologies(EnumerationSpec{n, EnumerationSpec::Mode::UpToHomeomorphism});
    classes.insert(classes.end(), batch.begin(), batch.end());
  }
  std::vector<RegularOpenLattice> algebras;
  std::vector<GGRelation> relations;
  for (const auto& t : classes) {
    algebras.emplace_back(t);
    relations.push_back(gg_from_topology(algebras.back()));
  }

  std::vector<CounterexamplePair> out;
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      if (is_homeomorphic(classes[i], classes[j])) continue;
      const auto isos = find_order_isomorphisms(algebras[i].lattice(), algebras[j].lattice());
      if (isos.empty()) continue;
      CounterexamplePair p{classes[i], classes[j], isos.front(), isos.size(), relations[i], relations[j], false, true};
      p.gg_differs = detail::gg_differs_under(p.gg_first, p.gg_second, p.iso);
      for (const auto& phi : isos)
        if (!detail::gg_differs_under(p.gg_first, p.gg_second, phi)) p.gg_differs_under_every_iso = false;
      out.push_back(std::move(p));
    }
  return out;
}

}  // namespace regopen

#endif  // REGOPEN_ENUMERATE_HPP
