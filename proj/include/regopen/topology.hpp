#ifndef REGOPEN_TOPOLOGY_HPP
#define REGOPEN_TOPOLOGY_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "regopen/error.hpp"
#include "regopen/point_set.hpp"

namespace regopen {

/// A finite topological space given by its explicit family of open sets.
/// Immutable once built; the family is duplicate-free and sorted by mask.
/// Minimal neighbourhoods are computed once at construction.
class Topology {
 public:
  /// Validates `family` and returns the canonical topology. Checks, in order:
  /// indices in range, presence of the empty and full sets, closure under
  /// pairwise union, closure under pairwise intersection.
  static Topology validate(std::size_t n, std::vector<PointSet> family) {
    for (const auto& s : family) {
      if (s.universe() != n) {
        throw Error(Errc::IndexOutOfRange, "open set over a ground set of size " +
                                               std::to_string(s.universe()) + ", expected " + std::to_string(n),
                    {s.mask()});
      }
    }
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());

    const PointSet none = PointSet::empty(n);
    const PointSet all = PointSet::full(n);
    if (!std::binary_search(family.begin(), family.end(), none) ||
        !std::binary_search(family.begin(), family.end(), all)) {
      throw Error(Errc::MissingEmptyOrFull, "family must contain the empty set and the full set");
    }
    auto present = [&](const PointSet& s) { return std::binary_search(family.begin(), family.end(), s); };
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        if (!present(family[i] | family[j])) {
          throw Error(Errc::NotClosedUnderUnion,
                      family[i].to_string() + " | " + family[j].to_string() + " is not open",
                      {family[i].mask(), family[j].mask()});
        }
      }
    }
    for (std::size_t i = 0; i < family.size(); ++i) {
      for (std::size_t j = i + 1; j < family.size(); ++j) {
        if (!present(family[i] & family[j])) {
          throw Error(Errc::NotClosedUnderIntersection,
                      family[i].to_string() + " & " + family[j].to_string() + " is not open",
                      {family[i].mask(), family[j].mask()});
        }
      }
    }
    return Topology(n, std::move(family));
  }

  static Topology validate(std::size_t n, const std::vector<std::vector<std::size_t>>& family) {
    std::vector<PointSet> sets;
    sets.reserve(family.size());
    for (const auto& members : family) sets.emplace_back(n, members);
    return validate(n, std::move(sets));
  }

  std::size_t size() const noexcept { return n_; }
  const std::vector<PointSet>& opens() const noexcept { return opens_; }
  PointSet full() const { return PointSet::full(n_); }
  PointSet empty_set() const { return PointSet::empty(n_); }

  bool is_open(const PointSet& a) const {
    check(a);
    return std::binary_search(opens_.begin(), opens_.end(), a);
  }

  /// Least open set containing `x`.
  const PointSet& minimal_neighborhood(std::size_t x) const {
    if (x >= n_) throw Error(Errc::IndexOutOfRange, "point " + std::to_string(x) + " out of range", {}, {x});
    return minimal_[x];
  }

  void check(const PointSet& a) const {
    if (a.universe() != n_) {
      throw Error(Errc::IndexOutOfRange, "set " + a.to_string() + " is over a ground set of size " +
                                             std::to_string(a.universe()) + ", expected " + std::to_string(n_),
                  {a.mask()});
    }
  }

  friend bool operator==(const Topology& a, const Topology& b) { return a.n_ == b.n_ && a.opens_ == b.opens_; }
  friend bool operator<(const Topology& a, const Topology& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.opens_ < b.opens_;
  }

 private:
  Topology(std::size_t n, std::vector<PointSet> opens) : n_(n), opens_(std::move(opens)) {
    minimal_.reserve(n_);
    for (std::size_t x = 0; x < n_; ++x) {
      PointSet nb = PointSet::full(n_);
      for (const auto& u : opens_) {
        if (u.contains(x)) nb = nb & u;
      }
      minimal_.push_back(nb);
    }
  }

  std::size_t n_;
  std::vector<PointSet> opens_;
  std::vector<PointSet> minimal_;
};

inline Topology validate_topology(std::size_t n, std::vector<PointSet> family) {
  return Topology::validate(n, std::move(family));
}

/// Union of every open set contained in `a`.
inline PointSet interior(const Topology& t, const PointSet& a) {
  t.check(a);
  PointSet out = t.empty_set();
  for (const auto& u : t.opens()) {
    if (u.subset_of(a)) out = out | u;
  }
  return out;
}

inline PointSet closure(const Topology& t, const PointSet& a) {
  t.check(a);
  return interior(t, a.complement()).complement();
}

/// int(cl(a)).
inline PointSet regularize(const Topology& t, const PointSet& a) { return interior(t, closure(t, a)); }

inline bool is_regular_open(const Topology& t, const PointSet& u) {
  return t.is_open(u) && regularize(t, u) == u;
}

inline bool is_dense(const Topology& t, const PointSet& y) { return closure(t, y).is_full(); }

inline const PointSet& minimal_neighborhood(const Topology& t, std::size_t x) { return t.minimal_neighborhood(x); }

/// A subspace re-indexed onto {0..|Y|-1}; sub point i is ambient point to_ambient[i].
struct Subspace {
  Topology topology;
  std::vector<std::size_t> to_ambient;
  std::size_t ambient_size = 0;

  /// a ∩ Y, written in subspace coordinates.
  PointSet restrict_set(const PointSet& a) const {
    PointSet out(to_ambient.size());
    for (std::size_t i = 0; i < to_ambient.size(); ++i) {
      if (a.contains(to_ambient[i])) out.insert(i);
    }
    return out;
  }

  PointSet lift(const PointSet& b) const {
    if (b.universe() != to_ambient.size()) {
      throw Error(Errc::IndexOutOfRange, "set " + b.to_string() + " is not over the subspace", {b.mask()});
    }
    PointSet out(ambient_size);
    for (std::size_t i : b.members()) out.insert(to_ambient[i]);
    return out;
  }

  PointSet ambient_subset() const { return lift(topology.full()); }
};

inline Subspace subspace(const Topology& t, const PointSet& y) {
  t.check(y);
  if (y.empty()) throw Error(Errc::EmptySubspace, "subspace of the empty set");
  const std::vector<std::size_t> points = y.members();
  std::vector<PointSet> family;
  family.reserve(t.opens().size());
  for (const auto& u : t.opens()) {
    PointSet trace(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (u.contains(points[i])) trace.insert(i);
    }
    family.push_back(trace);
  }
  return Subspace{Topology::validate(points.size(), std::move(family)), points, t.size()};
}

/// Image of `a` under the point map `f` into a ground set of size `target_size`.
inline PointSet image(const PointSet& a, const std::vector<std::size_t>& f, std::size_t target_size) {
  PointSet out(target_size);
  for (std::size_t x : a.members()) out.insert(f.at(x));
  return out;
}

namespace detail {

inline std::multiset<std::size_t> open_size_profile(const Topology& t) {
  std::multiset<std::size_t> out;
  for (const auto& u : t.opens()) out.insert(u.size());
  return out;
}

inline std::multiset<std::size_t> neighborhood_size_profile(const Topology& t) {
  std::multiset<std::size_t> out;
  for (std::size_t x = 0; x < t.size(); ++x) out.insert(t.minimal_neighborhood(x).size());
  return out;
}

}  // namespace detail

/// Decides whether two finite spaces are homeomorphic. Returns the point map
/// a -> b when one exists. Cheap invariants are compared first; the search
/// then extends partial bijections that preserve the specialization order
/// (y in N(x) iff f(y) in N(f(x))), which for finite spaces is equivalent to
/// carrying opens onto opens. The final map is checked against the open
/// families directly.
inline std::optional<std::vector<std::size_t>> is_homeomorphic(const Topology& a, const Topology& b) {
  const std::size_t n = a.size();
  if (n != b.size() || a.opens().size() != b.opens().size()) return std::nullopt;
  if (detail::open_size_profile(a) != detail::open_size_profile(b)) return std::nullopt;
  if (detail::neighborhood_size_profile(a) != detail::neighborhood_size_profile(b)) return std::nullopt;

  std::vector<std::size_t> f(n);
  std::vector<bool> used(n, false);
  auto consistent = [&](std::size_t k, std::size_t v) {
    if (a.minimal_neighborhood(k).size() != b.minimal_neighborhood(v).size()) return false;
    for (std::size_t j = 0; j < k; ++j) {
      if (a.minimal_neighborhood(k).contains(j) != b.minimal_neighborhood(v).contains(f[j])) return false;
      if (a.minimal_neighborhood(j).contains(k) != b.minimal_neighborhood(f[j]).contains(v)) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t k) -> bool {
    if (k == n) return true;
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || !consistent(k, v)) continue;
      used[v] = true;
      f[k] = v;
      if (self(self, k + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  for (const auto& u : a.opens()) {
    if (!b.is_open(image(u, f, n))) return std::nullopt;
  }
  return f;
}

/// Standard fixtures.
namespace spaces {

inline Topology discrete(std::size_t n) { return Topology::validate(n, all_subsets(n)); }

inline Topology indiscrete(std::size_t n) {
  return Topology::validate(n, std::vector<PointSet>{PointSet::empty(n), PointSet::full(n)});
}

/// Opens: {}, {0}, {0,1}.
inline Topology sierpinski() { return Topology::validate(2, std::vector<std::vector<std::size_t>>{{}, {0}, {0, 1}}); }

/// Opens: {}, {0}, {1}, {0,1}, {0,1,2}.
inline Topology x3() {
  return Topology::validate(3, std::vector<std::vector<std::size_t>>{{}, {0}, {1}, {0, 1}, {0, 1, 2}});
}

inline Topology point() { return discrete(1); }

}  // namespace spaces

}  // namespace regopen

#endif  // REGOPEN_TOPOLOGY_HPP
