// Test-only reference computations. Each one reaches its answer by a route
// that does not go through the library function it is used to check.
#ifndef REGOPEN_TESTS_ORACLES_HPP
#define REGOPEN_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Mask = std::uint64_t;
using Family = std::uint64_t;

inline bool has(Family fam, Mask s) { return (fam >> s) & 1U; }

/// Family as a sorted list of masks.
inline std::vector<Mask> members(Family fam, std::size_t n) {
  std::vector<Mask> out;
  for (Mask s = 0; s < (Mask{1} << n); ++s)
    if (has(fam, s)) out.push_back(s);
  return out;
}

/// Naive filter over all 2^(2^n) families of subsets.
inline std::vector<Family> brute_force_topologies(std::size_t n) {
  const Mask subsets = Mask{1} << n;
  const Mask full = subsets - 1;
  std::vector<Family> out;
  const std::uint64_t families = std::uint64_t{1} << subsets;
  for (std::uint64_t fam = 0; fam < families; ++fam) {
    if (!has(fam, 0) || !has(fam, full)) continue;
    bool ok = true;
    for (Mask a = 0; a < subsets && ok; ++a) {
      if (!has(fam, a)) continue;
      for (Mask b = 0; b < subsets; ++b)
        if (has(fam, b) && (!has(fam, a | b) || !has(fam, a & b))) {
          ok = false;
          break;
        }
    }
    if (ok) out.push_back(fam);
  }
  return out;
}

/// Topologies as up-set families of preorders on n points.
inline std::set<Family> preorder_topologies(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> off;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) off.emplace_back(i, j);
  std::set<Family> out;
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << off.size()); ++r) {
    std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
    for (std::size_t k = 0; k < off.size(); ++k)
      if ((r >> k) & 1U) le[off[k].first][off[k].second] = true;
    bool transitive = true;
    for (std::size_t a = 0; a < n && transitive; ++a)
      for (std::size_t b = 0; b < n && transitive; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (le[a][b] && le[b][c] && !le[a][c]) {
            transitive = false;
            break;
          }
    if (!transitive) continue;
    Family fam = 0;
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
      bool up = true;
      for (std::size_t a = 0; a < n && up; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (((s >> a) & 1U) && le[a][b] && !((s >> b) & 1U)) {
            up = false;
            break;
          }
      if (up) fam |= Family{1} << s;
    }
    out.insert(fam);
  }
  return out;
}

/// x is interior to a iff some open u has x ∈ u ⊆ a.
inline Mask interior(const std::vector<Mask>& opens, std::size_t n, Mask a) {
  Mask out = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (Mask u : opens)
      if (((u >> x) & 1U) && (u & ~a) == 0) {
        out |= Mask{1} << x;
        break;
      }
  return out;
}

/// x is in the closure of a iff every open containing x meets a.
inline Mask closure(const std::vector<Mask>& opens, std::size_t n, Mask a) {
  Mask out = 0;
  for (std::size_t x = 0; x < n; ++x) {
    bool adherent = true;
    for (Mask u : opens)
      if (((u >> x) & 1U) && (u & a) == 0) adherent = false;
    if (adherent) out |= Mask{1} << x;
  }
  return out;
}

/// y meets every nonempty open set.
inline bool dense(const std::vector<Mask>& opens, Mask y) {
  return std::all_of(opens.begin(), opens.end(), [&](Mask u) { return u == 0 || (u & y) != 0; });
}

inline Mask relabel(Mask s, const std::vector<std::size_t>& perm) {
  Mask out = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    if ((s >> i) & 1U) out |= Mask{1} << perm[i];
  return out;
}

/// Tries every permutation.
inline bool homeomorphic(const std::vector<Mask>& a, const std::vector<Mask>& b, std::size_t n) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<Mask> img;
    for (Mask u : a) img.push_back(relabel(u, perm));
    std::sort(img.begin(), img.end());
    if (img == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracle

#endif  // REGOPEN_TESTS_ORACLES_HPP
