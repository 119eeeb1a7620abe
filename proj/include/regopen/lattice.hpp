#ifndef REGOPEN_LATTICE_HPP
#define REGOPEN_LATTICE_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regopen/error.hpp"
#include "regopen/point_set.hpp"

namespace regopen {

/// Outcome of an exhaustive law check. `witness` holds the lexicographically
/// first violating tuple of element indices when `holds` is false.
struct CheckResult {
  bool holds = true;
  std::vector<std::size_t> witness;
  std::string law;

  explicit operator bool() const noexcept { return holds; }

  static CheckResult pass() { return {}; }
  static CheckResult fail(std::string law, std::vector<std::size_t> witness) {
    return {false, std::move(witness), std::move(law)};
  }
};

/// A finite lattice given by its order relation. Meet and join tables are
/// derived from the order and every lattice law is checked at construction.
/// Elements may carry PointSet payloads (needed only by topological helpers).
class FiniteLattice {
 public:
  /// `leq` is a row-major count*count boolean matrix.
  FiniteLattice(std::size_t count, std::vector<char> leq, std::vector<PointSet> payloads = {})
      : n_(count), leq_(std::move(leq)), payloads_(std::move(payloads)) {
    if (n_ == 0) throw Error(Errc::InvalidLattice, "a lattice needs at least one element");
    if (leq_.size() != n_ * n_) throw Error(Errc::InvalidLattice, "order matrix must be count*count");
    if (!payloads_.empty() && payloads_.size() != n_) throw Error(Errc::InvalidLattice, "one payload per element");
    check_partial_order();
    build_tables();
    check_laws();
  }

  /// Builds the lattice from a list of order pairs (i <= j). Reflexive and
  /// transitive pairs are added; antisymmetry is checked.
  static FiniteLattice from_pairs(std::size_t count, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                  std::vector<PointSet> payloads = {}) {
    std::vector<char> m(count * count, 0);
    for (std::size_t i = 0; i < count; ++i) m[i * count + i] = 1;
    for (auto [i, j] : pairs) {
      if (i >= count || j >= count) throw Error(Errc::IndexOutOfRange, "order pair out of range", {}, {i, j});
      m[i * count + j] = 1;
    }
    for (std::size_t k = 0; k < count; ++k)
      for (std::size_t i = 0; i < count; ++i)
        if (m[i * count + k])
          for (std::size_t j = 0; j < count; ++j)
            if (m[k * count + j]) m[i * count + j] = 1;
    return FiniteLattice(count, std::move(m), std::move(payloads));
  }

  /// Lattice of subsets ordered by inclusion; payloads are the subsets.
  static FiniteLattice from_sets(const std::vector<PointSet>& sets) {
    const std::size_t k = sets.size();
    std::vector<char> m(k * k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) m[i * k + j] = sets[i].subset_of(sets[j]) ? 1 : 0;
    return FiniteLattice(k, std::move(m), sets);
  }

  std::size_t size() const noexcept { return n_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a * n_ + b] != 0; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * n_ + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * n_ + b]; }
  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t top() const noexcept { return top_; }
  bool has_payloads() const noexcept { return !payloads_.empty(); }
  const std::vector<PointSet>& payloads() const noexcept { return payloads_; }
  const PointSet& payload(std::size_t i) const {
    if (payloads_.empty()) throw Error(Errc::InvalidLattice, "lattice elements carry no payloads");
    return payloads_.at(i);
  }

  /// Covering pairs (a, b): a < b with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) {
        if (a == b || !leq(a, b)) continue;
        bool direct = true;
        for (std::size_t c = 0; c < n_ && direct; ++c)
          if (c != a && c != b && leq(a, c) && leq(c, b)) direct = false;
        if (direct) out.emplace_back(a, b);
      }
    return out;
  }

  /// Elements covering the bottom.
  std::vector<std::size_t> atoms() const {
    std::vector<std::size_t> out;
    for (auto [a, b] : covers())
      if (a == bottom_) out.push_back(b);
    return out;
  }

  std::optional<std::size_t> index_of(const PointSet& s) const {
    for (std::size_t i = 0; i < payloads_.size(); ++i)
      if (payloads_[i] == s) return i;
    return std::nullopt;
  }

 private:
  void check_partial_order() const {
    for (std::size_t a = 0; a < n_; ++a) {
      if (!leq(a, a)) throw Error(Errc::InvalidLattice, "order is not reflexive", {}, {a});
      for (std::size_t b = 0; b < n_; ++b) {
        if (a != b && leq(a, b) && leq(b, a)) throw Error(Errc::InvalidLattice, "order is not antisymmetric", {}, {a, b});
        for (std::size_t c = 0; c < n_; ++c)
          if (leq(a, b) && leq(b, c) && !leq(a, c))
            throw Error(Errc::InvalidLattice, "order is not transitive", {}, {a, b, c});
      }
    }
  }

  // inf/sup are found by scanning the order, not by trusting any payload algebra.
  void build_tables() {
    meet_.assign(n_ * n_, 0);
    join_.assign(n_ * n_, 0);
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) {
        std::optional<std::size_t> glb, lub;
        for (std::size_t c = 0; c < n_; ++c) {
          bool greatest = leq(c, a) && leq(c, b);
          bool least = leq(a, c) && leq(b, c);
          for (std::size_t d = 0; d < n_; ++d) {
            if (greatest && leq(d, a) && leq(d, b) && !leq(d, c)) greatest = false;
            if (least && leq(a, d) && leq(b, d) && !leq(c, d)) least = false;
          }
          if (greatest) glb = c;
          if (least) lub = c;
        }
        if (!glb) throw Error(Errc::InvalidLattice, "no greatest lower bound", {}, {a, b});
        if (!lub) throw Error(Errc::InvalidLattice, "no least upper bound", {}, {a, b});
        meet_[a * n_ + b] = *glb;
        join_[a * n_ + b] = *lub;
      }
    bottom_ = top_ = 0;
    for (std::size_t a = 1; a < n_; ++a) {
      bottom_ = meet(bottom_, a);
      top_ = join(top_, a);
    }
    for (std::size_t a = 0; a < n_; ++a)
      if (!leq(bottom_, a) || !leq(a, top_)) throw Error(Errc::InvalidLattice, "no bottom or top", {}, {a});
  }

  void check_laws() const {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) {
        if (meet(a, b) != meet(b, a) || join(a, b) != join(b, a))
          throw Error(Errc::InvalidLattice, "meet/join not commutative", {}, {a, b});
        if (meet(a, join(a, b)) != a || join(a, meet(a, b)) != a)
          throw Error(Errc::InvalidLattice, "absorption fails", {}, {a, b});
        for (std::size_t c = 0; c < n_; ++c)
          if (meet(meet(a, b), c) != meet(a, meet(b, c)) || join(join(a, b), c) != join(a, join(b, c)))
            throw Error(Errc::InvalidLattice, "meet/join not associative", {}, {a, b, c});
      }
  }

  std::size_t n_;
  std::vector<char> leq_;
  std::vector<PointSet> payloads_;
  std::vector<std::size_t> meet_, join_;
  std::size_t bottom_ = 0, top_ = 0;
};

namespace lattices {

/// 0 < 1 < ... < k-1.
inline FiniteLattice chain(std::size_t k) {
  std::vector<char> m(k * k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) m[i * k + j] = 1;
  return FiniteLattice(k, std::move(m));
}

/// The diamond M3: bottom 0, atoms 1,2,3, top 4.
inline FiniteLattice diamond() {
  return FiniteLattice::from_pairs(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

/// P({0..n-1}) with subsets as payloads, element i = mask i.
inline FiniteLattice powerset(std::size_t n) { return FiniteLattice::from_sets(all_subsets(n)); }

}  // namespace lattices

/// The extra datum of an R-lattice: an explicit binary relation f >> g on
/// the elements of a lattice.
class GGRelation {
 public:
  explicit GGRelation(std::size_t count) : n_(count), m_(count * count, 0) {}

  GGRelation(std::size_t count, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) : GGRelation(count) {
    for (auto [f, g] : pairs) insert(f, g);
  }

  /// f >> g iff f >= g.
  static GGRelation greater_equal(const FiniteLattice& l) {
    GGRelation r(l.size());
    for (std::size_t f = 0; f < l.size(); ++f)
      for (std::size_t g = 0; g < l.size(); ++g)
        if (l.leq(g, f)) r.insert(f, g);
    return r;
  }

  void insert(std::size_t f, std::size_t g) {
    if (f >= n_ || g >= n_) throw Error(Errc::IndexOutOfRange, "relation pair out of range", {}, {f, g});
    m_[f * n_ + g] = 1;
  }

  std::size_t size() const noexcept { return n_; }
  bool contains(std::size_t f, std::size_t g) const { return m_[f * n_ + g] != 0; }

  std::vector<std::pair<std::size_t, std::size_t>> pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t f = 0; f < n_; ++f)
      for (std::size_t g = 0; g < n_; ++g)
        if (contains(f, g)) out.emplace_back(f, g);
    return out;
  }

  friend bool operator==(const GGRelation&, const GGRelation&) = default;

 private:
  std::size_t n_;
  std::vector<char> m_;
};

/// a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c) for every triple.
inline CheckResult check_distributive(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)))
          return CheckResult::fail("distributivity", {a, b, c});
  return CheckResult::pass();
}

/// For every a != b some h meets exactly one of them in the bottom element.
inline CheckResult wallman_disjunction(const FiniteLattice& l) {
  const std::size_t n = l.size();
  const std::size_t zero = l.bottom();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      bool separated = false;
      for (std::size_t h = 0; h < n && !separated; ++h) {
        const bool a_zero = l.meet(a, h) == zero;
        const bool b_zero = l.meet(b, h) == zero;
        separated = a_zero != b_zero;
      }
      if (!separated) return CheckResult::fail("wallman disjunction", {a, b});
    }
  return CheckResult::pass();
}

struct AxiomResult {
  int number = 0;
  std::string name;
  CheckResult result;
};

/// Per-axiom outcome of the R-lattice check, plus the distributivity
/// precondition.
struct RLatticeReport {
  CheckResult distributive;
  std::array<AxiomResult, 6> axioms;

  bool all_pass() const {
    if (!distributive) return false;
    for (const auto& a : axioms)
      if (!a.result) return false;
    return true;
  }
};

/// Evaluates the six R-lattice axioms by exhaustive quantifier scans:
///   1. Wallman disjunction.
///   2. h >= f and f >> g imply h >> g.
///   3. f1 >> g1 and f2 >> g2 imply f1 ∧ f2 >> g1 ∧ g2.
///   4. f >> g implies f >> h >> g for some h.
///   5. every f != 0 has g1 and g2 != 0 with g1 >> f >> g2.
///   6. g1 >> f >> g2 implies h ∨ f = g1 and h ∧ g2 = 0 for some h.
inline RLatticeReport check_r_lattice(const FiniteLattice& l, const GGRelation& gg) {
  if (gg.size() != l.size()) throw Error(Errc::SizeMismatch, "relation and lattice differ in size");
  const std::size_t n = l.size();
  const std::size_t zero = l.bottom();
  RLatticeReport rep;
  rep.distributive = check_distributive(l);

  rep.axioms[0] = {1, "wallman disjunction", wallman_disjunction(l)};

  rep.axioms[1] = {2, "upward monotonicity", CheckResult::pass()};
  for (std::size_t h = 0; h < n && rep.axioms[1].result; ++h)
    for (std::size_t f = 0; f < n && rep.axioms[1].result; ++f)
      for (std::size_t g = 0; g < n; ++g)
        if (l.leq(f, h) && gg.contains(f, g) && !gg.contains(h, g)) {
          rep.axioms[1].result = CheckResult::fail("upward monotonicity", {h, f, g});
          break;
        }

  const auto pairs = gg.pairs();
  rep.axioms[2] = {3, "meet compatibility", CheckResult::pass()};
  for (std::size_t i = 0; i < pairs.size() && rep.axioms[2].result; ++i)
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      auto [f1, g1] = pairs[i];
      auto [f2, g2] = pairs[j];
      if (!gg.contains(l.meet(f1, f2), l.meet(g1, g2))) {
        rep.axioms[2].result = CheckResult::fail("meet compatibility", {f1, g1, f2, g2});
        break;
      }
    }

  rep.axioms[3] = {4, "interpolation", CheckResult::pass()};
  for (auto [f, g] : pairs) {
    bool found = false;
    for (std::size_t h = 0; h < n && !found; ++h) found = gg.contains(f, h) && gg.contains(h, g);
    if (!found) {
      rep.axioms[3].result = CheckResult::fail("interpolation", {f, g});
      break;
    }
  }

  rep.axioms[4] = {5, "existence", CheckResult::pass()};
  for (std::size_t f = 0; f < n; ++f) {
    if (f == zero) continue;
    bool above = false, below = false;
    for (std::size_t g = 0; g < n; ++g) {
      above = above || gg.contains(g, f);
      below = below || (g != zero && gg.contains(f, g));
    }
    if (!above || !below) {
      rep.axioms[4].result = CheckResult::fail("existence", {f});
      break;
    }
  }

  rep.axioms[5] = {6, "relative complement", CheckResult::pass()};
  for (std::size_t g1 = 0; g1 < n && rep.axioms[5].result; ++g1)
    for (std::size_t f = 0; f < n && rep.axioms[5].result; ++f) {
      if (!gg.contains(g1, f)) continue;
      for (std::size_t g2 = 0; g2 < n; ++g2) {
        if (!gg.contains(f, g2)) continue;
        bool found = false;
        for (std::size_t h = 0; h < n && !found; ++h) found = l.join(h, f) == g1 && l.meet(h, g2) == zero;
        if (!found) {
          rep.axioms[5].result = CheckResult::fail("relative complement", {g1, f, g2});
          break;
        }
      }
    }
  return rep;
}

/// True iff `phi` is a bijection with a <= b  <=>  phi(a) <= phi(b).
inline bool is_order_isomorphism(const FiniteLattice& a, const FiniteLattice& b, const std::vector<std::size_t>& phi) {
  if (a.size() != b.size() || phi.size() != a.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (std::size_t v : phi) {
    if (v >= b.size() || hit[v]) return false;
    hit[v] = true;
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a.leq(i, j) != b.leq(phi[i], phi[j])) return false;
  return true;
}

/// All order isomorphisms a -> b in lexicographic order of the image tuple.
/// `limit` stops the search early (0 = no limit).
inline std::vector<std::vector<std::size_t>> find_order_isomorphisms(const FiniteLattice& a, const FiniteLattice& b,
                                                                     std::size_t limit = 0) {
  std::vector<std::vector<std::size_t>> out;
  const std::size_t n = a.size();
  if (n != b.size()) return out;
  auto count_below = [](const FiniteLattice& l, std::size_t x) {
    std::size_t c = 0;
    for (std::size_t y = 0; y < l.size(); ++y) c += l.leq(y, x) ? 1 : 0;
    return c;
  };
  std::vector<std::size_t> phi(n);
  std::vector<bool> used(n, false);
  auto search = [&](auto&& self, std::size_t k) -> void {
    if (limit != 0 && out.size() >= limit) return;
    if (k == n) {
      out.push_back(phi);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used[v] || count_below(a, k) != count_below(b, v)) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j)
        ok = a.leq(j, k) == b.leq(phi[j], v) && a.leq(k, j) == b.leq(v, phi[j]);
      if (!ok) continue;
      used[v] = true;
      phi[k] = v;
      self(self, k + 1);
      used[v] = false;
    }
  };
  search(search, 0);
  return out;
}

inline std::vector<std::size_t> invert_bijection(const std::vector<std::size_t>& phi) {
  std::vector<std::size_t> inv(phi.size());
  for (std::size_t i = 0; i < phi.size(); ++i) inv.at(phi[i]) = i;
  return inv;
}

}  // namespace regopen

#endif  // REGOPEN_LATTICE_HPP
