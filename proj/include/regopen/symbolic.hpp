#ifndef REGOPEN_SYMBOLIC_HPP
#define REGOPEN_SYMBOLIC_HPP

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <string>
#include <string_view>
#include <vector>

namespace regopen {

/// A finite or cofinite subset of an infinite ground set of labels. The
/// ground set itself is never materialized: Finite(F) is F, Cofinite(F) is
/// everything except F.
class SymbolicSet {
 public:
  enum class Kind { Finite, Cofinite };
  using Label = std::uint64_t;

  SymbolicSet() = default;
  SymbolicSet(Kind kind, std::vector<Label> support) : kind_(kind), support_(std::move(support)) {
    std::sort(support_.begin(), support_.end());
    support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
  }

  static SymbolicSet finite(std::vector<Label> s) { return {Kind::Finite, std::move(s)}; }
  static SymbolicSet cofinite(std::vector<Label> s) { return {Kind::Cofinite, std::move(s)}; }
  static SymbolicSet empty() { return finite({}); }
  static SymbolicSet full() { return cofinite({}); }

  Kind kind() const noexcept { return kind_; }
  const std::vector<Label>& support() const noexcept { return support_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_empty() const noexcept { return is_finite() && support_.empty(); }
  bool is_full() const noexcept { return !is_finite() && support_.empty(); }

  bool contains(Label x) const {
    return std::binary_search(support_.begin(), support_.end(), x) == is_finite();
  }

  SymbolicSet complement() const { return {is_finite() ? Kind::Cofinite : Kind::Finite, support_}; }

  friend SymbolicSet operator|(const SymbolicSet& a, const SymbolicSet& b) {
    if (a.is_finite() && b.is_finite()) return finite(set_union(a.support_, b.support_));
    if (a.is_finite()) return cofinite(set_difference(b.support_, a.support_));
    if (b.is_finite()) return cofinite(set_difference(a.support_, b.support_));
    return cofinite(set_intersection(a.support_, b.support_));
  }

  friend SymbolicSet operator&(const SymbolicSet& a, const SymbolicSet& b) {
    if (a.is_finite() && b.is_finite()) return finite(set_intersection(a.support_, b.support_));
    if (a.is_finite()) return finite(set_difference(a.support_, b.support_));
    if (b.is_finite()) return finite(set_difference(b.support_, a.support_));
    return cofinite(set_union(a.support_, b.support_));
  }

  /// Finite ⊆ Finite: F ⊆ G.  Finite ⊆ Cofinite(G): F ∩ G = ∅.
  /// Cofinite ⊆ Finite: never.  Cofinite(F) ⊆ Cofinite(G): G ⊆ F.
  bool subset_of(const SymbolicSet& other) const {
    if (is_finite() && other.is_finite()) return std::includes(other.support_.begin(), other.support_.end(),
                                                               support_.begin(), support_.end());
    if (is_finite()) return set_intersection(support_, other.support_).empty();
    if (other.is_finite()) return false;
    return std::includes(support_.begin(), support_.end(), other.support_.begin(), other.support_.end());
  }

  std::string to_string() const {
    std::string s = is_finite() ? "Finite({" : "Cofinite({";
    for (std::size_t i = 0; i < support_.size(); ++i) s += (i ? "," : "") + std::to_string(support_[i]);
    return s + "})";
  }

  friend bool operator==(const SymbolicSet&, const SymbolicSet&) = default;

 private:
  using Labels = std::vector<Label>;
  static Labels set_union(const Labels& a, const Labels& b) {
    Labels out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }
  static Labels set_intersection(const Labels& a, const Labels& b) {
    Labels out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }
  static Labels set_difference(const Labels& a, const Labels& b) {
    Labels out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
  }

  Kind kind_ = Kind::Finite;
  Labels support_;
};

/// The cocountable topology on an uncountable set is handled by the same
/// engine: a "finite support" then stands for a countable exceptional set.
enum class CoTopology { Cofinite, Cocountable };

constexpr std::string_view to_string(CoTopology t) {
  return t == CoTopology::Cofinite ? "cofinite" : "cocountable";
}

/// Opens are the empty set and the cofinite sets.
inline bool cof_is_open(const SymbolicSet& a) { return a.is_empty() || !a.is_finite(); }

/// No nonempty open set is finite, and cofinite sets are open.
inline SymbolicSet cof_interior(const SymbolicSet& a) { return a.is_finite() ? SymbolicSet::empty() : a; }

/// Finite sets are closed; the only closed set containing an infinite set is the whole space.
inline SymbolicSet cof_closure(const SymbolicSet& a) { return a.is_finite() ? a : SymbolicSet::full(); }

inline SymbolicSet cof_regularize(const SymbolicSet& a) { return cof_interior(cof_closure(a)); }

struct RegularizationStep {
  SymbolicSet open;
  SymbolicSet closure;
  SymbolicSet regularization;
  bool regular = false;
};

inline RegularizationStep cof_query(const SymbolicSet& open) {
  RegularizationStep s{open, cof_closure(open), cof_regularize(open), false};
  s.regular = cof_is_open(open) && s.regularization == open;
  return s;
}

struct CofiniteRegularOpens {
  CoTopology topology = CoTopology::Cofinite;
  std::vector<SymbolicSet> regular;
  std::vector<RegularizationStep> trace;
};

/// Regular opens of the cofinite topology. Every open is ∅ or Cofinite(F);
/// the trace runs the regularization on ∅, the full set and a few proper
/// cofinite opens, and the regular family collects the fixed points.
inline CofiniteRegularOpens cof_regular_opens(CoTopology label = CoTopology::Cofinite) {
  CofiniteRegularOpens out;
  out.topology = label;
  const std::vector<SymbolicSet> representatives = {
      SymbolicSet::empty(), SymbolicSet::full(), SymbolicSet::cofinite({0}),
      SymbolicSet::cofinite({1, 2}), SymbolicSet::cofinite({0, 1, 2, 3, 4})};
  for (const auto& u : representatives) {
    out.trace.push_back(cof_query(u));
    if (out.trace.back().regular) out.regular.push_back(u);
  }
  return out;
}

}  // namespace regopen

#endif  // REGOPEN_SYMBOLIC_HPP
