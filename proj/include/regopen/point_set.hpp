#ifndef REGOPEN_POINT_SET_HPP
#define REGOPEN_POINT_SET_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "regopen/error.hpp"

namespace regopen {

inline constexpr std::size_t kMaxPoints = 64;

/// A subset of the ground set {0, ..., n-1}, stored as a bit mask.
/// Equality is order-independent by construction; two sets over different
/// ground sizes never compare equal.
class PointSet {
 public:
  using Mask = std::uint64_t;

  PointSet() = default;

  explicit PointSet(std::size_t universe) : universe_(checked_universe(universe)) {}

  PointSet(std::size_t universe, std::initializer_list<std::size_t> members)
      : PointSet(universe, std::span<const std::size_t>(members.begin(), members.size())) {}

  PointSet(std::size_t universe, std::span<const std::size_t> members)
      : universe_(checked_universe(universe)) {
    for (std::size_t m : members) insert(m);
  }

  static PointSet from_mask(std::size_t universe, Mask bits) {
    PointSet s(universe);
    if ((bits & ~full_mask(universe)) != 0) {
      throw Error(Errc::IndexOutOfRange, "mask has bits outside the ground set", {bits});
    }
    s.bits_ = bits;
    return s;
  }

  static PointSet full(std::size_t universe) { return from_mask(universe, full_mask(universe)); }
  static PointSet empty(std::size_t universe) { return PointSet(universe); }

  static constexpr Mask full_mask(std::size_t universe) {
    return universe >= 64 ? ~Mask{0} : ((Mask{1} << universe) - 1);
  }

  std::size_t universe() const noexcept { return universe_; }
  Mask mask() const noexcept { return bits_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept { return bits_ == full_mask(universe_); }

  bool contains(std::size_t point) const {
    check_index(point);
    return (bits_ >> point) & 1U;
  }

  void insert(std::size_t point) {
    check_index(point);
    bits_ |= Mask{1} << point;
  }

  void erase(std::size_t point) {
    check_index(point);
    bits_ &= ~(Mask{1} << point);
  }

  bool subset_of(const PointSet& other) const {
    same_universe(other);
    return (bits_ & ~other.bits_) == 0;
  }

  bool intersects(const PointSet& other) const {
    same_universe(other);
    return (bits_ & other.bits_) != 0;
  }

  PointSet operator|(const PointSet& o) const { same_universe(o); return raw(universe_, bits_ | o.bits_); }
  PointSet operator&(const PointSet& o) const { same_universe(o); return raw(universe_, bits_ & o.bits_); }
  PointSet operator-(const PointSet& o) const { same_universe(o); return raw(universe_, bits_ & ~o.bits_); }
  PointSet complement() const { return raw(universe_, ~bits_ & full_mask(universe_)); }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (Mask b = bits_; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return out;
  }

  /// "{0,2}" style rendering.
  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (std::size_t m : members()) {
      if (!first) s += ',';
      s += std::to_string(m);
      first = false;
    }
    return s + "}";
  }

  friend bool operator==(const PointSet&, const PointSet&) = default;
  // Canonical order: by ground size, then by mask value.
  friend std::strong_ordering operator<=>(const PointSet& a, const PointSet& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  static PointSet raw(std::size_t universe, Mask bits) {
    PointSet s;
    s.universe_ = universe;
    s.bits_ = bits;
    return s;
  }

  static std::size_t checked_universe(std::size_t universe) {
    if (universe > kMaxPoints) {
      throw Error(Errc::IndexOutOfRange, "ground set larger than " + std::to_string(kMaxPoints));
    }
    return universe;
  }

  void check_index(std::size_t point) const {
    if (point >= universe_) {
      throw Error(Errc::IndexOutOfRange,
                  "point " + std::to_string(point) + " not in ground set of size " + std::to_string(universe_),
                  {}, {point});
    }
  }

  void same_universe(const PointSet& other) const {
    if (other.universe_ != universe_) {
      throw Error(Errc::IndexOutOfRange, "point sets over different ground sets");
    }
  }

  std::size_t universe_ = 0;
  Mask bits_ = 0;
};

/// Every subset of {0..n-1} in mask order.
inline std::vector<PointSet> all_subsets(std::size_t n) {
  if (n > 20) throw Error(Errc::SizeGuardExceeded, "refusing to list 2^n subsets for n > 20");
  std::vector<PointSet> out;
  out.reserve(std::size_t{1} << n);
  for (PointSet::Mask m = 0; m < (PointSet::Mask{1} << n); ++m) out.push_back(PointSet::from_mask(n, m));
  return out;
}

}  // namespace regopen

#endif  // REGOPEN_POINT_SET_HPP
