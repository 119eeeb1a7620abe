#ifndef REGOPEN_METRIC_HPP
#define REGOPEN_METRIC_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "regopen/error.hpp"

namespace regopen {

using Rational = boost::rational<std::int64_t>;

/// A metric on {0..n-1} with exact rational distances. The constructor
/// checks all metric axioms, including every triangle.
class FiniteMetric {
 public:
  FiniteMetric(std::size_t n, std::vector<Rational> dist) : n_(n), dist_(std::move(dist)) {
    if (dist_.size() != n_ * n_) throw Error(Errc::SizeMismatch, "distance matrix must be n*n");
    for (std::size_t i = 0; i < n_; ++i) {
      if (at(i, i) != Rational(0)) throw Error(Errc::InvalidMetric, "nonzero self-distance", {}, {i, i});
      for (std::size_t j = 0; j < n_; ++j) {
        if (at(i, j) != at(j, i)) throw Error(Errc::InvalidMetric, "asymmetric distance", {}, {i, j});
        if (i != j && at(i, j) <= Rational(0)) throw Error(Errc::InvalidMetric, "non-positive distance", {}, {i, j});
      }
    }
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k)
          if (at(i, k) > at(i, j) + at(j, k))
            throw Error(Errc::InvalidMetric, "triangle inequality fails", {}, {i, j, k});
  }

  /// The 0/1 metric.
  static FiniteMetric discrete(std::size_t n) {
    std::vector<Rational> d(n * n, Rational(1));
    for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 0;
    return FiniteMetric(n, std::move(d));
  }

  std::size_t size() const noexcept { return n_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return dist_.at(i * n_ + j); }

  friend bool operator==(const FiniteMetric&, const FiniteMetric&) = default;

 private:
  const Rational& at(std::size_t i, std::size_t j) const { return dist_[i * n_ + j]; }

  std::size_t n_;
  std::vector<Rational> dist_;
};

/// d(x, x') = max(dx(x, x'), dy(tau x, tau x')).
inline FiniteMetric combine_metric(const FiniteMetric& dx, const FiniteMetric& dy, const std::vector<std::size_t>& tau) {
  const std::size_t n = dx.size();
  if (dy.size() != n || tau.size() != n) throw Error(Errc::SizeMismatch, "metrics and bijection disagree on size");
  std::vector<bool> hit(n, false);
  for (std::size_t t : tau) {
    if (t >= n || hit[t]) throw Error(Errc::SizeMismatch, "tau is not a bijection");
    hit[t] = true;
  }
  std::vector<Rational> d(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i * n + j] = std::max(dx(i, j), dy(tau[i], tau[j]));
  return FiniteMetric(n, std::move(d));
}

}  // namespace regopen

#endif  // REGOPEN_METRIC_HPP
