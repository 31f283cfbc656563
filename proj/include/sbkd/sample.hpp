#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sbkd {

/// Observations on the open unit interval, kept in input order.
class Sample {
 public:
  /// Throws std::invalid_argument naming the first offending index if any
  /// value is outside (0, 1) or the sample is empty.
  explicit Sample(std::vector<double> values);

  std::span<const double> values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

  /// Ascending copy of the values.
  std::vector<double> sorted() const;

  double mean() const;
  /// Unbiased (n - 1) sample variance; 0 for n == 1.
  double variance() const;

 private:
  std::vector<double> values_;
};

/// Type-7 sample quantile: linear interpolation of the order statistics at
/// h = (n - 1) p + 1. `sorted` must be ascending and non-empty.
double empirical_quantile(std::span<const double> sorted, double p);

/// Convenience overload that sorts internally.
double empirical_quantile(const Sample& s, double p);

}  // namespace sbkd
