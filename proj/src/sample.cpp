#include "sbkd/sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sbkd {

Sample::Sample(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("Sample: no observations");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    if (!(v > 0.0 && v < 1.0)) {
      std::ostringstream os;
      os << "Sample: observation " << i << " = " << v << " is outside (0, 1)";
      throw std::invalid_argument(os.str());
    }
  }
}

std::vector<double> Sample::sorted() const {
  std::vector<double> out(values_);
  std::sort(out.begin(), out.end());
  return out;
}

double Sample::mean() const {
  return std::accumulate(values_.begin(), values_.end(), 0.0) / static_cast<double>(values_.size());
}

double Sample::variance() const {
  if (values_.size() < 2) return 0.0;
  const double m = mean();
  double ss = 0.0;
  for (double v : values_) ss += (v - m) * (v - m);
  return ss / static_cast<double>(values_.size() - 1);
}

double empirical_quantile(std::span<const double> sorted, double p) {
  if (sorted.empty()) throw std::invalid_argument("empirical_quantile: empty sample");
  const std::size_t n = sorted.size();
  const double h = (static_cast<double>(n) - 1.0) * p;  // zero-based position
  if (h <= 0.0) return sorted.front();
  if (h >= static_cast<double>(n - 1)) return sorted.back();
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const double frac = h - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double empirical_quantile(const Sample& s, double p) {
  const auto sorted = s.sorted();
  return empirical_quantile(std::span<const double>(sorted), p);
}

}  // namespace sbkd
