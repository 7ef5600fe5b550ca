// Small statistics helpers: Kolmogorov-Smirnov distance against a reference
// CDF and grid construction.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "kendall/errors.hpp"

namespace kendall {

/// Two-sided KS statistic of a sample against a reference CDF.  `cdf_left`
/// supplies F(x-) when the reference law has atoms; by default F is assumed
/// continuous.  The sample is sorted in place.
inline double ks_statistic(std::vector<double>& sample, const std::function<double(double)>& cdf,
                           const std::function<double(double)>& cdf_left = {}) {
  if (sample.empty()) throw input_error("ks_statistic: empty sample");
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    const double hi = cdf(sample[i]);
    const double lo = cdf_left ? cdf_left(sample[i]) : hi;
    d = std::max(d, (static_cast<double>(i) + 1.0) / n - hi);
    d = std::max(d, lo - static_cast<double>(i) / n);
  }
  return d;
}

/// Asymptotic 1% critical value for the KS statistic.
inline double ks_critical_1pct(long long n) { return 1.628 / std::sqrt(static_cast<double>(n)); }

/// points values from lo to hi inclusive, linearly spaced.
std::vector<double> linear_grid(double lo, double hi, int points);

/// points values from lo to hi inclusive, log-spaced; requires lo > 0.
std::vector<double> geometric_grid(double lo, double hi, int points);

}  // namespace kendall
