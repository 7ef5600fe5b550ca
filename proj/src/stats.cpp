#include "kendall/stats.hpp"

#include <cmath>

namespace kendall {

std::vector<double> linear_grid(double lo, double hi, int points) {
  if (points < 2) throw input_error("linear_grid: need at least 2 points");
  if (!(hi > lo)) throw input_error("linear_grid: hi must exceed lo");
  std::vector<double> out(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    out[static_cast<std::size_t>(i)] =
        lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  out.back() = hi;
  return out;
}

std::vector<double> geometric_grid(double lo, double hi, int points) {
  if (points < 2) throw input_error("geometric_grid: need at least 2 points");
  if (!(lo > 0.0)) throw input_error("geometric_grid: lo must be positive");
  if (!(hi > lo)) throw input_error("geometric_grid: hi must exceed lo");
  std::vector<double> out(static_cast<std::size_t>(points));
  const double ratio = std::log(hi / lo) / static_cast<double>(points - 1);
  for (int i = 0; i < points; ++i) {
    out[static_cast<std::size_t>(i)] = lo * std::exp(ratio * static_cast<double>(i));
  }
  out.back() = hi;
  return out;
}

}  // namespace kendall
