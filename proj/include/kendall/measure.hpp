// Measures on [0, inf) decomposed into atoms plus an absolutely continuous
// part.  Lebesgue-Stieltjes integrals against such a measure sum the atoms
// exactly and integrate the density numerically, so point masses never pass
// through the quadrature engine.
#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "kendall/quadrature.hpp"

namespace kendall {

struct Atom {
  double position = 0.0;
  double mass = 0.0;
};

/// Nonnegative measure on [0, inf).  Either part may be empty.  The measure
/// need not be a probability measure (the renewal measure is unbounded).
struct Measure {
  std::vector<Atom> atoms;  ///< sorted by position

  /// Density of the absolutely continuous part on [density_lo, density_hi];
  /// empty when the measure is purely atomic.
  std::function<double(double)> density;
  double density_lo = 0.0;
  double density_hi = 0.0;  ///< may be +infinity

  /// Interior points where the density has kinks or jumps.
  std::vector<double> breakpoints;

  bool has_density() const { return static_cast<bool>(density); }
};

/// Integral of g over the part of `m` inside [lo, hi).  Atoms at `hi` are
/// excluded, atoms at `lo` included; this matches the open-interval kernel
/// conventions used by the pairwise convolution formulas.
double stieltjes_integral(const Measure& m, const std::function<double(double)>& g,
                          double lo, double hi, const QuadratureOptions& opts = {});

}  // namespace kendall
