// Double-exponential quadrature with explicit breakpoint handling.
//
// The integrands in this library are smooth except at a small set of known
// points: kernel cut-offs, support edges and atoms.  The integrator splits
// the domain at those points and runs tanh-sinh quadrature on each piece,
// which also absorbs endpoint power singularities such as x^(1/2), then
// checks the accumulated error estimate against an absolute tolerance.
#pragma once

#include <functional>
#include <vector>

namespace kendall {

struct QuadratureOptions {
  double abs_tol = 1e-10;  ///< absolute error target for one integral
};

/// Integrate f over [a, b].  b may be +infinity.  Interior breakpoints mark
/// kinks or discontinuities of f; points outside (a, b) are ignored.
/// Throws integration_error when the error estimate exceeds opts.abs_tol.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const std::vector<double>& breakpoints = {},
                 const QuadratureOptions& opts = {});

}  // namespace kendall
