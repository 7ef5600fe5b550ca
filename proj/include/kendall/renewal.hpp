// Closed-form renewal analysis for Kendall random walks.
//
// With G and H the Williamson pair of the step law and Gbar = 1 - G, the
// renewal function and counting-process moments are
//   R(t)    = G / Gbar + H / (t^alpha Gbar^2)
//   E N^2   = (t^(-alpha) H (1 + 3G) + G (1 - G^2)) / Gbar^3
//   Var N   = H (1 + G) / (t^alpha Gbar^3) + G / Gbar^2 - H^2 / (t^(2 alpha) Gbar^4)
// and the counting variable N(t) has the probability generating function
//   E z^N = 1 + (z - 1)(F - z G^2) / (1 - z G)^2.
#pragma once

#include <vector>

#include "kendall/catalog.hpp"
#include "kendall/williamson.hpp"

namespace kendall {

struct RenewalEval {
  double t = 0.0;
  double R = 0.0;
  double EN2 = 0.0;
  double VarN = 0.0;
};

/// Renewal function R(t) = E N(t).  Throws divergence_error when G(t) = 1.
double renewal_R(const StepDistribution& dist, double alpha, double t,
                 const QuadratureOptions& opts = {});

/// Mean, second moment and variance of N(t).
RenewalEval renewal_moments(const StepDistribution& dist, double alpha, double t,
                            const QuadratureOptions& opts = {});

/// P{N(t) = n}.
double counting_pmf(const StepDistribution& dist, double alpha, double t, int n,
                    const QuadratureOptions& opts = {});

/// E z^N(t); requires z G(t) < 1.
double counting_pgf(const StepDistribution& dist, double alpha, double t, double z,
                    const QuadratureOptions& opts = {});

/// Power-series coefficients of the generating function around z = 0,
/// orders 0..nmax; an algebraically independent route to the pmf.
std::vector<double> counting_pgf_coefficients(const StepDistribution& dist, double alpha,
                                              double t, int nmax,
                                              const QuadratureOptions& opts = {});

/// Renewal function as the convolution series sum of F_n with a geometric
/// tail bound; stops once the remainder is below tol.
double series_R(const StepDistribution& dist, double alpha, double t, double tol = 1e-13,
                const QuadratureOptions& opts = {});

/// Second moment through the series 2 sum(n F_n) - sum(F_n).
double series_EN2(const StepDistribution& dist, double alpha, double t, double tol = 1e-13,
                  const QuadratureOptions& opts = {});

/// Density of the renewal measure away from atoms:
/// r(t) = f(t) / Gbar^2 + 2 alpha H^2 / (t^(2 alpha + 1) Gbar^3).
double renewal_density(const StepDistribution& dist, double alpha, double t,
                       const QuadratureOptions& opts = {});

/// Renewal measure of the step law: atom masses nu({a}) / Gbar(a)^2 plus the
/// density above.  Used by the fixed-point residual checks.
Measure renewal_measure(const StepDistribution& dist, double alpha,
                        const QuadratureOptions& opts = {});

struct FredholmResidual {
  /// sup over the grid of |Phi_m(1/t) - Phi_nu(1/t) / (1 - Phi_nu(1/t))|.
  double transform = 0.0;
  /// sup over the grid of |R(t) - F(t) - (nu * m)(0, t)|.
  double measure = 0.0;
};

/// Verifies that the renewal measure solves its two fixed-point equations on
/// a measure-domain grid (transform arguments are the reciprocals 1/t).
FredholmResidual fredholm_residual(const StepDistribution& dist, double alpha,
                                   const std::vector<double>& grid,
                                   const QuadratureOptions& opts = {});

}  // namespace kendall
