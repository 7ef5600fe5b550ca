// Williamson transform pair and CDF recovery.
//
// For a step law nu and stability index alpha, the pair
//   G(t) = integral of (1 - x^alpha / t^alpha)+ nu(dx)
//   H(t) = integral of x^alpha over [0, t] nu(dx)
// determines nu through F(t) = G(t) + t^(-alpha) H(t), and the n-fold
// Kendall convolution has the closed form
//   F_n(t) = G^(n-1) (n t^(-alpha) H + G).
#pragma once

#include <functional>
#include <optional>

#include "kendall/catalog.hpp"

namespace kendall {

enum class TransformSource { analytic, numeric_from_cdf };

/// Snapshot of every transform quantity at one point t.  Gbar and Fbar are
/// carried separately so that tail evaluations at large t keep full
/// precision instead of cancelling against 1.
struct TransformEval {
  double G = 0.0;
  double Gbar = 1.0;
  double H = 0.0;
  double F = 0.0;
  double Fbar = 1.0;
};

/// G and H as callables for one fixed alpha.  H may be absent, in which
/// case CDF recovery falls back to numeric differentiation of G.
struct WilliamsonPair {
  double alpha = 1.0;
  std::function<double(double)> G;
  std::function<double(double)> H;
  TransformSource source = TransformSource::analytic;
};

/// G(t); closed form when the catalog provides one, quadrature otherwise.
double williamson_G(const StepDistribution& dist, double alpha, double t,
                    const QuadratureOptions& opts = {});

/// Truncated alpha-moment H(t); atoms at positions <= t enter exactly.
double moment_H(const StepDistribution& dist, double alpha, double t,
                const QuadratureOptions& opts = {});

/// Full moment m(alpha) = H(inf); +infinity when divergent.
double m_alpha(const StepDistribution& dist, double alpha);

/// All transform quantities at once (analytic where possible).
TransformEval eval_transform(const StepDistribution& dist, double alpha, double t,
                             const QuadratureOptions& opts = {});

WilliamsonPair make_williamson_pair(const StepDistribution& dist, double alpha,
                                    const QuadratureOptions& opts = {});

struct InversionResult {
  double cdf = 0.0;
  /// Set when H was unavailable and the numeric derivative of G hit its
  /// precision floor.
  bool precision_warning = false;
};

/// Recover F(t) from the pair: G + t^(-alpha) H when H is present, else
/// G + (t / alpha) G'(t) with a central difference.  Result clamped to [0,1].
InversionResult invert_williamson(const WilliamsonPair& pair, double t);

/// n-fold Kendall convolution CDF F_n(t); n >= 1.
double nfold_cdf(const StepDistribution& dist, double alpha, int n, double t,
                 const QuadratureOptions& opts = {});

/// Jump of F_n at t (nonzero only at atoms of the step law).
double nfold_jump(const StepDistribution& dist, double alpha, int n, double t);

}  // namespace kendall
