// Catalog of step distributions for the Kendall random walk.
//
// A StepDistribution bundles the probability law of one walk increment:
// CDF / survival / quantile closures, the measure decomposition used by the
// quadrature routines, and optional closed forms for the Williamson pair
// (G, H), the alpha-moment, the renewal function and the regular-variation
// index of H.  Closed forms take the stability index alpha as an argument
// and return nothing when no formula applies for that alpha, in which case
// callers fall back to numerics.
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kendall/measure.hpp"

namespace kendall {

class StepDistribution {
 public:
  std::string name;
  std::vector<double> params;  ///< catalog parameters, e.g. beta for pareto

  Measure measure;

  std::function<double(double)> cdf;       ///< F(t), right continuous
  std::function<double(double)> sf;        ///< 1 - F(t) without cancellation
  std::function<double(double)> quantile;  ///< inverse CDF on (0,1)
  std::function<double(double)> density;   ///< empty for atomic laws

  /// Closed forms, each a function of (alpha, t); empty optional means
  /// "no formula for this alpha, use the numeric route".
  std::function<std::optional<double>(double, double)> analytic_G;
  std::function<std::optional<double>(double, double)> analytic_Gbar;
  std::function<std::optional<double>(double, double)> analytic_H;
  std::function<std::optional<double>(double, double)> closed_form_R;

  /// Moment of order alpha; +infinity when divergent.
  std::function<double(double)> alpha_moment;

  /// Regular-variation index of t -> H(t), when known.
  std::function<std::optional<double>(double)> rv_index;

  double cdf_left(double t) const;  ///< left limit F(t-)
  bool has_analytic_transform(double alpha) const;
};

/// Look up a catalog entry.  `alpha` parameterizes the laws that are tied to
/// the walk's stability index (pareto2alpha, lackmem, kendall_stable).
/// Known names: dirac1, uniform01, pareto2alpha, lackmem, kendall_stable,
/// pareto (beta), cauchy_onesided, student_like (beta).
StepDistribution catalog_lookup(const std::string& name, const std::vector<double>& params,
                                double alpha);

/// Deterministic inverse-CDF sampling: maps u in (0,1) to a step value.
double sample(const StepDistribution& dist, double u);

struct CatalogEntryInfo {
  std::string name;
  std::vector<std::string> param_names;
  std::string description;
};

/// Names and parameter schemas of every catalog entry.
std::vector<CatalogEntryInfo> catalog_entries();

struct LackMemoryCheck {
  double empirical = 0.0;  ///< simulated P{X > x (*) y | X > x}
  double target = 0.0;     ///< 1 - F(y), the memoryless prediction
};

/// Simulates the conditional exceedance probability that characterizes the
/// lack-of-memory property under the Kendall convolution.  Throws
/// divergence_error when F(x) = 1 (zero conditioning mass).
LackMemoryCheck lack_of_memory_check(const StepDistribution& dist, double alpha, double x,
                                     double y, long long n_sims, std::uint64_t seed);

/// Image of `dist` under scaling x -> a x (numeric closures only).
StepDistribution scaled(const StepDistribution& dist, double a);

/// Mixture p * first + (1-p) * second as a measure; has no quantile.
StepDistribution mixture(const StepDistribution& first, const StepDistribution& second,
                         double p);

}  // namespace kendall
