// Renewal asymptotics: regular-variation ratios, elementary renewal and
// Blackwell limits, and the two distributional limit theorems for the
// counting process and the walk itself.
//
// Throughout, theta is the regular-variation index of H (0 <= theta < alpha)
// and W is defined by alpha W(x) = H(x) + x^alpha Fbar(x).  The limiting law
// Z of Gbar(t) N(t) is the gamma mixture
//   w Gamma(1,1) + (1-w) Gamma(2,1),  w = theta / alpha,
// with CDF w (1 - e^-x) + (1-w) (1 - (1+x) e^-x).
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kendall/catalog.hpp"
#include "kendall/walk.hpp"

namespace kendall {

struct AsymptoticsReport {
  std::string quantity;
  double x = 0.0;
  double finite_value = 0.0;
  double limit_value = 0.0;
  /// |finite - limit| / |limit|, or the absolute error when the limit is 0.
  double rel_error = 0.0;
};

AsymptoticsReport make_report(const std::string& quantity, double x, double finite_value,
                              double limit_value);

/// The three tail ratios with limits theta/(alpha-theta), alpha/(alpha-theta)
/// and alpha/(alpha-theta):
///   (i) x^alpha Fbar / H, (ii) alpha W / H, (iii) x^alpha Gbar / H.
/// Requires a catalog law with known rv index theta < alpha.
std::array<AsymptoticsReport, 3> tail_ratio_reports(const StepDistribution& dist,
                                                    double alpha, double x);

/// x^(-alpha) R(x) H(x) against (alpha-theta)(2 alpha-theta) / alpha^2; for
/// theta = 0 this is the elementary renewal limit x^(-alpha) R -> 2 / m(alpha).
AsymptoticsReport elementary_renewal_report(const StepDistribution& dist, double alpha,
                                            double x);

/// H(t) (R(t+h) - R(t)) / t^(alpha-1) against c h with
/// c = ((alpha-theta)/alpha)^2 (2 alpha - theta).
AsymptoticsReport blackwell_weighted_report(const StepDistribution& dist, double alpha,
                                            double t, double h);

/// R(t+h)/(t+h)^(alpha-1) - R(t)/t^(alpha-1) against 2h / m(alpha); requires
/// m(alpha) finite.
AsymptoticsReport blackwell_normalized_report(const StepDistribution& dist, double alpha,
                                              double t, double h);

/// Logarithmic variant for pareto(beta = alpha):
/// x^(1-alpha) log(x) (R(x+h) - R(x)) against 2h.
AsymptoticsReport blackwell_log_report(const StepDistribution& dist, double alpha, double t,
                                       double h);

/// Every report applicable to the law at (alpha, x, h).
std::vector<AsymptoticsReport> asymptotics_suite(const StepDistribution& dist, double alpha,
                                                 double x, double h);

/// CDF of the limiting gamma mixture with weight w on Gamma(1,1).
double mixture_gamma_cdf(double w, double x);

struct LimitLawResult {
  double mean = 0.0;      ///< sample mean of Gbar(t) N(t)
  double variance = 0.0;  ///< sample variance
  double ks = 0.0;        ///< KS distance to the mixture CDF
  double mixture_weight = 0.0;
  double gbar = 0.0;
  long long n_sims = 0;
};

/// Simulates Gbar(t) N(t) and compares it with the gamma-mixture limit.
LimitLawResult limit_law_simulation(const WalkConfig& config, double t, long long n_sims,
                                    int n_threads = 0);

struct ScalingLimitResult {
  double ks = 0.0;          ///< KS distance of S_n / U(n) to the limit law
  double normalizer = 0.0;  ///< U(n)
  int n = 0;
  long long n_sims = 0;
};

/// Simulates S_n / U(n) for a pareto(beta) step law with alpha >= beta and
/// compares it with Z^(-1/(alpha-theta)); U(n) = (alpha n / theta)^(1/beta)
/// when beta < alpha and (n log n)^(1/alpha) when beta = alpha.
ScalingLimitResult scaling_limit_simulation(const WalkConfig& config, int n, long long n_sims,
                                            int n_threads = 0);

/// Finite-x regular-variation index estimate log(H(lx)/H(x)) / log(l).
double rv_index_estimate(const std::function<double(double)>& H_eval, double x, double l);

}  // namespace kendall
