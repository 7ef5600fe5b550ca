// Generalized-convolution kernels and transform-domain operations.
//
// A kernel family is determined by the probability kernel Omega(t), the
// image of the unit point mass under the algebra's characteristic map.  The
// generalized characteristic function of a measure nu is then
// Phi_nu(t) = integral of Omega(t x) nu(dx), and for the Kendall family the
// renewal measure satisfies Phi_m = Phi_nu / (1 - Phi_nu).
#pragma once

#include <string>
#include <vector>

#include "kendall/catalog.hpp"
#include "kendall/measure.hpp"

namespace kendall {

enum class KernelFamily { stable, kendall, kucharczak_urbanik, kendall_type };

/// One admissible kernel.  Construct through the named factories, which
/// validate parameters.  `monotonic` records whether the induced pairwise
/// convolution is supported above max(x, y); it holds for every family
/// implemented here.
class ConvolutionKernel {
 public:
  /// Omega(t) = exp(-t^alpha).
  static ConvolutionKernel stable(double alpha);
  /// Omega(t) = (1 - t^alpha)+.
  static ConvolutionKernel kendall(double alpha);
  /// Omega(t) = (1 - t^alpha)+^n.
  static ConvolutionKernel kucharczak_urbanik(double alpha, int n);
  /// Omega(t) = 1 - (c+1) t + c t^p on [0,1], zero beyond; requires p >= 2
  /// and c small enough that Omega is nonincreasing (c (p-1) <= 1, verified
  /// on a dense grid).
  static ConvolutionKernel kendall_type(double c, double p);

  double omega(double t) const;

  KernelFamily family() const { return family_; }
  double alpha() const { return alpha_; }
  bool monotonic() const { return true; }
  std::string name() const;

  /// Argument above which Omega vanishes; +infinity for the stable family.
  double support_cutoff() const;

 private:
  ConvolutionKernel(KernelFamily family, double alpha, double c, double p, int n)
      : family_(family), alpha_(alpha), c_(c), p_(p), n_(n) {}

  KernelFamily family_;
  double alpha_ = 1.0;
  double c_ = 0.0;
  double p_ = 2.0;
  int n_ = 1;
};

struct CharFnEval {
  double t = 0.0;
  double value = 0.0;
};

/// Generalized characteristic function Phi_nu(t) of a step law under the
/// given kernel.  Atoms are summed exactly, the density is integrated with
/// breakpoint splitting at the kernel cut-off.
double char_fn(const StepDistribution& dist, const ConvolutionKernel& kernel, double t,
               const QuadratureOptions& opts = {});

CharFnEval char_fn_eval(const StepDistribution& dist, const ConvolutionKernel& kernel,
                        double t, const QuadratureOptions& opts = {});

/// Transform of the renewal measure: phi / (1 - phi).  Requires phi in
/// [0, 1); throws divergence_error at phi = 1.
double fredholm_phi(double phi_nu);

/// CDF of the Kendall convolution of two point masses:
/// h(x, y, t) = (1 - x^alpha y^alpha / t^(2 alpha)) for x, y < t, else 0.
double kendall_pair_cdf(double x, double y, double alpha, double t);

/// Kendall convolution of two step laws evaluated on a strictly increasing
/// grid, computed as the double Stieltjes integral of kendall_pair_cdf.
std::vector<double> kendall_convolve_cdf(const StepDistribution& a, const StepDistribution& b,
                                         double alpha, const std::vector<double>& grid,
                                         const QuadratureOptions& opts = {});

/// Same double integral for raw measures (used with the renewal measure).
double kendall_convolution_value(const Measure& a, const Measure& b, double alpha, double t,
                                 const QuadratureOptions& opts = {});

}  // namespace kendall
