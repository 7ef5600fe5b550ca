#include "kendall/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "kendall/errors.hpp"

namespace kendall {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw parameter_error("kernel: alpha must be positive and finite");
  }
}

}  // namespace

ConvolutionKernel ConvolutionKernel::stable(double alpha) {
  check_alpha(alpha);
  return ConvolutionKernel(KernelFamily::stable, alpha, 0.0, 2.0, 1);
}

ConvolutionKernel ConvolutionKernel::kendall(double alpha) {
  check_alpha(alpha);
  return ConvolutionKernel(KernelFamily::kendall, alpha, 0.0, 2.0, 1);
}

ConvolutionKernel ConvolutionKernel::kucharczak_urbanik(double alpha, int n) {
  check_alpha(alpha);
  if (n < 1) throw parameter_error("kucharczak_urbanik: n must be at least 1");
  return ConvolutionKernel(KernelFamily::kucharczak_urbanik, alpha, 0.0, 2.0, n);
}

ConvolutionKernel ConvolutionKernel::kendall_type(double c, double p) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw parameter_error("kendall_type: c must be positive");
  }
  if (!(p >= 2.0) || !std::isfinite(p)) {
    throw parameter_error("kendall_type: p must be at least 2");
  }
  // Admissibility scan on [0,1]: values must stay in [0,1] and never
  // increase.  Equivalent to c (p - 1) <= 1, checked on a dense grid.
  const int grid = 4000;
  double prev = 1.0;
  for (int i = 1; i <= grid; ++i) {
    const double t = static_cast<double>(i) / grid;
    const double v = 1.0 - (c + 1.0) * t + c * std::pow(t, p);
    if (v < -1e-12 || v > 1.0 + 1e-12 || v > prev + 1e-12) {
      throw parameter_error(
          "kendall_type: not a valid kernel on [0,1] (requires c*(p-1) <= 1)");
    }
    prev = v;
  }
  return ConvolutionKernel(KernelFamily::kendall_type, 1.0, c, p, 1);
}

double ConvolutionKernel::omega(double t) const {
  if (!(t >= 0.0)) throw input_error("kernel omega: t must be nonnegative");
  switch (family_) {
    case KernelFamily::stable:
      return std::exp(-std::pow(t, alpha_));
    case KernelFamily::kendall: {
      const double v = 1.0 - std::pow(t, alpha_);
      return v > 0.0 ? v : 0.0;
    }
    case KernelFamily::kucharczak_urbanik: {
      const double v = 1.0 - std::pow(t, alpha_);
      return v > 0.0 ? std::pow(v, n_) : 0.0;
    }
    case KernelFamily::kendall_type: {
      if (t >= 1.0) return 0.0;
      const double v = 1.0 - (c_ + 1.0) * t + c_ * std::pow(t, p_);
      return std::clamp(v, 0.0, 1.0);
    }
  }
  return 0.0;
}

std::string ConvolutionKernel::name() const {
  std::ostringstream os;
  switch (family_) {
    case KernelFamily::stable:
      os << "stable(alpha=" << alpha_ << ")";
      break;
    case KernelFamily::kendall:
      os << "kendall(alpha=" << alpha_ << ")";
      break;
    case KernelFamily::kucharczak_urbanik:
      os << "kucharczak_urbanik(alpha=" << alpha_ << ", n=" << n_ << ")";
      break;
    case KernelFamily::kendall_type:
      os << "kendall_type(c=" << c_ << ", p=" << p_ << ")";
      break;
  }
  return os.str();
}

double ConvolutionKernel::support_cutoff() const {
  return family_ == KernelFamily::stable ? kInf : 1.0;
}

double char_fn(const StepDistribution& dist, const ConvolutionKernel& kernel,
               double t, const QuadratureOptions& opts) {
  if (!(t >= 0.0)) throw input_error("char_fn: t must be nonnegative");
  const Measure& m = dist.measure;
  double total = 0.0;
  for (const Atom& a : m.atoms) total += a.mass * kernel.omega(t * a.position);
  if (m.has_density()) {
    double hi = m.density_hi;
    if (t > 0.0) hi = std::min(hi, kernel.support_cutoff() / t);
    if (m.density_lo < hi) {
      total += integrate(
          [&](double x) { return m.density(x) * kernel.omega(t * x); },
          m.density_lo, hi, m.breakpoints, opts);
    }
  }
  return total;
}

CharFnEval char_fn_eval(const StepDistribution& dist, const ConvolutionKernel& kernel,
                        double t, const QuadratureOptions& opts) {
  return CharFnEval{t, char_fn(dist, kernel, t, opts)};
}

double fredholm_phi(double phi_nu) {
  if (!(phi_nu >= 0.0) || phi_nu > 1.0) {
    throw input_error("fredholm_phi: transform value must lie in [0,1]");
  }
  if (phi_nu == 1.0) {
    throw divergence_error("fredholm_phi: pole at transform value 1");
  }
  return phi_nu / (1.0 - phi_nu);
}

double kendall_pair_cdf(double x, double y, double alpha, double t) {
  check_alpha(alpha);
  if (!(t > 0.0)) throw input_error("kendall_pair_cdf: t must be positive");
  if (!(x >= 0.0) || !(y >= 0.0)) {
    throw input_error("kendall_pair_cdf: coordinates must be nonnegative");
  }
  if (x >= t || y >= t) return 0.0;
  if (x == 0.0 || y == 0.0) return 1.0;
  return 1.0 - std::pow(x * y / (t * t), alpha);
}

namespace {

// Mass and alpha-moment of a measure restricted to [0, t).
struct Restriction {
  double mass = 0.0;
  double moment = 0.0;
};

Restriction restrict_to(const Measure& m, double alpha, double t,
                        const QuadratureOptions& opts) {
  Restriction r;
  for (const Atom& a : m.atoms) {
    if (a.position < t) {
      r.mass += a.mass;
      r.moment += a.mass * std::pow(a.position, alpha);
    }
  }
  if (m.has_density()) {
    const double hi = std::min(t, m.density_hi);
    if (m.density_lo < hi) {
      r.mass += integrate(m.density, m.density_lo, hi, m.breakpoints, opts);
      r.moment += integrate(
          [&](double x) { return m.density(x) * std::pow(x, alpha); },
          m.density_lo, hi, m.breakpoints, opts);
    }
  }
  return r;
}

}  // namespace

double kendall_convolution_value(const Measure& a, const Measure& b, double alpha,
                                 double t, const QuadratureOptions& opts) {
  check_alpha(alpha);
  if (!(t > 0.0)) return 0.0;
  // Double Stieltjes integral of kendall_pair_cdf over [0,t) x [0,t).  The
  // inner integral in y is affine in x^alpha, so it reduces to the restricted
  // mass and alpha-moment of b; the outer integral runs against a.
  const Restriction rb = restrict_to(b, alpha, t, opts);
  const double scale = std::pow(t, -2.0 * alpha);
  double total = 0.0;
  for (const Atom& at : a.atoms) {
    if (at.position < t) {
      total += at.mass * (rb.mass - std::pow(at.position, alpha) * rb.moment * scale);
    }
  }
  if (a.has_density()) {
    const double hi = std::min(t, a.density_hi);
    if (a.density_lo < hi) {
      total += integrate(
          [&](double x) {
            return a.density(x) *
                   (rb.mass - std::pow(x, alpha) * rb.moment * scale);
          },
          a.density_lo, hi, a.breakpoints, opts);
    }
  }
  return total;
}

std::vector<double> kendall_convolve_cdf(const StepDistribution& a,
                                         const StepDistribution& b, double alpha,
                                         const std::vector<double>& grid,
                                         const QuadratureOptions& opts) {
  if (grid.empty()) throw input_error("kendall_convolve_cdf: empty grid");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw input_error("kendall_convolve_cdf: grid must be strictly increasing");
    }
  }
  std::vector<double> out;
  out.reserve(grid.size());
  for (double t : grid) {
    out.push_back(kendall_convolution_value(a.measure, b.measure, alpha, t, opts));
  }
  return out;
}

}  // namespace kendall
