#include "kendall/renewal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "kendall/errors.hpp"
#include "kendall/kernels.hpp"

namespace kendall {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Pieces {
  double G = 0.0;
  double Gbar = 1.0;
  double D = 0.0;  // t^(-alpha) H
};

Pieces transform_pieces(const StepDistribution& dist, double alpha, double t,
                        const QuadratureOptions& opts) {
  if (!(t > 0.0)) throw input_error("renewal: t must be positive");
  const TransformEval e = eval_transform(dist, alpha, t, opts);
  Pieces p;
  p.G = e.G;
  p.Gbar = e.Gbar;
  p.D = e.H == 0.0 ? 0.0 : std::pow(t, -alpha) * e.H;
  if (!(p.Gbar > 0.0)) {
    throw divergence_error("renewal: G(t) = 1, renewal function diverges");
  }
  return p;
}

}  // namespace

double renewal_R(const StepDistribution& dist, double alpha, double t,
                 const QuadratureOptions& opts) {
  if (!(t > 0.0)) throw input_error("renewal: t must be positive");
  if (dist.closed_form_R) {
    if (const auto v = dist.closed_form_R(alpha, t)) return *v;
  }
  const Pieces p = transform_pieces(dist, alpha, t, opts);
  return p.G / p.Gbar + p.D / (p.Gbar * p.Gbar);
}

RenewalEval renewal_moments(const StepDistribution& dist, double alpha, double t,
                            const QuadratureOptions& opts) {
  const Pieces p = transform_pieces(dist, alpha, t, opts);
  RenewalEval out;
  out.t = t;
  const double gb2 = p.Gbar * p.Gbar;
  const double gb3 = gb2 * p.Gbar;
  out.R = p.G / p.Gbar + p.D / gb2;
  out.EN2 = (p.D * (1.0 + 3.0 * p.G) + p.G * (1.0 - p.G * p.G)) / gb3;
  out.VarN = p.D * (1.0 + p.G) / gb3 + p.G / gb2 - p.D * p.D / (gb2 * gb2);
  return out;
}

double counting_pmf(const StepDistribution& dist, double alpha, double t, int n,
                    const QuadratureOptions& opts) {
  if (n < 0) throw input_error("counting_pmf: n must be nonnegative");
  const Pieces p = transform_pieces(dist, alpha, t, opts);
  const double F = std::min(p.G + p.D, 1.0);
  if (n == 0) return 1.0 - F;
  const double Fbar = std::max(p.Gbar - p.D, 0.0);
  const double value =
      std::pow(p.G, n - 1) * (static_cast<double>(n) * p.D * p.Gbar + p.G * Fbar);
  return std::clamp(value, 0.0, 1.0);
}

double counting_pgf(const StepDistribution& dist, double alpha, double t, double z,
                    const QuadratureOptions& opts) {
  if (!std::isfinite(z)) throw input_error("counting_pgf: z must be finite");
  const Pieces p = transform_pieces(dist, alpha, t, opts);
  if (!(z * p.G < 1.0)) {
    throw divergence_error("counting_pgf: pole at z G(t) = 1");
  }
  const double F = std::min(p.G + p.D, 1.0);
  const double denom = 1.0 - z * p.G;
  return 1.0 + (z - 1.0) * (F - z * p.G * p.G) / (denom * denom);
}

std::vector<double> counting_pgf_coefficients(const StepDistribution& dist, double alpha,
                                              double t, int nmax,
                                              const QuadratureOptions& opts) {
  if (nmax < 0) throw input_error("counting_pgf_coefficients: nmax must be nonnegative");
  const Pieces p = transform_pieces(dist, alpha, t, opts);
  const double F = std::min(p.G + p.D, 1.0);
  const double G = p.G;
  // (z - 1)(F - z G^2) = -F + (F + G^2) z - G^2 z^2, and 1 / (1 - z G)^2
  // expands with coefficients (k + 1) G^k; the pgf coefficients follow from
  // the Cauchy product, with the constant term shifted by the leading 1.
  const double num0 = -F;
  const double num1 = F + G * G;
  const double num2 = -G * G;
  std::vector<double> out(static_cast<std::size_t>(nmax) + 1, 0.0);
  for (int n = 0; n <= nmax; ++n) {
    double s = 0.0;
    if (n >= 0) s += num0 * (n + 1) * std::pow(G, n);
    if (n >= 1) s += num1 * n * std::pow(G, n - 1);
    if (n >= 2) s += num2 * (n - 1) * std::pow(G, n - 2);
    out[static_cast<std::size_t>(n)] = (n == 0) ? 1.0 + s : s;
  }
  return out;
}

// The partial sums run over thousands of O(1) terms when G is close to one,
// so the power recurrence and the accumulator carry extended precision.  The
// limit amplifies perturbations of G by 1/Gbar^2, so G is rebuilt from Gbar,
// which is the well-conditioned quantity, rather than taken as a double.
double series_R(const StepDistribution& dist, double alpha, double t, double tol,
                const QuadratureOptions& opts) {
  if (!(tol > 0.0)) throw input_error("series_R: tol must be positive");
  const Pieces p = transform_pieces(dist, alpha, t, opts);
  const double F = std::min(p.G + p.D, 1.0);
  const long double g = 1.0L - static_cast<long double>(p.Gbar);
  const long double d = p.D;
  long double acc = 0.0L;
  const long long max_terms = 20'000'000;
  long double gpow = 1.0L;  // G^(n-1)
  for (long long n = 1; n <= max_terms; ++n) {
    acc += gpow * (static_cast<long double>(n) * d + g);
    // F_k <= k G^(k-1) F, so past n the terms are dominated by the envelope
    // e_k = k G^(k-1) F whose ratio is at most G (1 + 1/n).
    const double ratio = p.G * (1.0 + 1.0 / static_cast<double>(n));
    const double envelope =
        static_cast<double>(n + 1) * static_cast<double>(gpow) * p.G * F;
    if (ratio < 1.0) {
      const double tail = envelope / (1.0 - ratio);
      if (tail < tol) return static_cast<double>(acc);
    }
    gpow *= g;
    if (gpow == 0.0L) return static_cast<double>(acc);
  }
  throw divergence_error("series_R: series did not converge within term budget");
}

double series_EN2(const StepDistribution& dist, double alpha, double t, double tol,
                  const QuadratureOptions& opts) {
  if (!(tol > 0.0)) throw input_error("series_EN2: tol must be positive");
  const Pieces p = transform_pieces(dist, alpha, t, opts);
  const double F = std::min(p.G + p.D, 1.0);
  const long double g = 1.0L - static_cast<long double>(p.Gbar);
  const long double d = p.D;
  long double acc = 0.0L;
  const long long max_terms = 20'000'000;
  long double gpow = 1.0L;
  for (long long n = 1; n <= max_terms; ++n) {
    const long double fn = gpow * (static_cast<long double>(n) * d + g);
    acc += (2.0L * static_cast<long double>(n) - 1.0L) * fn;
    // (2k - 1) F_k <= 2 k^2 G^(k-1) F; past n the envelope ratio is at most
    // G (1 + 1/n)^2.
    const double rn = (1.0 + 1.0 / static_cast<double>(n));
    const double ratio = p.G * rn * rn;
    const double np1 = static_cast<double>(n + 1);
    const double envelope = 2.0 * np1 * np1 * static_cast<double>(gpow) * p.G * F;
    if (ratio < 1.0) {
      const double tail = envelope / (1.0 - ratio);
      if (tail < tol) return static_cast<double>(acc);
    }
    gpow *= g;
    if (gpow == 0.0L) return static_cast<double>(acc);
  }
  throw divergence_error("series_EN2: series did not converge within term budget");
}

double renewal_density(const StepDistribution& dist, double alpha, double t,
                       const QuadratureOptions& opts) {
  const Pieces p = transform_pieces(dist, alpha, t, opts);
  const double f = dist.density ? dist.density(t) : 0.0;
  const double gb2 = p.Gbar * p.Gbar;
  // 2 alpha H(t)^2 t^(-2 alpha - 1) written via D = t^(-alpha) H, which stays
  // bounded where the separate powers would under- or overflow.
  const double tail = p.D == 0.0 ? 0.0 : 2.0 * alpha * p.D * p.D / (t * gb2 * p.Gbar);
  return f / gb2 + tail;
}

Measure renewal_measure(const StepDistribution& dist, double alpha,
                        const QuadratureOptions& opts) {
  if (!(alpha > 0.0)) throw parameter_error("renewal_measure: alpha must be positive");
  Measure out;
  for (const Atom& a : dist.measure.atoms) {
    const TransformEval e = eval_transform(dist, alpha, a.position, opts);
    if (!(e.Gbar > 0.0)) {
      throw divergence_error("renewal_measure: G = 1 at an atom of the step law");
    }
    out.atoms.push_back({a.position, a.mass / (e.Gbar * e.Gbar)});
  }
  std::sort(out.atoms.begin(), out.atoms.end(),
            [](const Atom& x, const Atom& y) { return x.position < y.position; });
  double lo = kInf;
  if (dist.measure.has_density()) lo = dist.measure.density_lo;
  for (const Atom& a : out.atoms) lo = std::min(lo, a.position);
  if (std::isfinite(lo)) {
    StepDistribution step = dist;
    out.density = [step, alpha, opts](double x) {
      return renewal_density(step, alpha, x, opts);
    };
    out.density_lo = lo;
    out.density_hi = kInf;
  }
  out.breakpoints = dist.measure.breakpoints;
  for (const Atom& a : out.atoms) out.breakpoints.push_back(a.position);
  if (dist.measure.has_density()) {
    out.breakpoints.push_back(dist.measure.density_lo);
    if (std::isfinite(dist.measure.density_hi)) {
      out.breakpoints.push_back(dist.measure.density_hi);
    }
  }
  std::sort(out.breakpoints.begin(), out.breakpoints.end());
  out.breakpoints.erase(std::unique(out.breakpoints.begin(), out.breakpoints.end()),
                        out.breakpoints.end());
  return out;
}

FredholmResidual fredholm_residual(const StepDistribution& dist, double alpha,
                                   const std::vector<double>& grid,
                                   const QuadratureOptions& opts) {
  if (grid.empty()) throw input_error("fredholm_residual: empty grid");
  for (double t : grid) {
    if (!(t > 0.0)) throw input_error("fredholm_residual: grid points must be positive");
  }
  const Measure m = renewal_measure(dist, alpha, opts);
  const ConvolutionKernel kernel = ConvolutionKernel::kendall(alpha);
  FredholmResidual res;
  for (double t : grid) {
    const double tau = 1.0 / t;
    const double phi_nu = char_fn(dist, kernel, tau, opts);
    double phi_m = 0.0;
    for (const Atom& a : m.atoms) phi_m += a.mass * kernel.omega(tau * a.position);
    if (m.has_density()) {
      const double hi = std::min(m.density_hi, t);
      if (m.density_lo < hi) {
        phi_m += integrate(
            [&](double x) { return m.density(x) * kernel.omega(tau * x); },
            m.density_lo, hi, m.breakpoints, opts);
      }
    }
    res.transform = std::max(res.transform, std::abs(phi_m - fredholm_phi(phi_nu)));

    const double conv = kendall_convolution_value(dist.measure, m, alpha, t, opts);
    const double want = renewal_R(dist, alpha, t, opts);
    const double got = dist.cdf(t) + conv;
    res.measure = std::max(res.measure, std::abs(want - got));
  }
  return res;
}

}  // namespace kendall
