#include "kendall/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "kendall/errors.hpp"
#include "kendall/rng.hpp"
#include "kendall/walk.hpp"

namespace kendall {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const std::string& msg) {
  if (!ok) throw parameter_error(msg);
}

/// Truncated alpha-moment of the pareto(beta) tail density beta x^(-beta-1)
/// on [1, x]: beta (x^(alpha-beta) - 1) / (alpha - beta), continuous through
/// alpha = beta where it becomes beta log x.
double pareto_tail_moment(double beta, double alpha, double x) {
  if (x <= 1.0) return 0.0;
  const double d = alpha - beta;
  const double lx = std::log(x);
  if (std::fabs(d * lx) < 1e-9) return beta * lx * (1.0 + 0.5 * d * lx);
  return beta * std::expm1(d * lx) / d;
}

/// Survival of the kendall_stable CDF (1 + w) e^-w in terms of w = x^-alpha,
/// evaluated without cancellation for small w.
double stable_law_sf_from_w(double w) {
  if (w < 1e-3) {
    // 1 - (1+w)e^-w = w^2/2 - w^3/3 + w^4/8 - w^5/30 ...
    return w * w * (0.5 + w * (-1.0 / 3.0 + w * (0.125 - w / 30.0)));
  }
  if (w > 700.0) return 1.0;
  return -std::expm1(-w) - w * std::exp(-w);
}

/// Solve (1 + w) e^-w = u for w > 0 (strictly decreasing in w).
double stable_law_w_from_u(double u) {
  double w;
  if (u > 0.999) {
    w = std::sqrt(2.0 * (1.0 - u));
  } else if (u < 0.05) {
    w = -std::log(u);
    w += std::log1p(w);
  } else {
    w = 1.0;
  }
  for (int i = 0; i < 100; ++i) {
    const double e = std::exp(-w);
    const double f = (1.0 + w) * e - u;
    const double df = -w * e;
    double step = f / df;
    double next = w - step;
    if (next <= 0.0) next = 0.5 * w;
    const bool done = std::fabs(next - w) <= 1e-16 * std::max(1.0, w);
    w = next;
    if (done) break;
  }
  return w;
}

StepDistribution make_dirac1() {
  StepDistribution d;
  d.name = "dirac1";
  d.measure.atoms = {{1.0, 1.0}};
  d.cdf = [](double t) { return t >= 1.0 ? 1.0 : 0.0; };
  d.sf = [](double t) { return t >= 1.0 ? 0.0 : 1.0; };
  d.quantile = [](double) { return 1.0; };
  d.analytic_G = [](double a, double t) -> std::optional<double> {
    return t >= 1.0 ? 1.0 - std::pow(t, -a) : 0.0;
  };
  d.analytic_Gbar = [](double a, double t) -> std::optional<double> {
    return t >= 1.0 ? std::pow(t, -a) : 1.0;
  };
  d.analytic_H = [](double, double t) -> std::optional<double> {
    return t >= 1.0 ? 1.0 : 0.0;
  };
  d.closed_form_R = [](double a, double t) -> std::optional<double> {
    return t >= 1.0 ? 2.0 * std::pow(t, a) - 1.0 : 0.0;
  };
  d.alpha_moment = [](double) { return 1.0; };
  d.rv_index = [](double) -> std::optional<double> { return 0.0; };
  return d;
}

StepDistribution make_uniform01() {
  StepDistribution d;
  d.name = "uniform01";
  d.measure.density = [](double) { return 1.0; };
  d.measure.density_lo = 0.0;
  d.measure.density_hi = 1.0;
  d.density = [](double x) { return (x >= 0.0 && x <= 1.0) ? 1.0 : 0.0; };
  d.cdf = [](double t) { return std::clamp(t, 0.0, 1.0); };
  d.sf = [](double t) { return 1.0 - std::clamp(t, 0.0, 1.0); };
  d.quantile = [](double u) { return u; };
  d.analytic_G = [](double a, double t) -> std::optional<double> {
    if (t <= 0.0) return 0.0;
    if (t <= 1.0) return a * t / (a + 1.0);
    return 1.0 - 1.0 / ((a + 1.0) * std::pow(t, a));
  };
  d.analytic_Gbar = [](double a, double t) -> std::optional<double> {
    if (t <= 0.0) return 1.0;
    if (t <= 1.0) return 1.0 - a * t / (a + 1.0);
    return 1.0 / ((a + 1.0) * std::pow(t, a));
  };
  d.analytic_H = [](double a, double t) -> std::optional<double> {
    if (t <= 0.0) return 0.0;
    const double tc = std::min(t, 1.0);
    return std::pow(tc, a + 1.0) / (a + 1.0);
  };
  d.closed_form_R = [](double a, double t) -> std::optional<double> {
    if (t <= 0.0) return 0.0;
    if (t <= 1.0) {
      const double den = a + 1.0 - a * t;
      return t * ((a + 1.0) * (a + 1.0) - a * a * t) / (den * den);
    }
    return 2.0 * (a + 1.0) * std::pow(t, a) - 1.0;
  };
  d.alpha_moment = [](double a) { return 1.0 / (a + 1.0); };
  d.rv_index = [](double) -> std::optional<double> { return 0.0; };
  return d;
}

StepDistribution make_pareto(double beta, const std::string& name) {
  StepDistribution d;
  d.name = name;
  d.params = {beta};
  d.measure.density = [beta](double x) { return beta * std::pow(x, -beta - 1.0); };
  d.measure.density_lo = 1.0;
  d.measure.density_hi = kInf;
  d.density = [beta](double x) { return x >= 1.0 ? beta * std::pow(x, -beta - 1.0) : 0.0; };
  d.cdf = [beta](double t) { return t >= 1.0 ? 1.0 - std::pow(t, -beta) : 0.0; };
  d.sf = [beta](double t) { return t >= 1.0 ? std::pow(t, -beta) : 1.0; };
  d.quantile = [beta](double u) { return std::pow(1.0 - u, -1.0 / beta); };
  d.analytic_H = [beta](double a, double t) -> std::optional<double> {
    return pareto_tail_moment(beta, a, t);
  };
  d.analytic_Gbar = [beta](double a, double t) -> std::optional<double> {
    if (t < 1.0) return 1.0;
    return std::pow(t, -beta) + std::pow(t, -a) * pareto_tail_moment(beta, a, t);
  };
  d.analytic_G = [d_gbar = d.analytic_Gbar](double a, double t) -> std::optional<double> {
    return 1.0 - *d_gbar(a, t);
  };
  d.alpha_moment = [beta](double a) { return a < beta ? beta / (beta - a) : kInf; };
  d.rv_index = [beta](double a) -> std::optional<double> { return std::max(a - beta, 0.0); };
  return d;
}

StepDistribution make_pareto2alpha(double alpha0) {
  StepDistribution d = make_pareto(2.0 * alpha0, "pareto2alpha");
  d.params = {};
  d.closed_form_R = [alpha0](double a, double t) -> std::optional<double> {
    if (std::fabs(a - alpha0) > 1e-12) return std::nullopt;
    if (t <= 1.0) return 0.0;
    const double ta = std::pow(t, a);
    const double den = 2.0 * ta - 1.0;
    return (ta - 1.0) * (1.0 - 3.0 * ta + 4.0 * ta * ta) / (den * den);
  };
  return d;
}

StepDistribution make_lackmem(double alpha0) {
  StepDistribution d;
  d.name = "lackmem";
  d.measure.density = [alpha0](double x) { return alpha0 * std::pow(x, alpha0 - 1.0); };
  d.measure.density_lo = 0.0;
  d.measure.density_hi = 1.0;
  d.density = [alpha0](double x) {
    return (x > 0.0 && x <= 1.0) ? alpha0 * std::pow(x, alpha0 - 1.0) : 0.0;
  };
  d.cdf = [alpha0](double t) { return t <= 0.0 ? 0.0 : std::min(std::pow(t, alpha0), 1.0); };
  d.sf = [alpha0](double t) { return t <= 0.0 ? 1.0 : 1.0 - std::min(std::pow(t, alpha0), 1.0); };
  d.quantile = [alpha0](double u) { return std::pow(u, 1.0 / alpha0); };
  d.analytic_H = [alpha0](double a, double t) -> std::optional<double> {
    if (t <= 0.0) return 0.0;
    const double tc = std::min(t, 1.0);
    return alpha0 * std::pow(tc, a + alpha0) / (a + alpha0);
  };
  d.analytic_G = [alpha0](double a, double t) -> std::optional<double> {
    if (t <= 0.0) return 0.0;
    if (t <= 1.0) return a * std::pow(t, alpha0) / (a + alpha0);
    return 1.0 - alpha0 * std::pow(t, -a) / (a + alpha0);
  };
  d.analytic_Gbar = [alpha0](double a, double t) -> std::optional<double> {
    if (t <= 0.0) return 1.0;
    if (t <= 1.0) return 1.0 - a * std::pow(t, alpha0) / (a + alpha0);
    return alpha0 * std::pow(t, -a) / (a + alpha0);
  };
  d.closed_form_R = [alpha0](double a, double t) -> std::optional<double> {
    if (std::fabs(a - alpha0) > 1e-12) return std::nullopt;
    if (t <= 0.0) return 0.0;
    const double ta = std::pow(t, a);
    if (t <= 1.0) {
      const double den = 2.0 - ta;
      return ta * (4.0 - ta) / (den * den);
    }
    return 4.0 * ta - 1.0;
  };
  d.alpha_moment = [alpha0](double a) { return alpha0 / (a + alpha0); };
  d.rv_index = [](double) -> std::optional<double> { return 0.0; };
  return d;
}

StepDistribution make_kendall_stable(double alpha0) {
  StepDistribution d;
  d.name = "kendall_stable";
  d.measure.density = [alpha0](double x) {
    if (x <= 0.0) return 0.0;
    const double w = std::pow(x, -alpha0);
    if (w > 700.0) return 0.0;
    return alpha0 / x * w * w * std::exp(-w);
  };
  d.measure.density_lo = 0.0;
  d.measure.density_hi = kInf;
  d.density = [m = d.measure.density](double x) { return x > 0.0 ? m(x) : 0.0; };
  d.cdf = [alpha0](double t) {
    if (t <= 0.0) return 0.0;
    const double w = std::pow(t, -alpha0);
    if (w > 700.0) return 0.0;
    return (1.0 + w) * std::exp(-w);
  };
  d.sf = [alpha0](double t) {
    if (t <= 0.0) return 1.0;
    return stable_law_sf_from_w(std::pow(t, -alpha0));
  };
  d.quantile = [alpha0](double u) {
    return std::pow(stable_law_w_from_u(u), -1.0 / alpha0);
  };
  d.analytic_G = [alpha0](double a, double t) -> std::optional<double> {
    if (std::fabs(a - alpha0) > 1e-12) return std::nullopt;
    if (t <= 0.0) return 0.0;
    return std::exp(-std::pow(t, -a));
  };
  d.analytic_Gbar = [alpha0](double a, double t) -> std::optional<double> {
    if (std::fabs(a - alpha0) > 1e-12) return std::nullopt;
    if (t <= 0.0) return 1.0;
    return -std::expm1(-std::pow(t, -a));
  };
  d.analytic_H = [g = d.analytic_G](double a, double t) { return g(a, t); };
  d.closed_form_R = [alpha0](double a, double t) -> std::optional<double> {
    if (std::fabs(a - alpha0) > 1e-12) return std::nullopt;
    if (t <= 0.0) return 0.0;
    const double s = std::pow(t, -a);
    const double em = std::expm1(s);  // e^s - 1
    return (em + s * (1.0 + em)) / (em * em);
  };
  d.alpha_moment = [alpha0](double a) {
    return a < 2.0 * alpha0 ? std::tgamma(2.0 - a / alpha0) : kInf;
  };
  d.rv_index = [alpha0](double a) -> std::optional<double> {
    return std::max(a - 2.0 * alpha0, 0.0);
  };
  return d;
}

StepDistribution make_cauchy_onesided() {
  constexpr double pi = std::numbers::pi;
  StepDistribution d;
  d.name = "cauchy_onesided";
  d.measure.density = [](double x) { return 2.0 / (pi * (1.0 + x * x)); };
  d.measure.density_lo = 0.0;
  d.measure.density_hi = kInf;
  d.measure.breakpoints = {1.0};
  d.density = [m = d.measure.density](double x) { return x >= 0.0 ? m(x) : 0.0; };
  d.cdf = [](double t) { return t <= 0.0 ? 0.0 : 2.0 * std::atan(t) / pi; };
  d.sf = [](double t) { return t <= 0.0 ? 1.0 : 2.0 * std::atan(1.0 / t) / pi; };
  d.quantile = [](double u) { return std::tan(pi * u / 2.0); };
  d.analytic_H = [](double a, double t) -> std::optional<double> {
    if (t <= 0.0) return 0.0;
    if (std::fabs(a - 1.0) < 1e-12) return std::log1p(t * t) / pi;
    if (std::fabs(a - 2.0) < 1e-12) return 2.0 * (t - std::atan(t)) / pi;
    return std::nullopt;
  };
  d.analytic_Gbar = [sf = d.sf, h = d.analytic_H](double a, double t) -> std::optional<double> {
    const auto hv = h(a, t);
    if (!hv) return std::nullopt;
    return sf(t) + std::pow(t, -a) * *hv;
  };
  d.analytic_G = [gb = d.analytic_Gbar](double a, double t) -> std::optional<double> {
    const auto v = gb(a, t);
    if (!v) return std::nullopt;
    return 1.0 - *v;
  };
  d.alpha_moment = [](double a) { return a < 1.0 ? 1.0 / std::cos(pi * a / 2.0) : kInf; };
  d.rv_index = [](double a) -> std::optional<double> { return std::max(a - 1.0, 0.0); };
  return d;
}

StepDistribution make_student_like(double beta) {
  // Power tail c x^(-beta-1) beyond 1 with a flat body on [0,1); the body
  // only has to integrate against the tail constant, any smooth choice works.
  const double c = beta / (beta + 1.0);
  StepDistribution d;
  d.name = "student_like";
  d.params = {beta};
  d.measure.density = [c, beta](double x) {
    return x < 1.0 ? c : c * std::pow(x, -beta - 1.0);
  };
  d.measure.density_lo = 0.0;
  d.measure.density_hi = kInf;
  d.measure.breakpoints = {1.0};
  d.density = [c, beta](double x) {
    if (x < 0.0) return 0.0;
    return x < 1.0 ? c : c * std::pow(x, -beta - 1.0);
  };
  d.cdf = [c, beta](double t) {
    if (t <= 0.0) return 0.0;
    if (t <= 1.0) return c * t;
    return 1.0 - std::pow(t, -beta) / (beta + 1.0);
  };
  d.sf = [c, beta](double t) {
    if (t <= 0.0) return 1.0;
    if (t <= 1.0) return 1.0 - c * t;
    return std::pow(t, -beta) / (beta + 1.0);
  };
  d.quantile = [c, beta](double u) {
    if (u < c) return u / c;
    return std::pow((beta + 1.0) * (1.0 - u), -1.0 / beta);
  };
  d.analytic_H = [c, beta](double a, double t) -> std::optional<double> {
    if (t <= 0.0) return 0.0;
    const double tc = std::min(t, 1.0);
    double h = c * std::pow(tc, a + 1.0) / (a + 1.0);
    if (t > 1.0) h += (c / beta) * pareto_tail_moment(beta, a, t);
    return h;
  };
  d.analytic_Gbar = [sf = d.sf, h = d.analytic_H](double a, double t) -> std::optional<double> {
    if (t <= 0.0) return 1.0;
    return sf(t) + std::pow(t, -a) * *h(a, t);
  };
  d.analytic_G = [gb = d.analytic_Gbar](double a, double t) -> std::optional<double> {
    return 1.0 - *gb(a, t);
  };
  d.alpha_moment = [c, beta](double a) {
    return a < beta ? c / (a + 1.0) + c / (beta - a) : kInf;
  };
  d.rv_index = [beta](double a) -> std::optional<double> { return std::max(a - beta, 0.0); };
  return d;
}

}  // namespace

double StepDistribution::cdf_left(double t) const {
  double f = cdf(t);
  for (const Atom& a : measure.atoms) {
    if (a.position == t) f -= a.mass;
  }
  return std::max(f, 0.0);
}

bool StepDistribution::has_analytic_transform(double alpha) const {
  if (!analytic_G || !analytic_H) return false;
  return analytic_G(alpha, 1.5).has_value() && analytic_H(alpha, 1.5).has_value();
}

StepDistribution catalog_lookup(const std::string& name, const std::vector<double>& params,
                                double alpha) {
  require(alpha > 0.0 && std::isfinite(alpha), "catalog_lookup: alpha must be positive");
  const auto one_param = [&](const char* what) {
    require(params.size() == 1, std::string(what) + " takes exactly one parameter");
    require(params[0] > 0.0 && std::isfinite(params[0]),
            std::string(what) + " parameter must be positive");
    return params[0];
  };
  if (name != "pareto" && name != "student_like") {
    require(params.empty(), "catalog entry '" + name + "' takes no parameters");
  }
  if (name == "dirac1") return make_dirac1();
  if (name == "uniform01") return make_uniform01();
  if (name == "pareto2alpha") return make_pareto2alpha(alpha);
  if (name == "lackmem") return make_lackmem(alpha);
  if (name == "kendall_stable") return make_kendall_stable(alpha);
  if (name == "pareto") return make_pareto(one_param("pareto"), "pareto");
  if (name == "cauchy_onesided") return make_cauchy_onesided();
  if (name == "student_like") return make_student_like(one_param("student_like"));
  throw parameter_error("unknown catalog distribution '" + name + "'");
}

double sample(const StepDistribution& dist, double u) {
  if (!(u > 0.0 && u < 1.0)) throw input_error("sample: u must lie in (0,1)");
  if (!dist.quantile) throw input_error("sample: '" + dist.name + "' has no quantile");
  return dist.quantile(u);
}

std::vector<CatalogEntryInfo> catalog_entries() {
  return {
      {"dirac1", {}, "unit point mass"},
      {"uniform01", {}, "uniform on (0,1)"},
      {"pareto2alpha", {}, "pareto tail index 2 alpha (the walk's multiplier law)"},
      {"lackmem", {}, "memoryless law for the Kendall convolution, F(t) = t^alpha on [0,1]"},
      {"kendall_stable", {}, "alpha-stable law of the Kendall algebra"},
      {"pareto", {"beta"}, "pareto tail index beta on [1, inf)"},
      {"cauchy_onesided", {}, "half-Cauchy, power tail with beta = 1"},
      {"student_like", {"beta"}, "flat body with pure power tail of index beta"},
  };
}

LackMemoryCheck lack_of_memory_check(const StepDistribution& dist, double alpha, double x,
                                     double y, long long n_sims, std::uint64_t seed) {
  require(alpha > 0.0, "lack_of_memory_check: alpha must be positive");
  if (x < 0.0 || y < 0.0) throw input_error("lack_of_memory_check: x, y must be nonnegative");
  if (n_sims <= 0) throw input_error("lack_of_memory_check: n_sims must be positive");
  if (dist.sf(x) <= 0.0) {
    throw divergence_error("lack_of_memory_check: zero conditioning mass at x");
  }
  PathRng rng(seed, 0);
  long long hits = 0;
  long long cond = 0;
  for (long long i = 0; i < n_sims; ++i) {
    const double v = sample_pair_convolution(x, y, alpha, rng);
    const double draw = sample(dist, rng.uniform());
    if (draw > x) ++cond;
    if (draw > v) ++hits;
  }
  if (cond == 0) throw divergence_error("lack_of_memory_check: no draws above x");
  LackMemoryCheck out;
  out.empirical = static_cast<double>(hits) / static_cast<double>(cond);
  out.target = dist.sf(y);
  return out;
}

StepDistribution scaled(const StepDistribution& dist, double a) {
  require(a > 0.0 && std::isfinite(a), "scaled: factor must be positive");
  StepDistribution d;
  d.name = dist.name + "_scaled";
  d.params = dist.params;
  for (const Atom& at : dist.measure.atoms) d.measure.atoms.push_back({at.position * a, at.mass});
  if (dist.measure.has_density()) {
    d.measure.density = [f = dist.measure.density, a](double x) { return f(x / a) / a; };
    d.measure.density_lo = dist.measure.density_lo * a;
    d.measure.density_hi = dist.measure.density_hi * a;
    for (double b : dist.measure.breakpoints) d.measure.breakpoints.push_back(b * a);
  }
  d.cdf = [f = dist.cdf, a](double t) { return f(t / a); };
  d.sf = [f = dist.sf, a](double t) { return f(t / a); };
  if (dist.quantile) d.quantile = [q = dist.quantile, a](double u) { return a * q(u); };
  if (dist.density) d.density = [f = dist.density, a](double x) { return f(x / a) / a; };
  if (dist.analytic_G) {
    d.analytic_G = [g = dist.analytic_G, a](double al, double t) { return g(al, t / a); };
  }
  if (dist.analytic_Gbar) {
    d.analytic_Gbar = [g = dist.analytic_Gbar, a](double al, double t) { return g(al, t / a); };
  }
  if (dist.analytic_H) {
    d.analytic_H = [h = dist.analytic_H, a](double al, double t) -> std::optional<double> {
      const auto v = h(al, t / a);
      if (!v) return std::nullopt;
      return std::pow(a, al) * *v;
    };
  }
  if (dist.closed_form_R) {
    d.closed_form_R = [r = dist.closed_form_R, a](double al, double t) { return r(al, t / a); };
  }
  if (dist.alpha_moment) {
    d.alpha_moment = [m = dist.alpha_moment, a](double al) {
      return std::pow(a, al) * m(al);
    };
  }
  d.rv_index = dist.rv_index;
  return d;
}

StepDistribution mixture(const StepDistribution& first, const StepDistribution& second,
                         double p) {
  require(p >= 0.0 && p <= 1.0, "mixture: weight must lie in [0,1]");
  StepDistribution d;
  d.name = "mixture(" + first.name + "," + second.name + ")";
  for (const Atom& a : first.measure.atoms) d.measure.atoms.push_back({a.position, p * a.mass});
  for (const Atom& a : second.measure.atoms) {
    d.measure.atoms.push_back({a.position, (1.0 - p) * a.mass});
  }
  std::sort(d.measure.atoms.begin(), d.measure.atoms.end(),
            [](const Atom& a, const Atom& b) { return a.position < b.position; });
  const bool fd = first.measure.has_density();
  const bool sd = second.measure.has_density();
  if (fd || sd) {
    const Measure& fm = first.measure;
    const Measure& sm = second.measure;
    d.measure.density = [fm, sm, fd, sd, p](double x) {
      double v = 0.0;
      if (fd && x >= fm.density_lo && x <= fm.density_hi) v += p * fm.density(x);
      if (sd && x >= sm.density_lo && x <= sm.density_hi) v += (1.0 - p) * sm.density(x);
      return v;
    };
    d.measure.density_lo = fd ? fm.density_lo : sm.density_lo;
    d.measure.density_hi = sd ? sm.density_hi : fm.density_hi;
    if (fd && sd) {
      d.measure.density_lo = std::min(fm.density_lo, sm.density_lo);
      d.measure.density_hi = std::max(fm.density_hi, sm.density_hi);
    }
    for (const Measure* m : {&fm, &sm}) {
      for (double b : m->breakpoints) d.measure.breakpoints.push_back(b);
      d.measure.breakpoints.push_back(m->density_lo);
      if (std::isfinite(m->density_hi)) d.measure.breakpoints.push_back(m->density_hi);
    }
  }
  d.cdf = [f = first.cdf, s = second.cdf, p](double t) { return p * f(t) + (1.0 - p) * s(t); };
  d.sf = [f = first.sf, s = second.sf, p](double t) { return p * f(t) + (1.0 - p) * s(t); };
  if (first.analytic_G && second.analytic_G) {
    d.analytic_G = [f = first.analytic_G, s = second.analytic_G, p](
                       double al, double t) -> std::optional<double> {
      const auto a = f(al, t);
      const auto b = s(al, t);
      if (!a || !b) return std::nullopt;
      return p * *a + (1.0 - p) * *b;
    };
  }
  if (first.analytic_H && second.analytic_H) {
    d.analytic_H = [f = first.analytic_H, s = second.analytic_H, p](
                       double al, double t) -> std::optional<double> {
      const auto a = f(al, t);
      const auto b = s(al, t);
      if (!a || !b) return std::nullopt;
      return p * *a + (1.0 - p) * *b;
    };
  }
  if (first.alpha_moment && second.alpha_moment) {
    d.alpha_moment = [f = first.alpha_moment, s = second.alpha_moment, p](double al) {
      return p * f(al) + (1.0 - p) * s(al);
    };
  }
  return d;
}

}  // namespace kendall
