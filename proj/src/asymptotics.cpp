#include "kendall/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "kendall/errors.hpp"
#include "kendall/renewal.hpp"
#include "kendall/stats.hpp"
#include "kendall/williamson.hpp"

namespace kendall {

namespace {

double require_theta(const StepDistribution& dist, double alpha) {
  if (!dist.rv_index) {
    throw parameter_error("asymptotics: step law has no known regular-variation index");
  }
  const auto theta = dist.rv_index(alpha);
  if (!theta) {
    throw parameter_error("asymptotics: regular-variation index unavailable at this alpha");
  }
  if (!(*theta >= 0.0) || !(*theta < alpha)) {
    throw parameter_error("asymptotics: requires index theta in [0, alpha)");
  }
  return *theta;
}

void check_x(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw input_error("asymptotics: evaluation point must be positive and finite");
  }
}

void check_h(double h) {
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw input_error("asymptotics: window h must be positive and finite");
  }
}

bool is_pareto_with(const StepDistribution& dist, double beta) {
  return dist.name == "pareto" && dist.params.size() == 1 &&
         std::abs(dist.params[0] - beta) <= 1e-12 * std::max(1.0, std::abs(beta));
}

}  // namespace

AsymptoticsReport make_report(const std::string& quantity, double x, double finite_value,
                              double limit_value) {
  AsymptoticsReport r;
  r.quantity = quantity;
  r.x = x;
  r.finite_value = finite_value;
  r.limit_value = limit_value;
  if (limit_value == 0.0) {
    r.rel_error = std::abs(finite_value);
  } else {
    r.rel_error = std::abs(finite_value - limit_value) / std::abs(limit_value);
  }
  return r;
}

std::array<AsymptoticsReport, 3> tail_ratio_reports(const StepDistribution& dist,
                                                    double alpha, double x) {
  check_x(x);
  const double theta = require_theta(dist, alpha);
  const TransformEval e = eval_transform(dist, alpha, x);
  if (!(e.H > 0.0)) {
    throw divergence_error("tail_ratio_reports: H(x) = 0, pick a larger x");
  }
  const double xa = std::pow(x, alpha);
  const double w = (e.H + xa * e.Fbar) / alpha;
  return {
      make_report("tail_cdf_ratio", x, xa * e.Fbar / e.H, theta / (alpha - theta)),
      make_report("tail_w_ratio", x, alpha * w / e.H, alpha / (alpha - theta)),
      make_report("tail_transform_ratio", x, xa * e.Gbar / e.H, alpha / (alpha - theta)),
  };
}

AsymptoticsReport elementary_renewal_report(const StepDistribution& dist, double alpha,
                                            double x) {
  check_x(x);
  const double theta = require_theta(dist, alpha);
  const TransformEval e = eval_transform(dist, alpha, x);
  if (!(e.H > 0.0)) {
    throw divergence_error("elementary_renewal_report: H(x) = 0, pick a larger x");
  }
  const double finite = std::pow(x, -alpha) * renewal_R(dist, alpha, x) * e.H;
  const double limit = (alpha - theta) * (2.0 * alpha - theta) / (alpha * alpha);
  return make_report("elementary_renewal", x, finite, limit);
}

AsymptoticsReport blackwell_weighted_report(const StepDistribution& dist, double alpha,
                                            double t, double h) {
  check_x(t);
  check_h(h);
  const double theta = require_theta(dist, alpha);
  const TransformEval e = eval_transform(dist, alpha, t);
  const double increment = renewal_R(dist, alpha, t + h) - renewal_R(dist, alpha, t);
  const double finite = e.H * increment / std::pow(t, alpha - 1.0);
  const double ratio = (alpha - theta) / alpha;
  const double limit = ratio * ratio * (2.0 * alpha - theta) * h;
  return make_report("blackwell_weighted", t, finite, limit);
}

AsymptoticsReport blackwell_normalized_report(const StepDistribution& dist, double alpha,
                                              double t, double h) {
  check_x(t);
  check_h(h);
  const double m = m_alpha(dist, alpha);
  if (!std::isfinite(m) || !(m > 0.0)) {
    throw divergence_error("blackwell_normalized_report: requires finite alpha-moment");
  }
  const double finite = renewal_R(dist, alpha, t + h) / std::pow(t + h, alpha - 1.0) -
                        renewal_R(dist, alpha, t) / std::pow(t, alpha - 1.0);
  return make_report("blackwell_normalized", t, finite, 2.0 * h / m);
}

AsymptoticsReport blackwell_log_report(const StepDistribution& dist, double alpha, double t,
                                       double h) {
  check_x(t);
  check_h(h);
  if (!is_pareto_with(dist, alpha)) {
    throw parameter_error(
        "blackwell_log_report: defined for the pareto step law with beta = alpha");
  }
  const double increment = renewal_R(dist, alpha, t + h) - renewal_R(dist, alpha, t);
  const double finite = std::pow(t, 1.0 - alpha) * std::log(t) * increment;
  return make_report("blackwell_log", t, finite, 2.0 * h);
}

std::vector<AsymptoticsReport> asymptotics_suite(const StepDistribution& dist, double alpha,
                                                 double x, double h) {
  std::vector<AsymptoticsReport> out;
  bool have_theta = false;
  if (dist.rv_index) {
    if (const auto theta = dist.rv_index(alpha)) {
      have_theta = *theta >= 0.0 && *theta < alpha;
    }
  }
  if (have_theta) {
    const auto ratios = tail_ratio_reports(dist, alpha, x);
    out.insert(out.end(), ratios.begin(), ratios.end());
    out.push_back(elementary_renewal_report(dist, alpha, x));
    out.push_back(blackwell_weighted_report(dist, alpha, x, h));
  }
  if (dist.alpha_moment) {
    const double m = dist.alpha_moment(alpha);
    if (std::isfinite(m) && m > 0.0) {
      out.push_back(blackwell_normalized_report(dist, alpha, x, h));
    }
  }
  if (is_pareto_with(dist, alpha)) {
    out.push_back(blackwell_log_report(dist, alpha, x, h));
  }
  if (out.empty()) {
    throw parameter_error("asymptotics_suite: no report applies to this law");
  }
  return out;
}

double mixture_gamma_cdf(double w, double x) {
  if (!(w >= 0.0) || !(w <= 1.0)) {
    throw parameter_error("mixture_gamma_cdf: weight must lie in [0,1]");
  }
  if (!(x > 0.0)) return 0.0;
  const double tail1 = std::exp(-x);
  const double tail2 = (1.0 + x) * tail1;
  return w * (1.0 - tail1) + (1.0 - w) * (1.0 - tail2);
}

LimitLawResult limit_law_simulation(const WalkConfig& config, double t, long long n_sims,
                                    int n_threads) {
  if (n_sims < 2) throw input_error("limit_law_simulation: need at least 2 paths");
  check_x(t);
  const double theta = require_theta(config.step, config.alpha);
  const TransformEval e = eval_transform(config.step, config.alpha, t);
  if (!(e.Gbar > 0.0)) {
    throw divergence_error("limit_law_simulation: G(t) = 1");
  }
  LimitLawResult out;
  out.mixture_weight = theta / config.alpha;
  out.gbar = e.Gbar;
  out.n_sims = n_sims;
  std::vector<double> sample(static_cast<std::size_t>(n_sims), 0.0);
  parallel_paths(n_sims, n_threads, [&](long long i) {
    const long long n = count_renewals(config, t, static_cast<std::uint64_t>(i));
    sample[static_cast<std::size_t>(i)] = e.Gbar * static_cast<double>(n);
  });
  double sum = 0.0;
  for (double v : sample) sum += v;
  const double n = static_cast<double>(n_sims);
  out.mean = sum / n;
  double m2 = 0.0;
  for (double v : sample) {
    const double d = v - out.mean;
    m2 += d * d;
  }
  out.variance = m2 / (n - 1.0);
  const double w = out.mixture_weight;
  out.ks = ks_statistic(sample, [w](double x) { return mixture_gamma_cdf(w, x); });
  return out;
}

ScalingLimitResult scaling_limit_simulation(const WalkConfig& config, int n, long long n_sims,
                                            int n_threads) {
  if (n_sims < 2) throw input_error("scaling_limit_simulation: need at least 2 paths");
  const double alpha = config.alpha;
  if (config.step.name != "pareto" || config.step.params.size() != 1) {
    throw parameter_error("scaling_limit_simulation: defined for pareto step laws");
  }
  const double beta = config.step.params[0];
  if (!(beta <= alpha)) {
    throw parameter_error("scaling_limit_simulation: requires beta <= alpha");
  }
  const double theta = alpha - beta;
  ScalingLimitResult out;
  out.n = n;
  out.n_sims = n_sims;
  if (theta > 1e-12) {
    out.normalizer = std::pow(alpha * static_cast<double>(n) / theta, 1.0 / beta);
  } else {
    if (n < 2) {
      throw input_error("scaling_limit_simulation: need n >= 2 when beta = alpha");
    }
    out.normalizer =
        std::pow(static_cast<double>(n) * std::log(static_cast<double>(n)), 1.0 / alpha);
  }
  std::vector<double> sample(static_cast<std::size_t>(n_sims), 0.0);
  parallel_paths(n_sims, n_threads, [&](long long i) {
    const WalkPath path = sample_path(config, n, static_cast<std::uint64_t>(i));
    sample[static_cast<std::size_t>(i)] = path.values.back() / out.normalizer;
  });
  const double w = theta > 1e-12 ? theta / alpha : 0.0;
  const double decay = alpha - (theta > 1e-12 ? theta : 0.0);
  const auto target = [w, decay](double s) {
    if (!(s > 0.0)) return 0.0;
    return 1.0 - mixture_gamma_cdf(w, std::pow(s, -decay));
  };
  out.ks = ks_statistic(sample, target);
  return out;
}

double rv_index_estimate(const std::function<double(double)>& H_eval, double x, double l) {
  if (!(x > 0.0)) throw input_error("rv_index_estimate: x must be positive");
  if (!(l > 1.0)) throw input_error("rv_index_estimate: scale l must exceed 1");
  const double h1 = H_eval(x);
  const double h2 = H_eval(l * x);
  if (!(h1 > 0.0) || !(h2 > 0.0)) {
    throw divergence_error("rv_index_estimate: H must be positive at both points");
  }
  return std::log(h2 / h1) / std::log(l);
}

}  // namespace kendall
