#include "kendall/walk.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "kendall/errors.hpp"
#include "kendall/williamson.hpp"

namespace kendall {

namespace {

void check_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw parameter_error("walk: alpha must be positive and finite");
  }
}

}  // namespace

double walk_step(double prev, double next, double u, double theta, double alpha) {
  check_alpha(alpha);
  if (!(prev >= 0.0) || !(next >= 0.0)) {
    throw input_error("walk_step: states must be nonnegative");
  }
  if (!(u > 0.0) || !(u < 1.0)) throw input_error("walk_step: u must lie in (0,1)");
  if (!(theta >= 1.0)) throw input_error("walk_step: theta must be at least 1");
  const double big = std::max(prev, next);
  const double small = std::min(prev, next);
  if (big == 0.0) throw input_error("walk_step: degenerate zero state");
  const double rho = std::pow(small / big, alpha);
  return u <= rho ? big * theta : big;
}

double sample_theta(double alpha, PathRng& rng) {
  check_alpha(alpha);
  return std::pow(rng.uniform(), -1.0 / (2.0 * alpha));
}

double sample_pair_convolution(double x, double y, double alpha, PathRng& rng) {
  const double u = rng.uniform();
  const double theta = sample_theta(alpha, rng);
  return walk_step(x, y, u, theta, alpha);
}

WalkPath sample_path(const WalkConfig& config, int n, std::uint64_t path_index) {
  check_alpha(config.alpha);
  if (n < 1) throw input_error("sample_path: n must be at least 1");
  if (n > config.max_steps) throw input_error("sample_path: n exceeds max_steps");
  PathRng rng(config.seed, path_index);
  WalkPath path;
  path.values.reserve(static_cast<std::size_t>(n));
  double s = sample(config.step, rng.uniform());
  path.values.push_back(s);
  for (int k = 1; k < n; ++k) {
    const double t = sample(config.step, rng.uniform());
    const double u = rng.uniform();
    const double theta = sample_theta(config.alpha, rng);
    s = walk_step(s, t, u, theta, config.alpha);
    path.values.push_back(s);
  }
  return path;
}

long long count_renewals(const WalkConfig& config, double t, std::uint64_t path_index) {
  check_alpha(config.alpha);
  if (!(t > 0.0)) throw input_error("count_renewals: t must be positive");
  PathRng rng(config.seed, path_index);
  double s = sample(config.step, rng.uniform());
  if (s > t) return 0;
  long long count = 1;
  for (long long step = 1; step < config.max_steps; ++step) {
    const double next = sample(config.step, rng.uniform());
    const double u = rng.uniform();
    const double theta = sample_theta(config.alpha, rng);
    s = walk_step(s, next, u, theta, config.alpha);
    if (s > t) return count;
    ++count;
  }
  throw runaway_error("count_renewals: walk did not cross the level within max_steps");
}

void parallel_paths(long long n, int n_threads, const std::function<void(long long)>& fn) {
  if (n <= 0) return;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  long long workers = n_threads > 0 ? n_threads : static_cast<long long>(hw);
  workers = std::min<long long>(workers, n);
  if (workers <= 1) {
    for (long long i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  std::exception_ptr failure;
  std::mutex failure_mutex;
  for (long long w = 0; w < workers; ++w) {
    const long long lo = n * w / workers;
    const long long hi = n * (w + 1) / workers;
    pool.emplace_back([&, lo, hi]() {
      try {
        for (long long i = lo; i < hi; ++i) fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

McStats mc_renewal_stats(const WalkConfig& config, double t, long long n_sims,
                         int n_threads) {
  if (n_sims < 2) throw input_error("mc_renewal_stats: need at least 2 paths");
  std::vector<long long> counts(static_cast<std::size_t>(n_sims), 0);
  parallel_paths(n_sims, n_threads, [&](long long i) {
    counts[static_cast<std::size_t>(i)] =
        count_renewals(config, t, static_cast<std::uint64_t>(i));
  });
  McStats stats;
  stats.n_sims = n_sims;
  double sum = 0.0;
  for (long long c : counts) sum += static_cast<double>(c);
  const double n = static_cast<double>(n_sims);
  stats.mean = sum / n;
  double m2 = 0.0;
  double m4 = 0.0;
  for (long long c : counts) {
    const double d = static_cast<double>(c) - stats.mean;
    const double d2 = d * d;
    m2 += d2;
    m4 += d2 * d2;
  }
  stats.variance = m2 / (n - 1.0);
  stats.se_mean = std::sqrt(stats.variance / n);
  const double m4n = m4 / n;
  const double var2 = stats.variance * stats.variance;
  stats.se_variance = std::sqrt(std::max(m4n - var2, 0.0) / n);
  return stats;
}

JointExceedance joint_exceedance_check(const WalkConfig& config,
                                       const std::vector<int>& indices, double x,
                                       long long n_sims, int n_threads) {
  if (indices.size() < 2) {
    throw input_error("joint_exceedance_check: need at least two indices");
  }
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 1 || (i > 0 && indices[i] <= indices[i - 1])) {
      throw input_error("joint_exceedance_check: indices must be strictly increasing");
    }
  }
  if (!(x > 0.0)) throw input_error("joint_exceedance_check: x must be positive");
  if (n_sims < 1) throw input_error("joint_exceedance_check: n_sims must be positive");
  const int horizon = indices.back();
  std::vector<unsigned char> all_hits(static_cast<std::size_t>(n_sims), 0);
  std::vector<unsigned char> last_hits(static_cast<std::size_t>(n_sims), 0);
  parallel_paths(n_sims, n_threads, [&](long long i) {
    const WalkPath path = sample_path(config, horizon, static_cast<std::uint64_t>(i));
    bool all_above = true;
    bool prior_below = true;
    for (std::size_t k = 0; k + 1 < indices.size(); ++k) {
      const double s = path.values[static_cast<std::size_t>(indices[k] - 1)];
      if (s <= x) all_above = false;
      if (s > x) prior_below = false;
    }
    const double last = path.values[static_cast<std::size_t>(indices.back() - 1)];
    if (last <= x) all_above = false;
    all_hits[static_cast<std::size_t>(i)] = all_above ? 1 : 0;
    last_hits[static_cast<std::size_t>(i)] = (prior_below && last > x) ? 1 : 0;
  });
  long long n_all = 0;
  long long n_last = 0;
  for (long long i = 0; i < n_sims; ++i) {
    n_all += all_hits[static_cast<std::size_t>(i)];
    n_last += last_hits[static_cast<std::size_t>(i)];
  }
  JointExceedance out;
  out.empirical_all = static_cast<double>(n_all) / static_cast<double>(n_sims);
  out.empirical_last = static_cast<double>(n_last) / static_cast<double>(n_sims);
  const int k1 = indices.front();
  const int km = indices[indices.size() - 2];
  const int klast = indices.back();
  out.analytic_all = 1.0 - nfold_cdf(config.step, config.alpha, k1, x);
  out.analytic_last = nfold_cdf(config.step, config.alpha, km, x) -
                      nfold_cdf(config.step, config.alpha, klast, x);
  return out;
}

}  // namespace kendall
