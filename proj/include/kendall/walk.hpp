// Kendall random walk simulation.
//
// The walk starts at S_0 = 0 and moves by
//   S_{n+1} = M (1{u > rho} + theta 1{u <= rho}),
// where M = max(S_n, T_{n+1}), rho = (min(S_n, T_{n+1}) / M)^alpha, u is
// uniform on (0,1) and theta is a Pareto(2 alpha) multiplier with density
// 2 alpha y^(-2 alpha - 1) on [1, inf).  Ties u = rho take the theta branch
// (a probability-zero event under the open-interval uniform draw).
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "kendall/catalog.hpp"
#include "kendall/rng.hpp"

namespace kendall {

struct WalkConfig {
  double alpha = 1.0;
  StepDistribution step;
  std::uint64_t seed = 0;
  long long max_steps = 1'000'000;
};

struct WalkPath {
  std::vector<double> values;  ///< S_1 .. S_n
};

/// One transition.  Throws input_error when prev and next are both zero
/// (degenerate state) or negative.
double walk_step(double prev, double next, double u, double theta, double alpha);

/// Draw from the Kendall convolution of two point masses delta_x and
/// delta_y: returns max(x,y) with probability 1 - rho, else max(x,y) theta.
double sample_pair_convolution(double x, double y, double alpha, PathRng& rng);

/// Pareto(2 alpha) multiplier via inverse CDF.
double sample_theta(double alpha, PathRng& rng);

/// Simulate S_1..S_n on the substream (config.seed, path_index).
WalkPath sample_path(const WalkConfig& config, int n, std::uint64_t path_index = 0);

/// First-passage count N(t) = #{ n >= 1 : S_n <= t }.  Throws runaway_error
/// when the walk has not crossed t after config.max_steps steps.
long long count_renewals(const WalkConfig& config, double t, std::uint64_t path_index = 0);

struct McStats {
  double mean = 0.0;
  double variance = 0.0;
  double se_mean = 0.0;      ///< standard error of the mean
  double se_variance = 0.0;  ///< standard error of the variance estimate
  long long n_sims = 0;
};

/// Monte Carlo moments of N(t) over n_sims independent paths.  Path k uses
/// substream (seed, k); aggregation is order independent, so any thread
/// count produces identical results.  n_threads = 0 picks the hardware
/// concurrency.
McStats mc_renewal_stats(const WalkConfig& config, double t, long long n_sims,
                         int n_threads = 0);

struct JointExceedance {
  double empirical_all = 0.0;   ///< P{ S_{k_i} > x for every i }
  double analytic_all = 0.0;    ///< 1 - F_{k_1}(x)
  double empirical_last = 0.0;  ///< P{ S_{k_{m+1}} > x, S_{k_i} <= x, i <= m }
  double analytic_last = 0.0;   ///< F_{k_m}(x) - F_{k_{m+1}}(x)
};

/// Joint exceedance probabilities of the monotone walk at the given strictly
/// increasing indices (the last index is the "future" one).
JointExceedance joint_exceedance_check(const WalkConfig& config,
                                       const std::vector<int>& indices, double x,
                                       long long n_sims, int n_threads = 0);

/// Deterministic map-over-paths helper: calls fn(path_index) for every index
/// in [0, n) with results independent of the thread count.
void parallel_paths(long long n, int n_threads, const std::function<void(long long)>& fn);

}  // namespace kendall
