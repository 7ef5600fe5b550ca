#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "kendall/asymptotics.hpp"
#include "kendall/catalog.hpp"
#include "kendall/errors.hpp"
#include "kendall/walk.hpp"

using kendall::catalog_lookup;

TEST_SUITE("asymptotics") {
  TEST_CASE("gamma mixture cdf endpoints") {
    CHECK(kendall::mixture_gamma_cdf(0.0, 1.0) ==
          doctest::Approx(1.0 - 2.0 * std::exp(-1.0)).epsilon(1e-14));
    CHECK(kendall::mixture_gamma_cdf(1.0, 1.0) ==
          doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
    CHECK(kendall::mixture_gamma_cdf(0.3, 0.0) == 0.0);
    CHECK(kendall::mixture_gamma_cdf(0.3, -1.0) == 0.0);
    CHECK_THROWS_AS(kendall::mixture_gamma_cdf(-0.1, 1.0), kendall::parameter_error);
    CHECK_THROWS_AS(kendall::mixture_gamma_cdf(1.1, 1.0), kendall::parameter_error);
  }

  TEST_CASE("gamma mixture cdf is monotone") {
    double prev = 0.0;
    for (double x = 0.0; x <= 10.0; x += 0.25) {
      const double v = kendall::mixture_gamma_cdf(0.5, x);
      CHECK(v >= prev);
      prev = v;
    }
    CHECK(prev > 0.999);
  }

  TEST_CASE("tail ratios of a heavy-tailed step law") {
    const auto p = catalog_lookup("pareto", {1.0}, 2.0);
    const auto reports = kendall::tail_ratio_reports(p, 2.0, 1e4);
    CHECK(reports[0].quantity == "tail_cdf_ratio");
    CHECK(reports[0].limit_value == doctest::Approx(1.0));
    CHECK(reports[1].limit_value == doctest::Approx(2.0));
    CHECK(reports[2].limit_value == doctest::Approx(2.0));
    for (const auto& r : reports) {
      INFO(r.quantity);
      CHECK(r.rel_error < 1e-3);
    }
  }

  TEST_CASE("elementary renewal ratio for a light-tailed law") {
    const auto u = catalog_lookup("uniform01", {}, 1.0);
    const auto r = kendall::elementary_renewal_report(u, 1.0, 1e3);
    CHECK(r.limit_value == doctest::Approx(2.0));
    CHECK(r.rel_error < 1e-3);
  }

  TEST_CASE("weighted and normalized increment ratios") {
    const auto u = catalog_lookup("uniform01", {}, 1.0);
    const auto w = kendall::blackwell_weighted_report(u, 1.0, 1000.0, 1.0);
    CHECK(w.limit_value == doctest::Approx(2.0));
    CHECK(w.rel_error < 1e-6);

    const auto n = kendall::blackwell_normalized_report(u, 1.0, 1000.0, 1.0);
    CHECK(n.limit_value == doctest::Approx(4.0));
    CHECK(n.rel_error < 1e-9);
  }

  TEST_CASE("normalized increment needs a finite moment") {
    const auto p = catalog_lookup("pareto", {1.0}, 2.0);
    CHECK_THROWS_AS(kendall::blackwell_normalized_report(p, 2.0, 100.0, 1.0),
                    kendall::divergence_error);
  }

  TEST_CASE("logarithmic increment applies only at the boundary tail index") {
    const auto u = catalog_lookup("uniform01", {}, 1.0);
    CHECK_THROWS_AS(kendall::blackwell_log_report(u, 1.0, 100.0, 1.0),
                    kendall::parameter_error);
    const auto p = catalog_lookup("pareto", {2.0}, 2.0);
    const auto r = kendall::blackwell_log_report(p, 2.0, 1e8, 1.0);
    CHECK(r.limit_value == doctest::Approx(2.0));
    CHECK(r.rel_error < 0.08);
  }

  TEST_CASE("report suite gathers the applicable quantities") {
    const auto p = catalog_lookup("pareto", {1.0}, 2.0);
    const auto reports = kendall::asymptotics_suite(p, 2.0, 1e6, 1.0);
    std::set<std::string> names;
    for (const auto& r : reports) {
      names.insert(r.quantity);
      INFO(r.quantity);
      CHECK(r.rel_error <= 0.02);
    }
    CHECK(names.count("tail_cdf_ratio") == 1);
    CHECK(names.count("elementary_renewal") == 1);
    CHECK(names.count("blackwell_weighted") == 1);
    CHECK(names.count("blackwell_normalized") == 0);

    const auto u = catalog_lookup("uniform01", {}, 1.0);
    const auto ureports = kendall::asymptotics_suite(u, 1.0, 1e3, 1.0);
    std::set<std::string> unames;
    for (const auto& r : ureports) unames.insert(r.quantity);
    CHECK(unames.count("blackwell_normalized") == 1);
    CHECK(unames.count("blackwell_log") == 0);
  }

  TEST_CASE("regular variation index estimate") {
    const double expected = std::log1p(std::log(2.0) / std::log(1e6)) / std::log(2.0);
    const auto est = kendall::rv_index_estimate(
        [](double x) { return 2.0 * std::log(x); }, 1e6, 2.0);
    CHECK(est == doctest::Approx(expected).epsilon(1e-12));
    CHECK(est == doctest::Approx(0.070618).epsilon(1e-4));

    const auto p = catalog_lookup("pareto", {1.0}, 2.0);
    const auto heavy = kendall::rv_index_estimate(
        [&](double x) { return *p.analytic_H(2.0, x); }, 1e6, 2.0);
    CHECK(std::fabs(heavy - 1.0) < 1e-4);

    CHECK_THROWS_AS(kendall::rv_index_estimate([](double) { return 1.0; }, -1.0, 2.0),
                    kendall::input_error);
    CHECK_THROWS_AS(kendall::rv_index_estimate([](double) { return 1.0; }, 1.0, 1.0),
                    kendall::input_error);
  }

  TEST_CASE("limit law simulation smoke") {
    kendall::WalkConfig cfg;
    cfg.alpha = 1.0;
    cfg.step = catalog_lookup("uniform01", {}, 1.0);
    cfg.seed = 5;
    const auto res = kendall::limit_law_simulation(cfg, 50.0, 4000, 0);
    CHECK(res.mixture_weight == doctest::Approx(0.0));
    CHECK(res.n_sims == 4000);
    CHECK(std::fabs(res.mean - 2.0) < 0.2);
    CHECK(res.ks < 0.06);
  }

  TEST_CASE("scaling limit simulation smoke") {
    kendall::WalkConfig cfg;
    cfg.alpha = 2.0;
    cfg.step = catalog_lookup("pareto", {1.0}, 2.0);
    cfg.seed = 77;
    const auto res = kendall::scaling_limit_simulation(cfg, 50, 4000, 0);
    CHECK(res.n == 50);
    CHECK(res.normalizer > 0.0);
    CHECK(res.ks < 0.1);
  }
}
