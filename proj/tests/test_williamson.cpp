#include <doctest.h>

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "kendall/catalog.hpp"
#include "kendall/errors.hpp"
#include "kendall/williamson.hpp"

using kendall::catalog_lookup;

namespace {

kendall::StepDistribution strip_analytic(kendall::StepDistribution dist) {
  dist.analytic_G = {};
  dist.analytic_Gbar = {};
  dist.analytic_H = {};
  dist.closed_form_R = {};
  return dist;
}

}  // namespace

TEST_SUITE("williamson") {
  TEST_CASE("uniform law transform values") {
    const auto u = catalog_lookup("uniform01", {}, 1.0);
    CHECK(kendall::williamson_G(u, 1.0, 0.5) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(kendall::moment_H(u, 1.0, 0.5) == doctest::Approx(0.125).epsilon(1e-12));
    CHECK(kendall::williamson_G(u, 1.0, 2.0) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(kendall::moment_H(u, 1.0, 2.0) == doctest::Approx(0.5).epsilon(1e-12));
  }

  TEST_CASE("numeric route agrees with the closed forms") {
    for (const auto& [name, params] :
         std::vector<std::pair<std::string, std::vector<double>>>{
             {"uniform01", {}}, {"pareto", {3.0}}, {"kendall_stable", {}}}) {
      const auto dist = catalog_lookup(name, params, 1.0);
      const auto numeric = strip_analytic(dist);
      for (double t : {0.5, 1.3, 4.0}) {
        INFO(name, " t=", t);
        CHECK(kendall::williamson_G(numeric, 1.0, t) ==
              doctest::Approx(kendall::williamson_G(dist, 1.0, t)).epsilon(1e-9));
        CHECK(kendall::moment_H(numeric, 1.0, t) ==
              doctest::Approx(kendall::moment_H(dist, 1.0, t)).epsilon(1e-9));
      }
    }
  }

  TEST_CASE("transform snapshot satisfies its internal identities") {
    for (const auto& [name, params] :
         std::vector<std::pair<std::string, std::vector<double>>>{
             {"dirac1", {}}, {"uniform01", {}}, {"pareto", {3.0}}, {"pareto2alpha", {}},
             {"lackmem", {}}, {"kendall_stable", {}}, {"cauchy_onesided", {}},
             {"student_like", {3.0}}}) {
      const auto dist = catalog_lookup(name, params, 1.0);
      for (double t : {0.5, 1.3, 4.0}) {
        const auto e = kendall::eval_transform(dist, 1.0, t);
        INFO(name, " t=", t);
        CHECK(e.G + e.H / t == doctest::Approx(e.F).epsilon(1e-9));
        CHECK(e.G + e.Gbar == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(e.F + e.Fbar == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(e.F == doctest::Approx(dist.cdf(t)).epsilon(1e-9));
      }
    }
  }

  TEST_CASE("inversion recovers the cdf through the moment component") {
    const auto u = catalog_lookup("uniform01", {}, 1.0);
    const auto pair = kendall::make_williamson_pair(u, 1.0);
    for (double t : {0.3, 0.8, 1.5}) {
      const auto inv = kendall::invert_williamson(pair, t);
      CHECK(inv.cdf == doctest::Approx(u.cdf(t)).epsilon(1e-9));
      CHECK(!inv.precision_warning);
    }
  }

  TEST_CASE("inversion falls back to differentiating G") {
    kendall::WilliamsonPair pair;
    pair.alpha = 1.0;
    pair.G = [](double t) { return t <= 1.0 ? 0.5 * t : 1.0 - 0.5 / t; };
    pair.H = {};
    pair.source = kendall::TransformSource::numeric_from_cdf;
    const auto inv = kendall::invert_williamson(pair, 0.5);
    CHECK(inv.cdf == doctest::Approx(0.5).epsilon(1e-6));
  }

  TEST_CASE("n-fold convolution cdf and jumps for the unit point mass") {
    const auto d = catalog_lookup("dirac1", {}, 1.0);
    CHECK(kendall::nfold_cdf(d, 1.0, 1, 2.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(kendall::nfold_cdf(d, 1.0, 2, 2.0) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(kendall::nfold_cdf(d, 1.0, 2, 0.5) == 0.0);
    CHECK(kendall::nfold_jump(d, 1.0, 1, 1.0) == doctest::Approx(1.0));
    CHECK(kendall::nfold_jump(d, 1.0, 2, 1.0) == doctest::Approx(0.0));
    CHECK(kendall::nfold_jump(d, 1.0, 2, 1.5) == 0.0);
    CHECK_THROWS_AS(kendall::nfold_cdf(d, 1.0, 0, 2.0), kendall::input_error);
  }

  TEST_CASE("single fold reduces to the step cdf") {
    const auto u = catalog_lookup("uniform01", {}, 1.0);
    CHECK(kendall::nfold_cdf(u, 1.0, 1, 0.7) == doctest::Approx(0.7).epsilon(1e-12));
  }

  TEST_CASE("full alpha-moment") {
    CHECK(kendall::m_alpha(catalog_lookup("uniform01", {}, 1.0), 1.0) ==
          doctest::Approx(0.5).epsilon(1e-10));
    CHECK(kendall::m_alpha(catalog_lookup("pareto", {3.0}, 1.0), 1.0) ==
          doctest::Approx(1.5).epsilon(1e-10));
    CHECK(kendall::m_alpha(catalog_lookup("cauchy_onesided", {}, 0.5), 0.5) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));
    CHECK(std::isinf(kendall::m_alpha(catalog_lookup("pareto", {1.0}, 2.0), 2.0)));
  }

  TEST_CASE("numeric full moment without a closed form") {
    auto p = catalog_lookup("pareto", {3.0}, 1.0);
    p.alpha_moment = {};
    CHECK(kendall::m_alpha(p, 1.0) == doctest::Approx(1.5).epsilon(1e-8));
  }
}
