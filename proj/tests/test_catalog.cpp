#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "kendall/catalog.hpp"
#include "kendall/errors.hpp"
#include "kendall/williamson.hpp"

using kendall::catalog_lookup;

TEST_SUITE("catalog") {
  TEST_CASE("entries list every law once") {
    const auto entries = kendall::catalog_entries();
    std::set<std::string> names;
    for (const auto& e : entries) names.insert(e.name);
    CHECK(entries.size() == 8);
    CHECK(names == std::set<std::string>{"dirac1", "uniform01", "pareto", "pareto2alpha",
                                         "lackmem", "kendall_stable", "cauchy_onesided",
                                         "student_like"});
  }

  TEST_CASE("lookup validates names and parameters") {
    CHECK_THROWS_AS(catalog_lookup("nosuch", {}, 1.0), kendall::parameter_error);
    CHECK_THROWS_AS(catalog_lookup("pareto", {}, 1.0), kendall::parameter_error);
    CHECK_THROWS_AS(catalog_lookup("pareto", {-1.0}, 1.0), kendall::parameter_error);
    CHECK_THROWS_AS(catalog_lookup("pareto", {1.0, 2.0}, 1.0), kendall::parameter_error);
    CHECK_THROWS_AS(catalog_lookup("uniform01", {0.5}, 1.0), kendall::parameter_error);
    CHECK_THROWS_AS(catalog_lookup("dirac1", {}, 0.0), kendall::parameter_error);
    CHECK_THROWS_AS(catalog_lookup("dirac1", {}, -2.0), kendall::parameter_error);
  }

  TEST_CASE("quantile inverts the cdf on the continuous laws") {
    const std::vector<std::pair<std::string, std::vector<double>>> laws = {
        {"uniform01", {}},      {"pareto", {3.0}},       {"pareto2alpha", {}},
        {"lackmem", {}},        {"kendall_stable", {}},  {"cauchy_onesided", {}},
        {"student_like", {3.0}}};
    for (const auto& [name, params] : laws) {
      for (double alpha : {0.5, 1.0, 2.0}) {
        const auto dist = catalog_lookup(name, params, alpha);
        for (double u : {0.05, 0.25, 0.5, 0.75, 0.95}) {
          INFO(name, " alpha=", alpha, " u=", u);
          CHECK(dist.cdf(dist.quantile(u)) == doctest::Approx(u).epsilon(1e-9));
        }
      }
    }
  }

  TEST_CASE("survival function complements the cdf") {
    for (const auto& [name, params] :
         std::vector<std::pair<std::string, std::vector<double>>>{
             {"dirac1", {}}, {"uniform01", {}}, {"pareto", {3.0}}, {"pareto2alpha", {}},
             {"lackmem", {}}, {"kendall_stable", {}}, {"cauchy_onesided", {}},
             {"student_like", {3.0}}}) {
      const auto dist = catalog_lookup(name, params, 1.0);
      for (double t : {0.5, 1.5, 7.0}) {
        INFO(name, " t=", t);
        CHECK(dist.sf(t) + dist.cdf(t) == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("dirac1 is the unit point mass") {
    const auto d = catalog_lookup("dirac1", {}, 1.0);
    CHECK(d.cdf(0.999) == 0.0);
    CHECK(d.cdf(1.0) == 1.0);
    CHECK(d.cdf_left(1.0) == 0.0);
    CHECK(d.quantile(0.3) == 1.0);
    CHECK(d.measure.atoms.size() == 1);
    CHECK(d.measure.atoms[0].position == 1.0);
    CHECK(d.measure.atoms[0].mass == 1.0);
  }

  TEST_CASE("cdf_left equals cdf for continuous laws") {
    const auto u = catalog_lookup("uniform01", {}, 1.0);
    CHECK(u.cdf_left(0.5) == doctest::Approx(u.cdf(0.5)).epsilon(1e-15));
  }

  TEST_CASE("kendall_stable distribution function and inverse") {
    const auto d = catalog_lookup("kendall_stable", {}, 1.0);
    CHECK(d.cdf(2.0) == doctest::Approx(1.5 * std::exp(-0.5)).epsilon(1e-14));
    for (double u : {1e-6, 0.3, 0.9, 0.999999}) {
      CHECK(d.cdf(d.quantile(u)) == doctest::Approx(u).epsilon(1e-10));
    }
    SUBCASE("far tail avoids cancellation") {
      CHECK(d.sf(2000.0) + d.cdf(2000.0) == doctest::Approx(1.0).epsilon(1e-12));
      const double w = 1.0 / 2000.0;
      CHECK(d.sf(2000.0) == doctest::Approx(w * w / 2.0).epsilon(1e-3));
    }
  }

  TEST_CASE("pareto alpha-moment function is continuous at beta") {
    const auto d = catalog_lookup("pareto", {2.0}, 2.0);
    const double at_beta = *d.analytic_H(2.0, 7.5);
    CHECK(at_beta == doctest::Approx(2.0 * std::log(7.5)).epsilon(1e-10));
    const double near_beta = *d.analytic_H(2.0 + 1e-12, 7.5);
    CHECK(std::fabs(near_beta - at_beta) < 1e-8);
  }

  TEST_CASE("regular variation index of the tail moment") {
    CHECK(*catalog_lookup("pareto", {1.0}, 2.0).rv_index(2.0) == doctest::Approx(1.0));
    CHECK(*catalog_lookup("pareto", {3.0}, 0.5).rv_index(0.5) == doctest::Approx(0.0));
    CHECK(*catalog_lookup("uniform01", {}, 1.0).rv_index(1.0) == doctest::Approx(0.0));
    CHECK(*catalog_lookup("kendall_stable", {}, 1.0).rv_index(1.0) == doctest::Approx(0.0));
  }

  TEST_CASE("sample rejects u outside the open unit interval") {
    const auto d = catalog_lookup("uniform01", {}, 1.0);
    CHECK_THROWS_AS(kendall::sample(d, 0.0), kendall::input_error);
    CHECK_THROWS_AS(kendall::sample(d, 1.0), kendall::input_error);
    CHECK(kendall::sample(d, 0.25) == doctest::Approx(0.25));
  }

  TEST_CASE("scaling maps the transform pair consistently") {
    const auto u = catalog_lookup("uniform01", {}, 1.0);
    const auto s = kendall::scaled(u, 2.0);
    CHECK(s.cdf(1.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(kendall::williamson_G(s, 1.0, 1.0) == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(kendall::moment_H(s, 1.0, 1.0) == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(kendall::m_alpha(s, 1.0) == doctest::Approx(1.0).epsilon(1e-9));
  }

  TEST_CASE("mixtures combine transforms linearly") {
    const auto u = catalog_lookup("uniform01", {}, 1.0);
    const auto d = catalog_lookup("dirac1", {}, 1.0);
    const auto mix = kendall::mixture(u, d, 0.5);
    CHECK(mix.cdf(0.999) == doctest::Approx(0.4995).epsilon(1e-12));
    CHECK(mix.cdf(2.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(kendall::williamson_G(mix, 1.0, 2.0) == doctest::Approx(0.625).epsilon(1e-9));
    CHECK(kendall::moment_H(mix, 1.0, 2.0) == doctest::Approx(0.75).epsilon(1e-9));
  }

  TEST_CASE("generalized sum of two levels is not memoryless for uniform steps") {
    const auto u = catalog_lookup("uniform01", {}, 2.0);
    const auto chk = kendall::lack_of_memory_check(u, 2.0, 0.5, 0.5, 200'000, 42);
    CHECK(chk.target == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(chk.empirical == doctest::Approx(17.0 / 24.0).epsilon(0.03));
    CHECK(chk.empirical - chk.target > 0.15);
  }

  TEST_CASE("the power law keeps the generalized lack of memory property") {
    const auto lm = catalog_lookup("lackmem", {}, 2.0);
    const auto chk = kendall::lack_of_memory_check(lm, 2.0, 0.5, 0.7, 200'000, 43);
    CHECK(chk.target == doctest::Approx(0.51).epsilon(1e-12));
    CHECK(std::fabs(chk.empirical - chk.target) < 0.015);
  }

  TEST_CASE("lack of memory check validates its inputs") {
    const auto u = catalog_lookup("uniform01", {}, 1.0);
    CHECK_THROWS_AS(kendall::lack_of_memory_check(u, 1.0, -0.1, 0.5, 10, 1),
                    kendall::input_error);
    CHECK_THROWS_AS(kendall::lack_of_memory_check(u, 1.0, 2.0, 0.5, 10, 1),
                    kendall::divergence_error);
  }
}
