#include <doctest.h>

#include <cmath>
#include <vector>

#include "kendall/catalog.hpp"
#include "kendall/errors.hpp"
#include "kendall/kernels.hpp"
#include "kendall/measure.hpp"
#include "kendall/quadrature.hpp"
#include "kendall/renewal.hpp"

using kendall::catalog_lookup;

TEST_SUITE("renewal") {
  TEST_CASE("counting pmf for the unit point mass") {
    const auto d = catalog_lookup("dirac1", {}, 1.0);
    CHECK(kendall::counting_pmf(d, 1.0, 2.0, 0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(kendall::counting_pmf(d, 1.0, 2.0, 1) == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(kendall::counting_pmf(d, 1.0, 2.0, 2) == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(kendall::counting_pmf(d, 1.0, 2.0, 3) == doctest::Approx(0.1875).epsilon(1e-13));
    CHECK_THROWS_AS(kendall::counting_pmf(d, 1.0, 2.0, -1), kendall::input_error);
  }

  TEST_CASE("renewal moments in closed form") {
    const auto d = catalog_lookup("dirac1", {}, 1.0);
    const auto de = kendall::renewal_moments(d, 1.0, 2.0);
    CHECK(de.R == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(de.EN2 == doctest::Approx(13.0).epsilon(1e-12));
    CHECK(de.VarN == doctest::Approx(4.0).epsilon(1e-12));

    const auto u = catalog_lookup("uniform01", {}, 1.0);
    const auto ue = kendall::renewal_moments(u, 1.0, 2.0);
    CHECK(ue.R == doctest::Approx(7.0).epsilon(1e-11));
    CHECK(ue.EN2 == doctest::Approx(73.0).epsilon(1e-10));
    CHECK(ue.VarN == doctest::Approx(24.0).epsilon(1e-10));
  }

  TEST_CASE("renewal function rejects nonpositive levels") {
    const auto d = catalog_lookup("dirac1", {}, 1.0);
    CHECK_THROWS_AS(kendall::renewal_R(d, 1.0, 0.0), kendall::input_error);
    CHECK_THROWS_AS(kendall::renewal_R(d, 1.0, -2.0), kendall::input_error);
  }

  TEST_CASE("series summation reproduces the transform route") {
    const auto d = catalog_lookup("dirac1", {}, 1.0);
    CHECK(kendall::series_R(d, 1.0, 2.0) == doctest::Approx(3.0).epsilon(1e-11));
    const auto u = catalog_lookup("uniform01", {}, 1.0);
    CHECK(kendall::series_R(u, 1.0, 2.0) == doctest::Approx(7.0).epsilon(1e-10));
    CHECK(kendall::series_EN2(u, 1.0, 2.0) == doctest::Approx(73.0).epsilon(1e-9));
  }

  TEST_CASE("probability generating function") {
    const auto d = catalog_lookup("dirac1", {}, 1.0);
    CHECK(kendall::counting_pgf(d, 1.0, 2.0, 0.5) ==
          doctest::Approx(2.0 / 9.0).epsilon(1e-13));

    double direct = 0.0;
    for (int n = 0; n <= 200; ++n) {
      direct += std::pow(0.5, n) * kendall::counting_pmf(d, 1.0, 2.0, n);
    }
    CHECK(kendall::counting_pgf(d, 1.0, 2.0, 0.5) == doctest::Approx(direct).epsilon(1e-12));

    CHECK_THROWS_AS(kendall::counting_pgf(d, 1.0, 2.0, 2.0), kendall::divergence_error);
    CHECK_THROWS_AS(kendall::counting_pgf(d, 1.0, 2.0, 2.5), kendall::divergence_error);
  }

  TEST_CASE("pgf power series coefficients match the pmf") {
    for (const char* name : {"dirac1", "uniform01", "kendall_stable"}) {
      const auto dist = catalog_lookup(name, {}, 1.0);
      const auto coeffs = kendall::counting_pgf_coefficients(dist, 1.0, 2.0, 10);
      REQUIRE(coeffs.size() == 11);
      for (int n = 0; n <= 10; ++n) {
        INFO(name, " n=", n);
        CHECK(coeffs[n] ==
              doctest::Approx(kendall::counting_pmf(dist, 1.0, 2.0, n)).epsilon(1e-12));
      }
    }
  }

  TEST_CASE("renewal density of the unit point mass") {
    const auto d = catalog_lookup("dirac1", {}, 1.0);
    CHECK(kendall::renewal_density(d, 1.0, 2.0) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(kendall::renewal_density(d, 1.0, 5.0) == doctest::Approx(2.0).epsilon(1e-12));
  }

  TEST_CASE("renewal measure atoms and total mass") {
    const auto d = catalog_lookup("dirac1", {}, 1.0);
    const auto m = kendall::renewal_measure(d, 1.0);
    REQUIRE(m.atoms.size() == 1);
    CHECK(m.atoms[0].position == 1.0);
    CHECK(m.atoms[0].mass == doctest::Approx(1.0).epsilon(1e-12));
    const double mass = kendall::stieltjes_integral(m, [](double) { return 1.0; }, 0.5, 2.0);
    CHECK(mass == doctest::Approx(3.0).epsilon(1e-8));
  }

  TEST_CASE("fredholm identities hold on a grid") {
    const auto d = catalog_lookup("dirac1", {}, 1.0);
    const auto res = kendall::fredholm_residual(d, 1.0, {0.5, 2.0, 5.0});
    CHECK(res.transform < 1e-9);
    CHECK(res.measure < 1e-8);
  }

  TEST_CASE("transform of the renewal measure at a frozen point") {
    const auto d = catalog_lookup("dirac1", {}, 1.0);
    const auto m = kendall::renewal_measure(d, 1.0);
    const auto kernel = kendall::ConvolutionKernel::kendall(1.0);
    const double tau = 0.5;
    double phi = 0.0;
    for (const auto& a : m.atoms) phi += a.mass * kernel.omega(tau * a.position);
    phi += kendall::integrate([&](double x) { return m.density(x) * kernel.omega(tau * x); },
                              m.density_lo, 2.0, m.breakpoints);
    CHECK(phi == doctest::Approx(1.0).epsilon(1e-9));
  }
}
