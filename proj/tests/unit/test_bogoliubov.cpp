#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "bsq/bogoliubov.hpp"
#include "bsq/errors.hpp"

using namespace bsq;

TEST_SUITE("bogoliubov") {
  TEST_CASE("frozen coefficients") {
    const auto c1 = coeffs(1.0);
    CHECK(c1.beta == doctest::Approx(2.0 - std::sqrt(3.0)).epsilon(1e-13));
    CHECK(c1.beta == doctest::Approx(0.267949192431).epsilon(1e-11));
    CHECK(c1.u * c1.u == doctest::Approx(1.07735026919).epsilon(1e-11));
    CHECK(c1.v * c1.v == doctest::Approx(0.0773502691896).epsilon(1e-11));
    CHECK(c1.omega_over_e0 == doctest::Approx(1.73205080757).epsilon(1e-11));

    const auto c2 = coeffs(2.0);
    CHECK(c2.beta == doctest::Approx(5.0 - 2.0 * std::sqrt(6.0)).epsilon(1e-12));
    CHECK(c2.v * c2.v == doctest::Approx(0.0103103630798).epsilon(1e-11));
    CHECK(c2.omega_over_e0 == doctest::Approx(2.0 * std::sqrt(6.0)).epsilon(1e-14));

    const auto c3 = coeffs(3.0);
    CHECK(c3.beta == doctest::Approx(0.0501256289338).epsilon(1e-11));
    CHECK(c3.v * c3.v == doctest::Approx(0.00251890762961).epsilon(1e-11));
    CHECK(c3.omega_over_e0 == doctest::Approx(9.94987437107).epsilon(1e-11));
  }

  TEST_CASE("pair coefficients") {
    const auto p = pair_coeffs(2.0, 3.0);
    CHECK(p.v12 == doctest::Approx(0.152114551119).epsilon(1e-11));
    CHECK(p.u12 == doctest::Approx(1.01150325588).epsilon(1e-11));
    const auto q = pair_coeffs(3.0, 2.0);
    CHECK(q.v12 == p.v12);
    CHECK(q.u12 == p.u12);
  }

  TEST_CASE("normalisation holds on a wide grid") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> log_y(-7.9, 4.0);
    for (int n = 0; n < 2000; ++n) {
      const double y = std::pow(10.0, log_y(rng));
      const auto c = coeffs(y);
      // rounding of u^2 - v^2 is ~ u^2 eps, above 1e-10 only for y ~< 1e-5
      const double floor = std::max(1e-10, 8.0 * std::numeric_limits<double>::epsilon() * c.u * c.u);
      CHECK(std::abs(c.u * c.u - c.v * c.v - 1.0) <= floor);
      if (y >= 1e-4) CHECK(std::abs(c.u * c.u - c.v * c.v - 1.0) <= 1e-10);
      CHECK(c.beta > 0.0);
      CHECK(c.beta < 1.0);
      CHECK(c.v / c.u == doctest::Approx(c.beta).epsilon(1e-12));
    }
  }

  TEST_CASE("limits") {
    // phonon regime: beta -> 1, free-particle regime: beta ~ 1/(2 y^2)
    CHECK(coeffs(1e-6).beta > 0.99999);
    const auto big = coeffs(1e3);
    CHECK(big.beta == doctest::Approx(1.0 / (4.0 * 1e6) * 2.0).epsilon(1e-5));
    CHECK(big.v > 0.0);
    CHECK(dispersion(1e3) == doctest::Approx(1e6).epsilon(1e-5));
    CHECK(dispersion(1e-4) == doctest::Approx(std::sqrt(2.0) * 1e-4).epsilon(1e-8));
  }

  TEST_CASE("domain") {
    CHECK_THROWS_AS(coeffs(0.0), DomainError);
    CHECK_THROWS_AS(coeffs(-1.0), DomainError);
    CHECK_THROWS_AS(coeffs(1e-9), DomainError);
    CHECK_THROWS_AS(coeffs(NAN), DomainError);
    CHECK_THROWS_AS(pair_coeffs(1.0, 0.0), DomainError);
    CHECK_NOTHROW(coeffs(1e-8));
  }
}
