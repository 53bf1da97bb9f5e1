#include <doctest.h>

#include <cmath>

#include "bsq/bogoliubov.hpp"
#include "bsq/errors.hpp"
#include "bsq/gaussian.hpp"
#include "bsq/quadratic_form.hpp"
#include "generators.hpp"

using namespace bsq;

TEST_SUITE("quadratic_form") {
  TEST_CASE("from_matrices validates input") {
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(2, 2), b = Eigen::MatrixXcd::Zero(2, 2);
    Eigen::VectorXcd f = Eigen::VectorXcd::Zero(2);
    a(0, 1) = complex(1.0, 1.0);
    CHECK_THROWS_AS(QuadraticForm::from_matrices(a, b, f), ValidationError);
    a(1, 0) = complex(1.0, -1.0);
    CHECK_NOTHROW(QuadraticForm::from_matrices(a, b, f));
    b(0, 1) = 1.0;
    CHECK_THROWS_AS(QuadraticForm::from_matrices(a, b, f), ValidationError);
    b(1, 0) = 1.0;
    CHECK_NOTHROW(QuadraticForm::from_matrices(a, b, f));
    CHECK_THROWS_AS(QuadraticForm(2).add_pair(0, 2, 1.0), ValidationError);
  }

  TEST_CASE("resonant selection") {
    QuadraticForm h(2);
    h.add_pair(0, 1, 1.0, 1e-12);
    h.add_hopping(0, 1, 1.0, 3.0);
    const QuadraticForm r = h.resonant(1e-9);
    REQUIRE(r.terms().size() == 1);
    CHECK(r.terms()[0].kind == TermKind::Pair);
    CHECK(r.terms()[0].frequency == 0.0);
    CHECK_FALSE(r.time_dependent());
    CHECK(h.time_dependent());
  }

  TEST_CASE("simplified leaves the generator unchanged") {
    for (int trial = 0; trial < 100; ++trial) {
      const QuadraticForm h = gen::hamiltonian(3);
      Eigen::MatrixXd m1, m2;
      Eigen::VectorXd d1, d2;
      h.quadrature_generator(0.0, m1, d1);
      h.simplified().quadrature_generator(0.0, m2, d2);
      CHECK((m1 - m2).cwiseAbs().maxCoeff() <= 1e-13);
      CHECK((d1 - d2).cwiseAbs().maxCoeff() <= 1e-13);
      CHECK(h.simplified().terms().size() <= h.terms().size());
    }
  }

  TEST_CASE("quadrature generator is symmetric") {
    for (int trial = 0; trial < 50; ++trial) {
      const QuadraticForm h = gen::hamiltonian(3);
      Eigen::MatrixXd m;
      Eigen::VectorXd d;
      h.quadrature_generator(0.4, m, d);
      CHECK((m - m.transpose()).cwiseAbs().maxCoeff() <= 1e-14);
    }
  }

  TEST_CASE("quasiparticle pair term in the particle basis") {
    // Evolving the particle-basis image from the Bogoliubov vacuum equals
    // squeezing the quasiparticle vacuum directly.
    const ModeRegistry modes({3.0, -3.0, 2.0, -2.0});
    const double g = 0.4, t = 1.7;
    QuadraticForm qp(4);
    qp.add_pair(0, 3, complex(0.0, g));
    const GaussianState particle = evolve_quadratic(bogoliubov_ground_state(modes), to_particle_basis(qp, modes), t);
    const GaussianState in_qp = to_quasiparticle_basis(particle);
    const double s = std::sinh(g * t);
    CHECK(mean_number(in_qp, 0) == doctest::Approx(s * s).epsilon(1e-11));
    CHECK(mean_number(in_qp, 3) == doctest::Approx(s * s).epsilon(1e-11));
    CHECK(std::abs(mean_number(in_qp, 1)) <= 1e-12);
    CHECK(std::abs(mean_number(in_qp, 2)) <= 1e-12);
  }

  TEST_CASE("to_particle_basis needs every partner") {
    QuadraticForm qp(2);
    qp.add_linear(0, 1.0);
    CHECK_THROWS_AS(to_particle_basis(qp, ModeRegistry({1.0, 2.0})), RegistryError);
  }
}
