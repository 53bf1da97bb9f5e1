#include <doctest.h>

#include <cmath>

#include "bsq/bogoliubov.hpp"
#include "bsq/errors.hpp"
#include "bsq/fock_oracle.hpp"

using namespace bsq;
using namespace bsq::fock;

TEST_SUITE("fock_oracle") {
  TEST_CASE("basis enumeration") {
    const FockSpace s(std::vector<int>{2, 3, 1});
    CHECK(s.dimension() == 3 * 4 * 2);
    for (std::size_t k = 0; k < s.dimension(); ++k) CHECK(s.index(s.occupations(k)) == k);
    const std::vector<int> occ{1, 0, 1};
    CHECK(s.index(occ) == 1 * 8 + 0 * 2 + 1);
    CHECK(s.doubled().cutoff(1) == 6);
    CHECK_THROWS_AS(FockSpace(5, 1), DimensionError);
    CHECK_THROWS_AS(FockSpace(4, 40), DimensionError);  // 41^4 > 1e6
  }

  TEST_CASE("ladder operator algebra") {
    const FockSpace s(1, 6);
    const SparseOperator a = assemble(s, annihilator(0));
    const SparseOperator n = assemble(s, creator(0) * annihilator(0));
    for (int k = 0; k <= 6; ++k) CHECK(std::abs(n.coeff(k, k) - double(k)) <= 1e-15);
    CHECK(std::abs(a.coeff(2, 3) - std::sqrt(3.0)) <= 1e-15);
    const SparseOperator h = assemble(s, annihilator(0) + adjoint(annihilator(0)));
    CHECK((Eigen::MatrixXcd(h) - Eigen::MatrixXcd(h).adjoint()).norm() <= 1e-15);
  }

  TEST_CASE("two-mode squeezed vacuum") {
    const double ratio = -coeffs(1.0).beta;
    const FockSpace s(2, 30);
    const FockState psi = two_mode_squeezed_vacuum(s, 0, 1, ratio);
    const FockMoments m = moments(psi, 0, 1);
    CHECK(m.n_i == doctest::Approx(0.0773502691896).epsilon(1e-10));
    CHECK(m.n_j == doctest::Approx(m.n_i).epsilon(1e-14));
    CHECK(m.var_diff <= 1e-14);
    REQUIRE(m.xi.has_value());
    CHECK(*m.xi <= 1e-12);
    CHECK(psi.norm() == doctest::Approx(1.0).epsilon(1e-14));
  }

  TEST_CASE("insufficient cutoff is reported with the requirement") {
    const FockSpace s(2, 3);
    try {
      two_mode_squeezed_vacuum(s, 0, 1, -0.5);
      FAIL("expected CutoffError");
    } catch (const CutoffError& e) {
      CHECK(e.required_cutoff() == required_cutoff(-0.5));
      CHECK(e.required_cutoff() > 3);
    }
    CHECK_THROWS_AS(two_mode_squeezed_vacuum(s, 0, 1, 1.0), DomainError);
  }

  TEST_CASE("squeeze generator reproduces sinh^2 r") {
    // H = i g (a+ b+ - a b) generates r = g t
    for (int n_max : {12, 40}) {
      const FockSpace s(2, n_max);
      const OperatorSum pair = creator(0) * creator(1);
      const OperatorSum h = scaled(pair, {0.0, 1.0}) + adjoint(scaled(pair, {0.0, 1.0}));
      for (double r : {0.05, 0.2}) {
        const FockMoments m = moments(evolve(vacuum_state(s), h, r), 0, 1);
        CHECK(std::abs(m.n_i - std::sinh(r) * std::sinh(r)) <= 1e-8);
        CHECK(m.var_diff <= 1e-12);
      }
    }
  }

  TEST_CASE("dense and Taylor propagation agree") {
    const OperatorSum pair = creator(0) * creator(1);
    const OperatorSum h = scaled(pair, {0.0, 0.3}) + adjoint(scaled(pair, {0.0, 0.3})) + annihilator(0, 0.2) +
                          creator(0, 0.2) + creator(1) * annihilator(1);
    const FockSpace small(2, 15);          // dense
    const FockSpace large(std::vector<int>{40, 40});  // Taylor
    const FockMoments a = moments(evolve(vacuum_state(small), h, 1.1), 0, 1);
    const FockMoments b = moments(evolve(vacuum_state(large), h, 1.1), 0, 1);
    CHECK(large.dimension() > kDenseLimit);
    CHECK(small.dimension() <= kDenseLimit);
    CHECK(a.n_i == doctest::Approx(b.n_i).epsilon(1e-9));
    CHECK(a.var_diff == doctest::Approx(b.var_diff).epsilon(1e-9));
  }

  TEST_CASE("quasiparticle expansion") {
    // alpha+_k alpha_k acting on the Bogoliubov vacuum has zero expectation
    const ModeRegistry modes({1.0, -1.0});
    QuadraticForm form(2);
    form.add_number(0, 1.0);
    const OperatorSum n_qp = hamiltonian_terms(form, modes, Basis::Quasiparticle);
    const FockSpace s(2, 30);
    const FockState psi = two_mode_squeezed_vacuum(s, 0, 1, -coeffs(1.0).beta);
    const Eigen::VectorXcd out = assemble(s, n_qp) * psi.amplitudes;
    CHECK(std::abs(psi.amplitudes.dot(out)) <= 1e-12);
  }

  TEST_CASE("time-dependent forms are rejected") {
    QuadraticForm form(2);
    form.add_pair(0, 1, 1.0, 2.0);
    CHECK_THROWS_AS(hamiltonian_terms(form, ModeRegistry({1.0, -1.0}), Basis::Particle), ValidationError);
  }
}
