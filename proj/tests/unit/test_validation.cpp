#include <doctest.h>

#include "bsq/errors.hpp"
#include "bsq/validation.hpp"

using namespace bsq;

TEST_SUITE("validation") {
  TEST_CASE("single scenario agrees") {
    const LaserDrive d = oracle_drive();
    const auto all = default_oracle_scenarios(d);
    CHECK(all.size() == 18);
    const OracleReport r = run_oracle_check({all[7], all[13]}, d);
    CHECK(r.passed());
    CHECK(r.max_deviation <= 1e-6);
    CHECK(format_report(r).find("PASS") != std::string::npos);
  }

  TEST_CASE("ground state xi from the oracle") {
    // channel A registry at y = 2, dy = 1, t = 0
    const LaserDrive d = oracle_drive();
    const OracleScenario s{"ground", Channel::A, 2.0, 1.0, 0.0};
    const fock::FockMoments m = oracle_moments(s, d, fock::FockSpace(std::vector<int>{8, 8, 10, 10}));
    REQUIRE(m.xi.has_value());
    CHECK(*m.xi == doctest::Approx(1.00878058348).epsilon(1e-6));
    CHECK(*m.xi == doctest::Approx(engine_moments(s, d).xi).epsilon(1e-6));
  }

  TEST_CASE("a corrupted Wick term is caught") {
    const LaserDrive d = oracle_drive();
    const auto all = default_oracle_scenarios(d);
    // sign error on the cross covariance: Var = C_ii + C_jj + 2 C_ij
    const EngineEvaluator corrupted = [](const OracleScenario& s, const LaserDrive& drive) {
      PairMoments m = engine_moments(s, drive);
      const GaussianState st = engine_state(s, drive);
      const auto [i, j] = observed_modes(s.channel);
      const double cross = number_covariance(st, i, j);
      m.var_diff += 4.0 * cross;
      m.xi = m.var_diff / (m.n_i + m.n_j);
      return m;
    };
    const OracleReport r = run_oracle_check({all[2], all[8], all[14]}, d, corrupted);
    CHECK_FALSE(r.passed());
    CHECK(r.all_converged);
    CHECK_FALSE(r.all_matched);
    CHECK(format_report(r).find("FAIL (mismatch)") != std::string::npos);
  }

  TEST_CASE("convergence failures are reported separately") {
    OracleTolerances tol;
    tol.convergence = 0.0;  // nothing can meet this
    const LaserDrive d = oracle_drive();
    const OracleReport r = run_oracle_check({default_oracle_scenarios(d)[8]}, d, engine_moments, tol);
    CHECK_FALSE(r.all_converged);
    CHECK(format_report(r).find("FAIL (convergence)") != std::string::npos);
  }

  TEST_CASE("empty grid is an error") {
    CHECK_THROWS_AS(run_oracle_check({}, oracle_drive()), ValidationError);
  }

  TEST_CASE("cutoff heuristic") {
    const auto c = cutoffs_for({0.0, 0.1, 1.0});
    CHECK(c[0] == 2);
    CHECK(c[1] < c[2]);
  }
}
