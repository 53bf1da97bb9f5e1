#include <doctest.h>

#include <cmath>

#include "bsq/errors.hpp"
#include "bsq/units.hpp"

using namespace bsq;

TEST_SUITE("units") {
  TEST_CASE("reference sodium scales") {
    const LabParameters p = reference_sodium_parameters();
    const DerivedScales s = derive(p);
    CHECK(lab_units::per_m3_to_per_cm3(s.density) == doctest::Approx(1e14).epsilon(1e-12));
    CHECK(lab_units::rad_s_to_hz(s.energy_scale) == doctest::Approx(1500.0).epsilon(0.05));
    CHECK(s.effective_coupling / s.energy_scale == doctest::Approx(1.0).epsilon(0.10));
    // closed forms, evaluated independently
    const double k0 = std::sqrt(8.0 * constants::pi * 2.8e-9 * 1e20);
    CHECK(s.healing_momentum == doctest::Approx(k0).epsilon(1e-12));
    CHECK(lab_units::rad_s_to_hz(s.energy_scale) == doctest::Approx(1546.96496).epsilon(1e-7));
    CHECK(s.effective_coupling / s.energy_scale == doctest::Approx(1.04721182).epsilon(1e-7));
  }

  TEST_CASE("effective coupling is |Omega|^2 / 2 Delta") {
    LabParameters p = reference_sodium_parameters();
    const double w = derive(p).effective_coupling;
    p.rabi_frequency *= 2.0;
    CHECK(derive(p).effective_coupling == doctest::Approx(4.0 * w));
    p.detuning *= 2.0;
    CHECK(derive(p).effective_coupling == doctest::Approx(2.0 * w));
  }

  TEST_CASE("non-positive inputs are rejected") {
    const LabParameters good = reference_sodium_parameters();
    for (double LabParameters::*field :
         {&LabParameters::atom_mass, &LabParameters::n_condensate, &LabParameters::volume,
          &LabParameters::scattering_length, &LabParameters::rabi_frequency, &LabParameters::detuning}) {
      LabParameters p = good;
      p.*field = 0.0;
      CHECK_THROWS_AS(derive(p), InvalidParameter);
      p.*field = -1.0;
      CHECK_THROWS_AS(validate(p), InvalidParameter);
      p.*field = NAN;
      CHECK_THROWS_AS(validate(p), InvalidParameter);
    }
  }

  TEST_CASE("soft warnings") {
    LabParameters p = reference_sodium_parameters();
    CHECK(warnings(p, derive(p)).empty());
    p.scattering_length = 1e-6;  // n0 a^3 = 1e2
    CHECK_FALSE(warnings(p, derive(p)).empty());
    p = reference_sodium_parameters();
    p.volume = 1e-30;
    p.n_condensate = 1e-3;  // tiny box: k0^2 V^(2/3) small
    CHECK_FALSE(warnings(p, derive(p)).empty());
  }
}
