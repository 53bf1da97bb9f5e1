#include "bsq/units.hpp"

#include <cmath>
#include <sstream>

#include "bsq/errors.hpp"

namespace bsq {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream msg;
    msg << "invalid parameter " << name << " = " << value << " (must be finite and > 0)";
    throw InvalidParameter(msg.str());
  }
}

}  // namespace

void validate(const LabParameters& p) {
  require_positive(p.atom_mass, "atom_mass");
  require_positive(p.n_condensate, "n_condensate");
  require_positive(p.volume, "volume");
  require_positive(p.scattering_length, "scattering_length");
  require_positive(p.rabi_frequency, "rabi_frequency");
  require_positive(p.detuning, "detuning");
}

DerivedScales derive(const LabParameters& p) {
  validate(p);
  DerivedScales s;
  s.density = p.n_condensate / p.volume;
  const double k0_squared = 8.0 * constants::pi * p.scattering_length * s.density;
  s.healing_momentum = std::sqrt(k0_squared);
  s.energy_scale = constants::hbar * k0_squared / (2.0 * p.atom_mass);
  s.effective_coupling = p.rabi_frequency * p.rabi_frequency / (2.0 * p.detuning);
  return s;
}

std::vector<std::string> warnings(const LabParameters& p, const DerivedScales& s) {
  std::vector<std::string> out;
  const double gas_parameter = s.density * std::pow(p.scattering_length, 3);
  if (gas_parameter >= 1e-3) {
    std::ostringstream msg;
    msg << "gas parameter n0 a^3 = " << gas_parameter << " >= 1e-3; Bogoliubov theory is not dilute-limit accurate";
    out.push_back(msg.str());
  }
  const double discreteness = s.healing_momentum * s.healing_momentum * std::pow(p.volume, 2.0 / 3.0);
  if (discreteness < 100.0) {
    std::ostringstream msg;
    msg << "k0^2 V^(2/3) = " << discreteness << " is not >> 1; momentum spectrum discreteness is not negligible";
    out.push_back(msg.str());
  }
  return out;
}

LabParameters reference_sodium_parameters() {
  LabParameters p;
  p.atom_mass = kSodium23MassKg;
  p.n_condensate = 1e7;
  p.volume = lab_units::cm3_to_m3(1e-7);
  p.scattering_length = lab_units::nm_to_m(2.8);
  p.rabi_frequency = lab_units::two_pi_mhz_to_rad_s(1.8);
  p.detuning = lab_units::two_pi_ghz_to_rad_s(1.0);
  return p;
}

}  // namespace bsq
