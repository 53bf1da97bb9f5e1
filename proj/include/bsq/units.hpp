#pragma once

#include <string>
#include <vector>

namespace bsq {

namespace constants {
inline constexpr double pi = 3.14159265358979323846;
inline constexpr double hbar = 1.054571817e-34;       // J s
inline constexpr double atomic_mass_unit = 1.66053906660e-27;  // kg
}  // namespace constants

/// Mass of a sodium-23 atom in kg (data, for configs that want it).
inline constexpr double kSodium23MassKg = 22.98976928 * constants::atomic_mass_unit;

/// Laboratory inputs, SI units. Frequencies are angular (rad/s).
struct LabParameters {
  double atom_mass = 0.0;          // kg
  double n_condensate = 0.0;       // N0, atoms in the k = 0 mode
  double volume = 0.0;             // m^3
  double scattering_length = 0.0;  // m
  double rabi_frequency = 0.0;     // rad/s, one-photon Rabi frequency
  double detuning = 0.0;           // rad/s, from the internal transition

  bool operator==(const LabParameters&) const = default;
};

/// Scales derived from LabParameters. All other modules work in units of
/// healing_momentum (k0) and energy_scale (E0 = hbar k0^2 / 2m).
struct DerivedScales {
  double density = 0.0;             // n0 = N0 / V, m^-3
  double healing_momentum = 0.0;    // k0 = sqrt(8 pi a n0), m^-1
  double energy_scale = 0.0;        // E0 = hbar k0^2 / 2m, rad/s
  double effective_coupling = 0.0;  // Omega~ = |Omega|^2 / (2 Delta), rad/s

  bool operator==(const DerivedScales&) const = default;
};

/// Throws InvalidParameter unless every field is strictly positive and finite.
void validate(const LabParameters& params);

DerivedScales derive(const LabParameters& params);

/// Soft checks: diluteness n0 a^3 < 1e-3 and k0^2 V^(2/3) >> 1.
/// Returns human-readable warnings; never throws for a valid input.
std::vector<std::string> warnings(const LabParameters& params, const DerivedScales& scales);

/// Parameters quoted for the reference sodium experiment: N0 = 1e7, V = 1e-7 cm^3,
/// a = 2.8 nm, Omega = 2pi 1.8 MHz, Delta = 2pi 1 GHz.
LabParameters reference_sodium_parameters();

namespace lab_units {
inline constexpr double cm3_to_m3(double v) { return v * 1e-6; }
inline constexpr double nm_to_m(double a) { return a * 1e-9; }
inline constexpr double two_pi_mhz_to_rad_s(double f) { return 2.0 * constants::pi * f * 1e6; }
inline constexpr double two_pi_ghz_to_rad_s(double f) { return 2.0 * constants::pi * f * 1e9; }
inline constexpr double rad_s_to_hz(double w) { return w / (2.0 * constants::pi); }
inline constexpr double per_m3_to_per_cm3(double n) { return n * 1e-6; }
}  // namespace lab_units

}  // namespace bsq
