#include "bsq/losses.hpp"

#include <cmath>

#include "bsq/errors.hpp"

namespace bsq {

double beliaev_time(double y, const LabParameters& p, const DerivedScales& s) {
  if (!std::isfinite(y) || !(y > 0.0)) throw DomainError("Beliaev time needs y > 0");
  validate(p);
  const double k = y * s.healing_momentum;
  const double a = p.scattering_length;
  return p.atom_mass / (8.0 * constants::pi * a * a * s.density * constants::hbar * k);
}

double rescatter_fraction(const LabParameters& p, const DerivedScales& s, CrossSection convention) {
  const double a = p.scattering_length;
  const double prefactor = convention == CrossSection::EightPiA2 ? 8.0 : 4.0;
  const double sigma = prefactor * constants::pi * a * a;
  return sigma * s.density * std::cbrt(p.volume);
}

LossEstimate estimate_losses(double y, const LabParameters& p, const DerivedScales& s) {
  LossEstimate e;
  e.beliaev_time = beliaev_time(y, p, s);
  e.rescatter_fraction_8pi = rescatter_fraction(p, s, CrossSection::EightPiA2);
  e.rescatter_fraction_4pi = rescatter_fraction(p, s, CrossSection::FourPiA2);
  e.valid_regime = y >= 2.0;
  return e;
}

}  // namespace bsq
