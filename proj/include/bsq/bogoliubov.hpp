#pragma once

// Bogoliubov coefficients of the homogeneous weakly interacting gas.
//
// All momenta are dimensionless, y = |k| / k0, and frequencies are in units of
// E0 = hbar k0^2 / 2m. Particle and quasiparticle operators are related by
//   a_k = u_k alpha_k - v_k alpha^dagger_{-k},   v_k / u_k = beta_k.

namespace bsq {

/// Smallest momentum accepted by coeffs(); below it beta loses all precision
/// and the mode is indistinguishable from the condensate.
inline constexpr double kMinMomentum = 1e-8;

struct BogoliubovCoeffs {
  double y = 0.0;
  double beta = 0.0;
  double u = 1.0;
  double v = 0.0;
  double omega_over_e0 = 0.0;
};

struct PairCoeffs {
  double u12 = 1.0;  // u1 u2 + v1 v2
  double v12 = 0.0;  // u1 v2 + v1 u2
};

/// Throws DomainError for y < kMinMomentum (including y <= 0) or non-finite y.
BogoliubovCoeffs coeffs(double y);

/// omega_k / E0 = y sqrt(2 + y^2).
double dispersion(double y);

PairCoeffs pair_coeffs(double y1, double y2);

}  // namespace bsq
