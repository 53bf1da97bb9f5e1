#include "bsq/bogoliubov.hpp"

#include <cmath>
#include <sstream>

#include "bsq/errors.hpp"

namespace bsq {

namespace {

void check_momentum(double y) {
  if (!std::isfinite(y) || y < kMinMomentum) {
    std::ostringstream msg;
    msg << "momentum y = " << y << " outside domain (y >= " << kMinMomentum
        << " required; k = 0 is the condensate mode)";
    throw DomainError(msg.str());
  }
}

}  // namespace

double dispersion(double y) {
  check_momentum(y);
  return y * std::sqrt(2.0 + y * y);
}

BogoliubovCoeffs coeffs(double y) {
  check_momentum(y);
  const double root = y * std::sqrt(2.0 + y * y);
  // beta = 1 + y^2 - y sqrt(2 + y^2), rationalised so that neither the large-y
  // tail nor 1 - beta^2 near y -> 0 suffers cancellation.
  const double denom = 1.0 + y * y + root;
  const double beta = 1.0 / denom;
  const double one_minus_beta = (y * y + root) / denom;
  const double one_minus_beta2 = one_minus_beta * (1.0 + beta);

  BogoliubovCoeffs c;
  c.y = y;
  c.beta = beta;
  c.u = 1.0 / std::sqrt(one_minus_beta2);
  c.v = beta * c.u;
  c.omega_over_e0 = root;
  return c;
}

PairCoeffs pair_coeffs(double y1, double y2) {
  const BogoliubovCoeffs c1 = coeffs(y1);
  const BogoliubovCoeffs c2 = coeffs(y2);
  return {c1.u * c2.u + c1.v * c2.v, c1.u * c2.v + c1.v * c2.u};
}

}  // namespace bsq
