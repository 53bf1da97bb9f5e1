#pragma once

#include "bsq/units.hpp"

namespace bsq {

/// The rescattering cross section is not pinned down by the estimate it feeds,
/// so both common conventions are carried.
enum class CrossSection {
  FourPiA2,   // sigma = 4 pi a^2
  EightPiA2,  // sigma = 8 pi a^2 (identical bosons)
};

struct LossEstimate {
  double beliaev_time = 0.0;  // s
  double rescatter_fraction_8pi = 0.0;
  double rescatter_fraction_4pi = 0.0;
  bool valid_regime = false;  // |k| >> k0, taken as y >= 2
};

/// Inverse Beliaev width m / (8 pi a^2 n0 hbar k) at k = y k0, valid for |k| >> k0.
double beliaev_time(double y, const LabParameters& params, const DerivedScales& scales);

/// sigma n0 V^(1/3) for a cubic volume V. May exceed 1; callers flag that.
double rescatter_fraction(const LabParameters& params, const DerivedScales& scales, CrossSection convention);

LossEstimate estimate_losses(double y, const LabParameters& params, const DerivedScales& scales);

}  // namespace bsq
