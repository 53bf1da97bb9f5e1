#pragma once

// Effective two-laser coupling of the condensate and the two scattering
// channels built on it:
//   A (pair extraction): delta = omega_k + omega_{k+dk}; squeezes the
//     quasiparticle pair (k + dk, -k).
//   B (direct Bragg): delta = omega_dk; drives quasiparticle +dk linearly
//     out of the condensate.

#include <string>
#include <vector>

#include "bsq/gaussian.hpp"
#include "bsq/modes.hpp"
#include "bsq/quadratic_form.hpp"
#include "bsq/units.hpp"

namespace bsq {

/// Everything the channel Hamiltonians need from the lab: Omega~ and E0 in
/// rad/s, and the condensate population N0 (held constant).
struct LaserDrive {
  double coupling = 0.0;
  double energy_scale = 0.0;
  double n_condensate = 0.0;

  static LaserDrive from(const LabParameters& params, const DerivedScales& scales);
};

struct ChannelASpec {
  double y = 0.0;   // |k| / k0
  double dy = 0.0;  // |dk| / k0

  static ChannelASpec with_default_dy(double y) { return {y, 0.5 * y}; }
  void validate() const;
};

struct ChannelBSpec {
  double dy = 0.0;
  void validate() const;
};

enum class DynamicsModel {
  Perturbative,  // every moment truncated at second order in Omega~
  Rwa,           // exact Gaussian evolution of the resonant term only
  Ladder,        // full coupling on the ladder k + n dk, rotating frame
};

struct SimulationOptions {
  DynamicsModel model = DynamicsModel::Rwa;  // Rwa or Ladder for simulate_*
  int ladder_order = 2;                      // N in n = -N..N, at most 6
};

namespace flag {
inline constexpr const char* depletion = "depletion";              // > 1% of N0 extracted
inline constexpr const char* nonperturbative = "nonperturbative";  // quasiparticle occupation > sinh^2(1)
}  // namespace flag

/// Time series for the two observed modes: k + dk and -k (channel A) or +dk
/// and -dk (channel B).
struct SqueezingResult {
  std::vector<double> times;
  std::vector<double> n_hi;
  std::vector<double> n_lo;
  std::vector<double> var_diff;
  std::vector<double> xi;
  std::vector<std::string> flags;  // ';'-separated flag names, empty when clean
};

/// Laser coupling in the quasiparticle basis, interaction picture with respect
/// to the Bogoliubov Hamiltonian. Contains, for every registered q with q - dy
/// registered (q, q - dy != 0), the hopping and pair terms
///   1/2 Omega~ [u_{q,q-} a+_q a_{q-} - u_{q-} v_q a_{-q} a_{q-} - u_q v_{q-} a+_q a+_{-q-}] + h.c.
/// and, when +-dy are registered, the linear condensate term
///   1/2 Omega~ sqrt(N0) (u_dy - v_dy) (a+_dy + a_{-dy}) + h.c.
/// Each term carries its rotating-frame frequency (delta in rad/s). Throws
/// RegistryError listing absent partner modes.
QuadraticForm quasiparticle_laser_hamiltonian(const ModeRegistry& modes, double dy, double delta,
                                              const LaserDrive& drive);

/// Frequency tolerance that separates resonant from off-resonant terms.
double resonance_tolerance(const LaserDrive& drive);

double channel_a_detuning(const ChannelASpec& spec, const LaserDrive& drive);
double channel_b_detuning(const ChannelBSpec& spec, const LaserDrive& drive);

/// {+(y+dy), -(y+dy), +y, -y}; observed modes are indices 0 and 3.
ModeRegistry channel_a_modes(const ChannelASpec& spec);
/// {+dy, -dy}.
ModeRegistry channel_b_modes(const ChannelBSpec& spec);
/// +-(y + n dy) for n in [-order, order], condensate excluded.
ModeRegistry ladder_modes(const ChannelASpec& spec, int order);

/// Resonant (RWA) coupling for channel A in the quasiparticle basis.
QuadraticForm channel_a_rwa_hamiltonian(const ChannelASpec& spec, const LaserDrive& drive);
QuadraticForm channel_b_rwa_hamiltonian(const ChannelBSpec& spec, const LaserDrive& drive);

/// Particle-basis RWA state at time t (seconds).
GaussianState channel_a_state(const ChannelASpec& spec, const LaserDrive& drive, double t);
GaussianState channel_b_state(const ChannelBSpec& spec, const LaserDrive& drive, double t);

SqueezingResult simulate_channel_a(const ChannelASpec& spec, const LaserDrive& drive,
                                   const std::vector<double>& times, const SimulationOptions& opts = {});
SqueezingResult simulate_channel_b(const ChannelBSpec& spec, const LaserDrive& drive,
                                   const std::vector<double>& times);

struct ChannelAPerturbative {
  double n_hi = 0.0;           // n_{k+dk}
  double n_lo = 0.0;           // n_{-k}
  double var_diff = 0.0;       // second-order Var(n_hi - n_lo)
  double xi = 0.0;             // var_diff / (n_hi + n_lo)
  double xi_asymptotic = 0.0;  // long-time limit of xi at this order
};

ChannelAPerturbative perturbative_channel_a(const ChannelASpec& spec, const LaserDrive& drive, double t);

struct ChannelBPerturbative {
  double n_plus = 0.0;
  double n_minus = 0.0;
  double var_diff = 0.0;
  double xi = 0.0;
};

/// Closed form for the displaced two-mode squeezed vacuum with
/// |alpha(t)| = 1/2 Omega~ sqrt(N0) (u - v) t.
ChannelBPerturbative perturbative_channel_b(const ChannelBSpec& spec, const LaserDrive& drive, double t);

/// Flags raised by the perturbative-validity monitor for a particle-basis state.
std::string validity_flags(const GaussianState& particle_state, const LaserDrive& drive);

enum class Channel { A, B };

struct ScanRequest {
  Channel channel = Channel::A;
  std::vector<double> grid;  // y (channel A) or dy (channel B)
  double dy_ratio = 0.5;     // channel A: dy = dy_ratio * y
  std::vector<double> times;
  DynamicsModel model = DynamicsModel::Perturbative;
  int ladder_order = 2;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct ScanRow {
  double x = 0.0;
  double t = 0.0;
  double n_hi = 0.0;
  double n_lo = 0.0;
  double var_diff = 0.0;
  double xi = 0.0;
  std::string flags;
};

/// One row per (x, t), x-major. Per-point failures become rows with NaN values
/// and an "error:" flag; the scan itself only throws for an empty grid or time list.
std::vector<ScanRow> scan(const ScanRequest& request, const LaserDrive& drive);

const char* to_string(DynamicsModel model);
DynamicsModel parse_model(const std::string& name);

}  // namespace bsq
