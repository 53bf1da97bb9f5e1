#pragma once

// Engine-versus-Fock cross-check. Each scenario is evolved twice from the same
// quasiparticle Hamiltonian: once through the Gaussian engine and once by
// brute force in a truncated Fock space, with the cutoff verified by doubling.

#include <functional>
#include <string>
#include <vector>

#include "bsq/channels.hpp"
#include "bsq/fock_oracle.hpp"
#include "bsq/gaussian.hpp"

namespace bsq {

struct OracleScenario {
  std::string name;
  Channel channel = Channel::A;
  double y = 0.0;   // channel A only
  double dy = 0.0;
  double t = 0.0;
};

/// Unit drive (Omega~ = E0 = N0 = 1) so that amplitudes are set by t alone.
LaserDrive oracle_drive();

/// Channel A at (y, dy) in {(0.5, 1), (1, 0.5), (2, 1)} and channel B at
/// dy in {0.5, 1, 2}, each at t = 0 and two small-amplitude times.
std::vector<OracleScenario> default_oracle_scenarios(const LaserDrive& drive = oracle_drive());

using EngineEvaluator = std::function<PairMoments(const OracleScenario&, const LaserDrive&)>;

/// Engine state via channel_a_state / channel_b_state, Wick moments of the
/// observed pair.
PairMoments engine_moments(const OracleScenario& scenario, const LaserDrive& drive);

/// Particle-basis engine state for the scenario (all registered modes).
GaussianState engine_state(const OracleScenario& scenario, const LaserDrive& drive);

/// Observed pair of the scenario's registry.
std::pair<std::size_t, std::size_t> observed_modes(Channel channel);

/// Per-mode cutoffs from predicted occupations: smallest N with
/// (N+1)^2 q^(N+1) <= tail, q = n / (n + 1), and at least `floor`.
std::vector<int> cutoffs_for(const std::vector<double>& occupations, double tail = 1e-9, int floor = 2);

/// Oracle moments on a given Fock space.
fock::FockMoments oracle_moments(const OracleScenario& scenario, const LaserDrive& drive, const fock::FockSpace& space);

struct OracleComparison {
  OracleScenario scenario;
  PairMoments engine;
  fock::FockMoments oracle;
  std::vector<int> cutoffs;
  double deviation = 0.0;           // max relative difference over n_i, n_j, var, xi
  double convergence_change = 0.0;  // max |change| of the oracle moments on doubling
  bool converged = false;
  bool matched = false;
  std::string failure;  // empty on success
};

struct OracleReport {
  std::vector<OracleComparison> rows;
  double max_deviation = 0.0;
  double max_convergence_change = 0.0;
  bool all_converged = true;
  bool all_matched = true;
  bool passed() const { return all_converged && all_matched && !rows.empty(); }
};

struct OracleTolerances {
  double relative = 1e-6;
  double absolute_floor = 1e-12;
  double convergence = 1e-8;
};

/// Throws ValidationError for an empty scenario list. Convergence failures
/// (including a doubled space above the dimension cap) are reported separately
/// from engine/oracle mismatches.
OracleReport run_oracle_check(const std::vector<OracleScenario>& scenarios, const LaserDrive& drive,
                              const EngineEvaluator& engine = engine_moments, const OracleTolerances& tol = {});

std::string format_report(const OracleReport& report);

}  // namespace bsq
