#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Core>

#include "bsq/modes.hpp"
#include "bsq/quadratic_form.hpp"

namespace bsq {

/// Multimode bosonic Gaussian state in quadrature form.
///
/// Ordering is (x_1, p_1, ..., x_M, p_M) with x = (a + a+)/sqrt2,
/// p = (a - a+)/(i sqrt2), so [x, p] = i and the vacuum has cov = I/2.
/// `cov` holds symmetrised second central moments.
struct GaussianState {
  ModeRegistry modes;
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;

  std::size_t mode_count() const { return modes.size(); }
};

/// Linear canonical map r -> matrix * r + shift in the Heisenberg picture.
struct SymplecticMap {
  Eigen::MatrixXd matrix;
  Eigen::VectorXd shift;
};

Eigen::MatrixXd symplectic_form(std::size_t mode_count);
/// max |S Omega S^T - Omega|.
double symplectic_defect(const Eigen::MatrixXd& s);
/// Smallest eigenvalue of cov + (i/2) Omega; >= 0 for a physical state.
double uncertainty_margin(const GaussianState& state);

GaussianState vacuum(const ModeRegistry& modes);
GaussianState apply(const GaussianState& state, const SymplecticMap& map);

/// Heisenberg matrix of exp[r (e^{i phase} a+_i a+_j - h.c.)]:
/// a_i -> cosh r a_i + e^{i phase} sinh r a+_j, and likewise for j.
Eigen::MatrixXd two_mode_squeeze_matrix(std::size_t mode_count, std::size_t i, std::size_t j, double r,
                                        double phase);
GaussianState two_mode_squeeze(const GaussianState& state, std::size_t i, std::size_t j, double r,
                               double phase);

/// Displacement D(alpha): <a_i> -> <a_i> + alpha.
GaussianState displace(const GaussianState& state, std::size_t i, std::complex<double> alpha);

/// a_k -> e^{-i theta} a_k on every mode.
GaussianState rotate_phase(const GaussianState& state, double theta);

/// Particle-basis quadratures -> quasiparticle quadratures, alpha_q = u_q a_q + v_q a+_{-q}.
Eigen::MatrixXd quasiparticle_transform(const ModeRegistry& modes);

/// Quasiparticle vacuum written in the particle basis: every (+y, -y) pair is a
/// two-mode squeezed vacuum with tanh r = beta(|y|) and squeeze phase pi.
GaussianState bogoliubov_ground_state(const ModeRegistry& modes);

/// Re-expresses a particle-basis state in quasiparticle quadratures.
GaussianState to_quasiparticle_basis(const GaussianState& particle_state);

struct EvolveOptions {
  double abs_tolerance = 1e-12;  // adaptive integration, time-dependent generators only
  double rel_tolerance = 1e-12;
};

/// Heisenberg propagator of H between t0 and t1 (t1 >= t0). Time-independent
/// forms use the closed-form matrix exponential; time-dependent ones an
/// adaptive Dormand-Prince integration.
SymplecticMap propagator(const QuadraticForm& hamiltonian, double t0, double t1, const EvolveOptions& opts = {});

GaussianState evolve_quadratic(const GaussianState& state, const QuadraticForm& hamiltonian, double t,
                               double t0 = 0.0, const EvolveOptions& opts = {});

double mean_number(const GaussianState& state, std::size_t i);
/// Cov(n_i, n_j) via Wick's theorem.
double number_covariance(const GaussianState& state, std::size_t i, std::size_t j);
/// Var(n_i - n_j). Round-off down to -1e-10 is clamped to zero; anything more
/// negative raises NumericalError.
double number_diff_variance(const GaussianState& state, std::size_t i, std::size_t j);
/// Var(n_i - n_j) / (n_i + n_j); UndefinedSqueezing when both modes are empty.
double xi(const GaussianState& state, std::size_t i, std::size_t j);

struct PairMoments {
  double n_i = 0.0;
  double n_j = 0.0;
  double var_diff = 0.0;
  double xi = 0.0;
};

PairMoments pair_moments(const GaussianState& state, std::size_t i, std::size_t j);

}  // namespace bsq
