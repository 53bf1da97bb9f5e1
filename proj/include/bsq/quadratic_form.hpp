#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "bsq/modes.hpp"

namespace bsq {

using complex = std::complex<double>;

enum class TermKind {
  Hopping,  // a^dagger_i a_j
  Pair,     // a^dagger_i a^dagger_j
  Linear,   // a^dagger_i
};

/// One Hermitian contribution  coeff * e^{i frequency t} * op + h.c.
struct QuadraticTerm {
  TermKind kind = TermKind::Hopping;
  std::size_t i = 0;
  std::size_t j = 0;  // unused for Linear
  complex coeff{};
  double frequency = 0.0;  // rad/s

  bool operator==(const QuadraticTerm&) const = default;
};

/// Quadratic-plus-linear bosonic Hamiltonian (hbar = 1, rad/s) stored as a list
/// of terms, each implicitly accompanied by its Hermitian conjugate, so the
/// operator is Hermitian by construction. Constant energy offsets are dropped.
class QuadraticForm {
 public:
  explicit QuadraticForm(std::size_t mode_count = 0) : mode_count_(mode_count) {}

  /// H = sum_ij A_ij a+_i a_j + 1/2 sum_ij (B_ij a+_i a+_j + h.c.) + sum_i (f_i a+_i + h.c.)
  /// Throws ValidationError unless A is Hermitian and B symmetric.
  static QuadraticForm from_matrices(const Eigen::MatrixXcd& hopping, const Eigen::MatrixXcd& pairing,
                                     const Eigen::VectorXcd& linear);

  void add_hopping(std::size_t i, std::size_t j, complex coeff, double frequency = 0.0);
  void add_pair(std::size_t i, std::size_t j, complex coeff, double frequency = 0.0);
  void add_linear(std::size_t i, complex coeff, double frequency = 0.0);
  /// omega a^dagger_i a_i
  void add_number(std::size_t i, double omega) { add_hopping(i, i, 0.5 * omega); }

  std::size_t mode_count() const { return mode_count_; }
  std::span<const QuadraticTerm> terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  bool time_dependent() const;

  /// Rotating-wave selection: keeps terms with |frequency| <= tolerance, with
  /// their frequency set to exactly zero.
  QuadraticForm resonant(double tolerance) const;

  /// Canonical form: Pair(i,j) ~ Pair(j,i), Hopping(i,j) ~ conj Hopping(j,i),
  /// equal terms merged and exact zeros dropped. The operator is unchanged.
  QuadraticForm simplified() const;

  /// Quadrature representation at time t: H = 1/2 r^T M r + d^T r with
  /// r = (x_1, p_1, ..., x_M, p_M), x = (a + a+)/sqrt2, p = (a - a+)/(i sqrt2).
  void quadrature_generator(double t, Eigen::MatrixXd& m, Eigen::VectorXd& d) const;

 private:
  void check(std::size_t i) const;

  std::size_t mode_count_;
  std::vector<QuadraticTerm> terms_;
};

/// Rewrites a Hamiltonian written in quasiparticle operators into particle
/// operators, substituting alpha_q = u_q a_q + v_q a+_{-q} with (u, v) taken
/// from the Bogoliubov coefficients at |label|. Every mode needs its partner.
QuadraticForm to_particle_basis(const QuadraticForm& quasiparticle_form, const ModeRegistry& modes);

}  // namespace bsq
