#pragma once

// Brute-force reference for small Gaussian problems: states are complex
// amplitude vectors over a truncated occupation-number basis of at most four
// modes, Hamiltonians are assembled from explicit ladder-operator products.
// Nothing here goes through the symplectic machinery of gaussian.hpp.

#include <complex>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

#include "bsq/modes.hpp"
#include "bsq/quadratic_form.hpp"

namespace bsq::fock {

inline constexpr std::size_t kMaxModes = 4;
inline constexpr std::size_t kMaxDimension = 1'000'000;
/// Above this dimension evolve() switches from dense diagonalisation to
/// short-step Taylor propagation.
inline constexpr std::size_t kDenseLimit = 400;

/// Occupation basis with n_i in [0, cutoff_i], enumerated lexicographically
/// (mode 0 most significant).
class FockSpace {
 public:
  FockSpace(std::size_t mode_count, int n_max);
  explicit FockSpace(std::vector<int> cutoffs);

  std::size_t mode_count() const { return cutoffs_.size(); }
  int cutoff(std::size_t mode) const { return cutoffs_.at(mode); }
  std::span<const int> cutoffs() const { return cutoffs_; }
  std::size_t dimension() const { return dimension_; }

  std::size_t index(std::span<const int> occupations) const;
  std::vector<int> occupations(std::size_t index) const;
  int occupation(std::size_t index, std::size_t mode) const {
    return static_cast<int>((index / strides_[mode]) % static_cast<std::size_t>(cutoffs_[mode] + 1));
  }
  std::size_t stride(std::size_t mode) const { return strides_[mode]; }

  /// Same modes with every cutoff doubled.
  FockSpace doubled() const;

  bool operator==(const FockSpace&) const = default;

 private:
  std::vector<int> cutoffs_;
  std::vector<std::size_t> strides_;
  std::size_t dimension_ = 0;
};

struct LadderOp {
  std::size_t mode = 0;
  bool creation = false;
};

/// coeff * ops[0] ops[1] ... ops[n-1] (rightmost acts first).
struct OperatorTerm {
  std::complex<double> coeff{1.0, 0.0};
  std::vector<LadderOp> ops;
};

using OperatorSum = std::vector<OperatorTerm>;

OperatorSum annihilator(std::size_t mode, std::complex<double> coeff = 1.0);
OperatorSum creator(std::size_t mode, std::complex<double> coeff = 1.0);
OperatorSum operator+(OperatorSum a, const OperatorSum& b);
OperatorSum operator*(const OperatorSum& a, const OperatorSum& b);
OperatorSum scaled(OperatorSum a, std::complex<double> factor);
OperatorSum adjoint(const OperatorSum& a);

using SparseOperator = Eigen::SparseMatrix<std::complex<double>, Eigen::RowMajor>;

/// Matrix of the operator on the truncated space; components pushed above a
/// cutoff are discarded.
SparseOperator assemble(const FockSpace& space, const OperatorSum& op);

enum class Basis { Particle, Quasiparticle };

/// Hamiltonian as an operator sum. With Basis::Quasiparticle each alpha_q is
/// expanded as u_q a_q + v_q a+_{-q} using the registry labels, so the result
/// acts on the particle Fock space. Only time-independent forms are accepted.
OperatorSum hamiltonian_terms(const QuadraticForm& form, const ModeRegistry& modes, Basis basis);

struct FockState {
  FockSpace space;
  Eigen::VectorXcd amplitudes;

  double norm() const { return amplitudes.norm(); }
  /// Probability of any mode sitting at its cutoff.
  double truncation_tail() const;
};

FockState vacuum_state(const FockSpace& space);

struct SqueezedPair {
  std::size_t i = 0;
  std::size_t j = 0;
  double ratio = 0.0;  // amplitude of |n, n> is proportional to ratio^n
};

/// Smallest n_max whose discarded geometric tail |ratio|^(2(n_max+1)) is <= tolerance.
int required_cutoff(double ratio, double tail_tolerance = 1e-10);

/// Product of two-mode squeezed vacua, all other modes empty. Throws
/// DomainError for |ratio| >= 1 and CutoffError (naming the required n_max)
/// when the truncated tail exceeds tail_tolerance.
FockState pair_product_state(const FockSpace& space, const std::vector<SqueezedPair>& pairs,
                             double tail_tolerance = 1e-10);
FockState two_mode_squeezed_vacuum(const FockSpace& space, std::size_t i, std::size_t j, double ratio,
                                   double tail_tolerance = 1e-10);

/// exp(-i H t) |state>. Dense eigen-decomposition up to kDenseLimit, adaptive
/// Taylor stepping beyond. Throws NumericalError if the norm drifts by more
/// than 1e-10.
FockState evolve(const FockState& state, const OperatorSum& hamiltonian, double t);

struct FockMoments {
  double n_i = 0.0;
  double n_j = 0.0;
  double var_diff = 0.0;
  std::optional<double> xi;  // empty when n_i + n_j == 0
};

FockMoments moments(const FockState& state, std::size_t i, std::size_t j);

}  // namespace bsq::fock
