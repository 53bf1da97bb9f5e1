#include "bsq/fock_oracle.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCore>

#include "bsq/bogoliubov.hpp"
#include "bsq/errors.hpp"

namespace bsq::fock {

namespace {

using cplx = std::complex<double>;

constexpr double kNormDrift = 1e-10;

}  // namespace

FockSpace::FockSpace(std::size_t mode_count, int n_max) : FockSpace(std::vector<int>(mode_count, n_max)) {}

FockSpace::FockSpace(std::vector<int> cutoffs) : cutoffs_(std::move(cutoffs)) {
  if (cutoffs_.empty() || cutoffs_.size() > kMaxModes) {
    throw DimensionError("Fock space supports 1 to 4 modes");
  }
  strides_.assign(cutoffs_.size(), 1);
  double dim = 1.0;
  for (int c : cutoffs_) {
    if (c < 0) throw DimensionError("cutoff must be >= 0");
    dim *= static_cast<double>(c + 1);
  }
  if (dim > static_cast<double>(kMaxDimension)) {
    std::ostringstream msg;
    msg << "Fock space dimension " << dim << " exceeds the limit of " << kMaxDimension;
    throw DimensionError(msg.str());
  }
  dimension_ = static_cast<std::size_t>(dim);
  for (std::size_t m = cutoffs_.size(); m-- > 1;) {
    strides_[m - 1] = strides_[m] * static_cast<std::size_t>(cutoffs_[m] + 1);
  }
}

std::size_t FockSpace::index(std::span<const int> occ) const {
  if (occ.size() != cutoffs_.size()) throw DimensionError("occupation tuple has the wrong length");
  std::size_t idx = 0;
  for (std::size_t m = 0; m < occ.size(); ++m) {
    if (occ[m] < 0 || occ[m] > cutoffs_[m]) throw DimensionError("occupation outside the truncated space");
    idx += static_cast<std::size_t>(occ[m]) * strides_[m];
  }
  return idx;
}

std::vector<int> FockSpace::occupations(std::size_t index) const {
  std::vector<int> occ(cutoffs_.size());
  for (std::size_t m = 0; m < occ.size(); ++m) occ[m] = occupation(index, m);
  return occ;
}

FockSpace FockSpace::doubled() const {
  std::vector<int> c = cutoffs_;
  for (int& n : c) n = std::max(1, 2 * n);
  return FockSpace(std::move(c));
}

OperatorSum annihilator(std::size_t mode, cplx coeff) { return {{coeff, {{mode, false}}}}; }
OperatorSum creator(std::size_t mode, cplx coeff) { return {{coeff, {{mode, true}}}}; }

OperatorSum operator+(OperatorSum a, const OperatorSum& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

OperatorSum operator*(const OperatorSum& a, const OperatorSum& b) {
  OperatorSum out;
  out.reserve(a.size() * b.size());
  for (const auto& ta : a) {
    for (const auto& tb : b) {
      OperatorTerm t{ta.coeff * tb.coeff, ta.ops};
      t.ops.insert(t.ops.end(), tb.ops.begin(), tb.ops.end());
      if (t.coeff != cplx{}) out.push_back(std::move(t));
    }
  }
  return out;
}

OperatorSum scaled(OperatorSum a, cplx factor) {
  for (auto& t : a) t.coeff *= factor;
  return a;
}

OperatorSum adjoint(const OperatorSum& a) {
  OperatorSum out;
  out.reserve(a.size());
  for (const auto& t : a) {
    OperatorTerm d{std::conj(t.coeff), {}};
    for (auto it = t.ops.rbegin(); it != t.ops.rend(); ++it) d.ops.push_back({it->mode, !it->creation});
    out.push_back(std::move(d));
  }
  return out;
}

SparseOperator assemble(const FockSpace& space, const OperatorSum& op) {
  for (const auto& term : op) {
    for (const auto& l : term.ops) {
      if (l.mode >= space.mode_count()) throw DimensionError("operator acts on a mode outside the Fock space");
    }
  }
  const std::size_t dim = space.dimension();
  std::vector<Eigen::Triplet<cplx, std::ptrdiff_t>> triplets;
  triplets.reserve(dim * op.size());
  std::vector<int> occ(space.mode_count());
  for (std::size_t col = 0; col < dim; ++col) {
    for (std::size_t m = 0; m < occ.size(); ++m) occ[m] = space.occupation(col, m);
    for (const auto& term : op) {
      std::vector<int> cur = occ;
      double amp = 1.0;
      bool alive = true;
      for (auto it = term.ops.rbegin(); it != term.ops.rend() && alive; ++it) {
        int& n = cur[it->mode];
        if (it->creation) {
          if (n >= space.cutoff(it->mode)) {
            alive = false;
          } else {
            ++n;
            amp *= std::sqrt(static_cast<double>(n));
          }
        } else {
          if (n == 0) {
            alive = false;
          } else {
            amp *= std::sqrt(static_cast<double>(n));
            --n;
          }
        }
      }
      if (!alive) continue;
      triplets.emplace_back(static_cast<std::ptrdiff_t>(space.index(cur)), static_cast<std::ptrdiff_t>(col),
                            term.coeff * amp);
    }
  }
  SparseOperator m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  m.setFromTriplets(triplets.begin(), triplets.end());
  m.prune(cplx{});
  return m;
}

OperatorSum hamiltonian_terms(const QuadraticForm& form, const ModeRegistry& modes, Basis basis) {
  if (form.time_dependent()) throw ValidationError("the Fock oracle only evolves time-independent Hamiltonians");
  if (form.mode_count() != modes.size()) throw ValidationError("form and registry disagree on the mode count");

  // Annihilation operator of mode k in the chosen basis, written in particle operators.
  auto lower = [&](std::size_t k) -> OperatorSum {
    if (basis == Basis::Particle) return annihilator(k);
    const BogoliubovCoeffs c = coeffs(std::abs(modes.label(k)));
    return annihilator(k, c.u) + creator(modes.partner(k), c.v);
  };
  auto raise = [&](std::size_t k) { return adjoint(lower(k)); };

  OperatorSum h;
  for (const auto& t : form.terms()) {
    OperatorSum op;
    switch (t.kind) {
      case TermKind::Hopping: op = raise(t.i) * lower(t.j); break;
      case TermKind::Pair: op = raise(t.i) * raise(t.j); break;
      case TermKind::Linear: op = raise(t.i); break;
    }
    const OperatorSum term = scaled(op, t.coeff);
    h = h + term;
    h = h + adjoint(term);
  }
  return h;
}

double FockState::truncation_tail() const {
  double tail = 0.0;
  for (std::size_t idx = 0; idx < space.dimension(); ++idx) {
    for (std::size_t m = 0; m < space.mode_count(); ++m) {
      if (space.occupation(idx, m) == space.cutoff(m)) {
        tail += std::norm(amplitudes(static_cast<Eigen::Index>(idx)));
        break;
      }
    }
  }
  return tail;
}

FockState vacuum_state(const FockSpace& space) {
  FockState s{space, Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(space.dimension()))};
  s.amplitudes(0) = 1.0;
  return s;
}

int required_cutoff(double ratio, double tail_tolerance) {
  const double r2 = ratio * ratio;
  if (r2 == 0.0) return 0;
  if (r2 >= 1.0) throw DomainError("squeezing ratio must satisfy |ratio| < 1");
  // r2^(n+1) <= tol
  return std::max(0, static_cast<int>(std::ceil(std::log(tail_tolerance) / std::log(r2))) - 1);
}

FockState pair_product_state(const FockSpace& space, const std::vector<SqueezedPair>& pairs,
                             double tail_tolerance) {
  std::vector<bool> used(space.mode_count(), false);
  for (const auto& p : pairs) {
    if (p.i == p.j) throw ModeCollision("a squeezed pair needs two distinct modes");
    if (p.i >= space.mode_count() || p.j >= space.mode_count()) throw DimensionError("pair mode out of range");
    if (used[p.i] || used[p.j]) throw ModeCollision("a mode belongs to more than one squeezed pair");
    used[p.i] = used[p.j] = true;
    if (!(std::abs(p.ratio) < 1.0)) throw DomainError("squeezing ratio must satisfy |ratio| < 1");
    const int cut = std::min(space.cutoff(p.i), space.cutoff(p.j));
    const double tail = std::pow(p.ratio * p.ratio, cut + 1);
    if (tail > tail_tolerance) {
      const int need = required_cutoff(p.ratio, tail_tolerance);
      std::ostringstream msg;
      msg << "cutoff " << cut << " leaves a tail of " << tail << " for ratio " << p.ratio << "; n_max >= " << need
          << " required";
      throw CutoffError(msg.str(), need);
    }
  }

  FockState s{space, Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(space.dimension()))};
  // Enumerate the product of pair ladders |n_1, n_1>|n_2, n_2>..., other modes empty.
  std::vector<int> occ(space.mode_count(), 0);
  std::vector<int> level(pairs.size(), 0);
  while (true) {
    std::complex<double> amp = 1.0;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      occ[pairs[p].i] = occ[pairs[p].j] = level[p];
      amp *= std::pow(pairs[p].ratio, level[p]);
    }
    s.amplitudes(static_cast<Eigen::Index>(space.index(occ))) = amp;
    std::size_t p = 0;
    for (; p < pairs.size(); ++p) {
      if (++level[p] <= std::min(space.cutoff(pairs[p].i), space.cutoff(pairs[p].j))) break;
      level[p] = 0;
    }
    if (p == pairs.size()) break;
  }
  s.amplitudes.normalize();
  return s;
}

FockState two_mode_squeezed_vacuum(const FockSpace& space, std::size_t i, std::size_t j, double ratio,
                                   double tail_tolerance) {
  return pair_product_state(space, {{i, j, ratio}}, tail_tolerance);
}

namespace {

Eigen::VectorXcd taylor_propagate(const SparseOperator& h, Eigen::VectorXcd psi, double t) {
  constexpr int kMaxTerms = 60;
  constexpr double kTermTolerance = 1e-17;
  const double norm0 = psi.norm();
  double remaining = t;
  double dt = t;
  int halvings = 0;
  while (remaining > 0.0) {
    dt = std::min(dt, remaining);
    Eigen::VectorXcd sum = psi;
    Eigen::VectorXcd term = psi;
    bool converged = false;
    double largest = 1.0;
    for (int k = 1; k <= kMaxTerms; ++k) {
      term = (h * term) * std::complex<double>(0.0, -dt / k);
      const double size = term.norm() / norm0;
      largest = std::max(largest, size);
      sum += term;
      if (size < kTermTolerance) {
        converged = true;
        break;
      }
    }
    if (!converged || largest > 4.0) {
      dt *= 0.5;
      if (++halvings > 200) throw NumericalError("Taylor propagation failed to converge");
      continue;
    }
    psi = std::move(sum);
    remaining -= dt;
    dt *= 1.5;
  }
  return psi;
}

}  // namespace

FockState evolve(const FockState& state, const OperatorSum& hamiltonian, double t) {
  if (!std::isfinite(t) || t < 0.0) throw DomainError("evolution time must be finite and >= 0");
  const double norm0 = state.norm();
  if (t == 0.0 || hamiltonian.empty()) return state;

  const SparseOperator h = assemble(state.space, hamiltonian);
  FockState out{state.space, {}};
  if (state.space.dimension() <= kDenseLimit) {
    const Eigen::MatrixXcd dense = Eigen::MatrixXcd(h);
    if ((dense - dense.adjoint()).cwiseAbs().maxCoeff() > 1e-9 * std::max(1.0, dense.cwiseAbs().maxCoeff())) {
      throw ValidationError("truncated Hamiltonian is not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense);
    const Eigen::VectorXcd phases =
        (solver.eigenvalues().cast<std::complex<double>>() * std::complex<double>(0.0, -t)).array().exp().matrix();
    out.amplitudes = solver.eigenvectors() *
                     (phases.asDiagonal() * (solver.eigenvectors().adjoint() * state.amplitudes)).eval();
  } else {
    out.amplitudes = taylor_propagate(h, state.amplitudes, t);
  }
  if (std::abs(out.norm() - norm0) > kNormDrift) {
    std::ostringstream msg;
    msg << "norm drifted by " << out.norm() - norm0 << " during evolution";
    throw NumericalError(msg.str());
  }
  return out;
}

FockMoments moments(const FockState& state, std::size_t i, std::size_t j) {
  const FockSpace& space = state.space;
  if (i >= space.mode_count() || j >= space.mode_count()) throw DimensionError("moment mode out of range");
  double total = 0.0, ni = 0.0, nj = 0.0, d1 = 0.0, d2 = 0.0;
  for (std::size_t idx = 0; idx < space.dimension(); ++idx) {
    const double p = std::norm(state.amplitudes(static_cast<Eigen::Index>(idx)));
    if (p == 0.0) continue;
    const double a = space.occupation(idx, i);
    const double b = space.occupation(idx, j);
    total += p;
    ni += p * a;
    nj += p * b;
    d1 += p * (a - b);
    d2 += p * (a - b) * (a - b);
  }
  FockMoments m;
  m.n_i = ni / total;
  m.n_j = nj / total;
  const double mean_d = d1 / total;
  m.var_diff = std::max(0.0, d2 / total - mean_d * mean_d);
  if (m.n_i + m.n_j > 0.0) m.xi = m.var_diff / (m.n_i + m.n_j);
  return m;
}

}  // namespace bsq::fock
