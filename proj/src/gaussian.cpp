#include "bsq/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include <Eigen/Eigenvalues>
#include <boost/numeric/odeint.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include "bsq/bogoliubov.hpp"
#include "bsq/errors.hpp"

namespace bsq {

namespace {

constexpr double kRoundOff = 1e-10;

Eigen::Index x_of(std::size_t mode) { return static_cast<Eigen::Index>(2 * mode); }
Eigen::Index p_of(std::size_t mode) { return static_cast<Eigen::Index>(2 * mode + 1); }

Eigen::Matrix2d block(const Eigen::MatrixXd& cov, std::size_t i, std::size_t j) {
  return cov.block<2, 2>(x_of(i), x_of(j));
}

Eigen::Vector2d segment(const Eigen::VectorXd& mean, std::size_t i) { return mean.segment<2>(x_of(i)); }

// Augmented generator [[Omega M, Omega d], [0, 0]] at time t.
Eigen::MatrixXd augmented_generator(const QuadraticForm& h, const Eigen::MatrixXd& omega, double t) {
  Eigen::MatrixXd m;
  Eigen::VectorXd d;
  h.quadrature_generator(t, m, d);
  const Eigen::Index n = m.rows();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n + 1, n + 1);
  a.topLeftCorner(n, n) = omega * m;
  a.topRightCorner(n, 1) = omega * d;
  return a;
}

SymplecticMap split(const Eigen::MatrixXd& y) {
  const Eigen::Index n = y.rows() - 1;
  return {y.topLeftCorner(n, n), y.topRightCorner(n, 1)};
}

}  // namespace

Eigen::MatrixXd symplectic_form(std::size_t mode_count) {
  const auto n = static_cast<Eigen::Index>(2 * mode_count);
  Eigen::MatrixXd omega = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t k = 0; k < mode_count; ++k) {
    omega(x_of(k), p_of(k)) = 1.0;
    omega(p_of(k), x_of(k)) = -1.0;
  }
  return omega;
}

double symplectic_defect(const Eigen::MatrixXd& s) {
  const Eigen::MatrixXd omega = symplectic_form(static_cast<std::size_t>(s.rows() / 2));
  return (s * omega * s.transpose() - omega).cwiseAbs().maxCoeff();
}

double uncertainty_margin(const GaussianState& state) {
  const Eigen::MatrixXd omega = symplectic_form(state.mode_count());
  const Eigen::MatrixXcd h = state.cov.cast<std::complex<double>>() + std::complex<double>(0.0, 0.5) * omega;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

GaussianState vacuum(const ModeRegistry& modes) {
  const auto n = static_cast<Eigen::Index>(2 * modes.size());
  return {modes, Eigen::VectorXd::Zero(n), 0.5 * Eigen::MatrixXd::Identity(n, n)};
}

GaussianState apply(const GaussianState& state, const SymplecticMap& map) {
  GaussianState out{state.modes, map.matrix * state.mean + map.shift, {}};
  out.cov = map.matrix * state.cov * map.matrix.transpose();
  out.cov = 0.5 * (out.cov + out.cov.transpose()).eval();
  return out;
}

Eigen::MatrixXd two_mode_squeeze_matrix(std::size_t mode_count, std::size_t i, std::size_t j, double r,
                                        double phase) {
  if (i == j) throw ModeCollision("two-mode squeezing needs two distinct modes");
  if (i >= mode_count || j >= mode_count) throw RegistryError("two-mode squeezing mode index out of range");
  if (!(r >= 0.0)) throw DomainError("squeezing strength r must be >= 0");
  const auto n = static_cast<Eigen::Index>(2 * mode_count);
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(n, n);
  const double ch = std::cosh(r), sh = std::sinh(r);
  const double c = std::cos(phase), sn = std::sin(phase);
  for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
    s(x_of(a), x_of(a)) = ch;
    s(x_of(a), x_of(b)) = sh * c;
    s(x_of(a), p_of(b)) = sh * sn;
    s(p_of(a), p_of(a)) = ch;
    s(p_of(a), x_of(b)) = sh * sn;
    s(p_of(a), p_of(b)) = -sh * c;
  }
  return s;
}

GaussianState two_mode_squeeze(const GaussianState& state, std::size_t i, std::size_t j, double r,
                               double phase) {
  const Eigen::MatrixXd s = two_mode_squeeze_matrix(state.mode_count(), i, j, r, phase);
  return apply(state, {s, Eigen::VectorXd::Zero(s.rows())});
}

GaussianState displace(const GaussianState& state, std::size_t i, std::complex<double> alpha) {
  state.modes.check_index(i);
  GaussianState out = state;
  out.mean(x_of(i)) += std::numbers::sqrt2 * alpha.real();
  out.mean(p_of(i)) += std::numbers::sqrt2 * alpha.imag();
  return out;
}

GaussianState rotate_phase(const GaussianState& state, double theta) {
  const auto n = static_cast<Eigen::Index>(2 * state.mode_count());
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(n, n);
  const double c = std::cos(theta), sn = std::sin(theta);
  for (std::size_t k = 0; k < state.mode_count(); ++k) {
    s(x_of(k), x_of(k)) = c;
    s(x_of(k), p_of(k)) = sn;
    s(p_of(k), x_of(k)) = -sn;
    s(p_of(k), p_of(k)) = c;
  }
  return apply(state, {s, Eigen::VectorXd::Zero(n)});
}

Eigen::MatrixXd quasiparticle_transform(const ModeRegistry& modes) {
  const auto n = static_cast<Eigen::Index>(2 * modes.size());
  Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t k = 0; k < modes.size(); ++k) {
    const std::size_t bar = modes.partner(k);
    const BogoliubovCoeffs c = coeffs(std::abs(modes.label(k)));
    t(x_of(k), x_of(k)) = c.u;
    t(x_of(k), x_of(bar)) = c.v;
    t(p_of(k), p_of(k)) = c.u;
    t(p_of(k), p_of(bar)) = -c.v;
  }
  return t;
}

GaussianState bogoliubov_ground_state(const ModeRegistry& modes) {
  if (const auto missing = modes.missing_partners(); !missing.empty()) {
    std::ostringstream msg;
    msg << "unpaired mode(s) in registry; missing partners:";
    for (double label : missing) msg << ' ' << label;
    throw RegistryError(msg.str());
  }
  GaussianState state = vacuum(modes);
  for (std::size_t k = 0; k < modes.size(); ++k) {
    if (modes.label(k) <= 0.0) continue;
    const BogoliubovCoeffs c = coeffs(modes.label(k));
    state = two_mode_squeeze(state, k, modes.partner(k), std::asinh(c.v), std::numbers::pi);
  }
  return state;
}

GaussianState to_quasiparticle_basis(const GaussianState& particle_state) {
  const Eigen::MatrixXd t = quasiparticle_transform(particle_state.modes);
  return apply(particle_state, {t, Eigen::VectorXd::Zero(t.rows())});
}

SymplecticMap propagator(const QuadraticForm& h, double t0, double t1, const EvolveOptions& opts) {
  if (!std::isfinite(t0) || !std::isfinite(t1) || t1 < t0) {
    throw DomainError("evolution requires finite times with t1 >= t0");
  }
  const std::size_t modes = h.mode_count();
  const auto n = static_cast<Eigen::Index>(2 * modes);
  const Eigen::MatrixXd omega = symplectic_form(modes);
  if (t1 == t0 || h.empty()) {
    return {Eigen::MatrixXd::Identity(n, n), Eigen::VectorXd::Zero(n)};
  }

  if (!h.time_dependent()) {
    const Eigen::MatrixXd a = augmented_generator(h, omega, 0.0) * (t1 - t0);
    const Eigen::MatrixXd e = a.exp();
    if (!e.allFinite()) throw NumericalError("matrix exponential of the symplectic generator overflowed");
    return split(e);
  }

  namespace odeint = boost::numeric::odeint;
  using State = std::vector<double>;
  const Eigen::Index side = n + 1;
  State y(static_cast<std::size_t>(side * side), 0.0);
  Eigen::Map<Eigen::MatrixXd>(y.data(), side, side).setIdentity();

  auto rhs = [&](const State& in, State& out, double t) {
    out.resize(in.size());
    const Eigen::MatrixXd a = augmented_generator(h, omega, t);
    Eigen::Map<Eigen::MatrixXd>(out.data(), side, side) =
        a * Eigen::Map<const Eigen::MatrixXd>(in.data(), side, side);
  };
  auto stepper = odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(opts.abs_tolerance, opts.rel_tolerance);
  double fastest = 1.0;
  for (const auto& term : h.terms()) fastest = std::max(fastest, std::abs(term.frequency));
  const double dt0 = std::min(t1 - t0, 0.05 / fastest);
  odeint::integrate_adaptive(stepper, rhs, y, t0, t1, dt0);

  const Eigen::MatrixXd result = Eigen::Map<Eigen::MatrixXd>(y.data(), side, side);
  if (!result.allFinite()) throw NumericalError("adaptive integration of the symplectic flow diverged");
  return split(result);
}

GaussianState evolve_quadratic(const GaussianState& state, const QuadraticForm& h, double t, double t0,
                               const EvolveOptions& opts) {
  if (h.mode_count() != state.mode_count()) {
    throw ValidationError("Hamiltonian and state have different mode counts");
  }
  return apply(state, propagator(h, t0, t, opts));
}

double mean_number(const GaussianState& state, std::size_t i) {
  state.modes.check_index(i);
  const Eigen::Vector2d m = segment(state.mean, i);
  const double n = 0.5 * (state.cov(x_of(i), x_of(i)) + state.cov(p_of(i), p_of(i)) - 1.0) + 0.5 * m.squaredNorm();
  if (n < -1e-12) {
    std::ostringstream msg;
    msg << "negative mean occupation " << n << " in mode " << i;
    throw NumericalError(msg.str());
  }
  return std::max(n, 0.0);
}

double number_covariance(const GaussianState& state, std::size_t i, std::size_t j) {
  state.modes.check_index(i);
  state.modes.check_index(j);
  const Eigen::Matrix2d s = block(state.cov, i, j);
  double c = 0.5 * s.squaredNorm() + segment(state.mean, i).dot(s * segment(state.mean, j));
  if (i == j) c -= 0.25;
  return c;
}

double number_diff_variance(const GaussianState& state, std::size_t i, std::size_t j) {
  if (i == j) throw ModeCollision("number-difference variance needs two distinct modes");
  const double var =
      number_covariance(state, i, i) + number_covariance(state, j, j) - 2.0 * number_covariance(state, i, j);
  if (var < 0.0) {
    if (var < -kRoundOff) {
      std::ostringstream msg;
      msg << "number-difference variance " << var << " is negative beyond round-off";
      throw NumericalError(msg.str());
    }
    return 0.0;
  }
  return var;
}

double xi(const GaussianState& state, std::size_t i, std::size_t j) { return pair_moments(state, i, j).xi; }

PairMoments pair_moments(const GaussianState& state, std::size_t i, std::size_t j) {
  PairMoments m;
  m.var_diff = number_diff_variance(state, i, j);
  m.n_i = mean_number(state, i);
  m.n_j = mean_number(state, j);
  const double total = m.n_i + m.n_j;
  if (!(total > 1e-14)) throw UndefinedSqueezing("squeezing parameter undefined: both modes are empty");
  m.xi = m.var_diff / total;
  return m;
}

}  // namespace bsq
