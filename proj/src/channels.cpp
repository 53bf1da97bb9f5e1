#include "bsq/channels.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

#include "bsq/bogoliubov.hpp"
#include "bsq/errors.hpp"

namespace bsq {

namespace {

constexpr int kMaxLadderOrder = 6;

void validate_times(const std::vector<double>& times) {
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!std::isfinite(times[i]) || times[i] < 0.0) throw DomainError("times must be finite and >= 0");
    if (i > 0 && times[i] < times[i - 1]) throw DomainError("times must be in ascending order");
  }
}

double omega(double label, const LaserDrive& drive) { return drive.energy_scale * dispersion(std::abs(label)); }

void append_flag(std::string& flags, const char* name) {
  if (!flags.empty()) flags += ';';
  flags += name;
}

std::string sanitize(std::string text) {
  for (char& c : text) {
    if (c == ',' || c == '\n' || c == '\r' || c == '"') c = ' ';
  }
  return text;
}

void record(SqueezingResult& out, double t, const PairMoments& m, std::string flags) {
  out.times.push_back(t);
  out.n_hi.push_back(m.n_i);
  out.n_lo.push_back(m.n_j);
  out.var_diff.push_back(m.var_diff);
  out.xi.push_back(m.xi);
  out.flags.push_back(std::move(flags));
}

}  // namespace

LaserDrive LaserDrive::from(const LabParameters& params, const DerivedScales& scales) {
  return {scales.effective_coupling, scales.energy_scale, params.n_condensate};
}

void ChannelASpec::validate() const {
  if (!std::isfinite(y) || y < kMinMomentum) throw DomainError("channel A needs y > 0");
  if (!std::isfinite(dy) || dy < kMinMomentum) throw DomainError("channel A needs dy > 0");
  if (same_label(y, dy)) throw DomainError("channel A needs k != +-dk (mode k would couple to the condensate)");
}

void ChannelBSpec::validate() const {
  if (!std::isfinite(dy) || dy < kMinMomentum) throw DomainError("channel B needs dy > 0");
}

double resonance_tolerance(const LaserDrive& drive) { return 1e-9 * drive.energy_scale; }

QuadraticForm quasiparticle_laser_hamiltonian(const ModeRegistry& modes, double dy, double delta,
                                              const LaserDrive& drive) {
  if (const auto missing = modes.missing_partners(); !missing.empty()) {
    std::ostringstream msg;
    msg << "registry is missing partner modes:";
    for (double label : missing) msg << ' ' << label;
    throw RegistryError(msg.str());
  }
  for (double label : modes.labels()) {
    if (std::abs(label) < kMinMomentum) throw RegistryError("the condensate mode k = 0 cannot be registered");
  }
  if (!(dy > 0.0)) throw DomainError("momentum transfer dy must be > 0");

  const double half = 0.5 * drive.coupling;
  QuadraticForm h(modes.size());
  for (std::size_t iq = 0; iq < modes.size(); ++iq) {
    const double q = modes.label(iq);
    const double qm = q - dy;
    if (same_label(qm, 0.0)) continue;  // q = dy couples to the condensate: linear term below
    const BogoliubovCoeffs cq = coeffs(std::abs(q));
    const BogoliubovCoeffs cqm = coeffs(std::abs(qm));
    const double wq = omega(q, drive), wqm = omega(qm, drive);

    if (auto iqm = modes.find(qm)) {
      const double u_pair = cq.u * cqm.u + cq.v * cqm.v;
      h.add_hopping(iq, *iqm, half * u_pair, wq - wqm - delta);
      // -u_{q-} v_q a_{-q} a_{q-} e^{-i delta t}, written through its adjoint
      h.add_pair(modes.partner(iq), *iqm, -half * cqm.u * cq.v, delta + wq + wqm);
    }
    if (auto iqm_bar = modes.find(-qm)) {
      h.add_pair(iq, *iqm_bar, -half * cq.u * cqm.v, wq + wqm - delta);
    }
  }

  const auto plus = modes.find(dy);
  const auto minus = modes.find(-dy);
  if (plus && minus) {
    const BogoliubovCoeffs c = coeffs(dy);
    const double w = omega(dy, drive);
    const double strength = half * std::sqrt(drive.n_condensate) * (c.u - c.v);
    h.add_linear(*plus, strength, w - delta);
    h.add_linear(*minus, strength, delta + w);
  }
  return h;
}

double channel_a_detuning(const ChannelASpec& spec, const LaserDrive& drive) {
  return omega(spec.y, drive) + omega(spec.y + spec.dy, drive);
}

double channel_b_detuning(const ChannelBSpec& spec, const LaserDrive& drive) { return omega(spec.dy, drive); }

ModeRegistry channel_a_modes(const ChannelASpec& spec) {
  spec.validate();
  const double hi = spec.y + spec.dy;
  return ModeRegistry({hi, -hi, spec.y, -spec.y});
}

ModeRegistry channel_b_modes(const ChannelBSpec& spec) {
  spec.validate();
  return ModeRegistry({spec.dy, -spec.dy});
}

ModeRegistry ladder_modes(const ChannelASpec& spec, int order) {
  spec.validate();
  if (order < 1 || order > kMaxLadderOrder) throw DomainError("ladder order must be in [1, 6]");
  std::vector<double> labels;
  auto add = [&](double label) {
    if (std::abs(label) < kMinMomentum || same_label(label, 0.0)) return;
    for (double existing : labels) {
      if (same_label(existing, label)) return;
    }
    labels.push_back(label);
  };
  // Observed modes first so that indices 0 and 3 match channel_a_modes.
  add(spec.y + spec.dy);
  add(-(spec.y + spec.dy));
  add(spec.y);
  add(-spec.y);
  for (int n = -order; n <= order; ++n) {
    const double q = spec.y + n * spec.dy;
    add(q);
    add(-q);
  }
  return ModeRegistry(std::move(labels));
}

QuadraticForm channel_a_rwa_hamiltonian(const ChannelASpec& spec, const LaserDrive& drive) {
  const ModeRegistry modes = channel_a_modes(spec);
  const double delta = channel_a_detuning(spec, drive);
  return quasiparticle_laser_hamiltonian(modes, spec.dy, delta, drive)
      .resonant(resonance_tolerance(drive) * std::max(1.0, delta / drive.energy_scale))
      .simplified();
}

QuadraticForm channel_b_rwa_hamiltonian(const ChannelBSpec& spec, const LaserDrive& drive) {
  const ModeRegistry modes = channel_b_modes(spec);
  const double delta = channel_b_detuning(spec, drive);
  return quasiparticle_laser_hamiltonian(modes, spec.dy, delta, drive)
      .resonant(resonance_tolerance(drive) * std::max(1.0, delta / drive.energy_scale))
      .simplified();
}

GaussianState channel_a_state(const ChannelASpec& spec, const LaserDrive& drive, double t) {
  const ModeRegistry modes = channel_a_modes(spec);
  const QuadraticForm h = to_particle_basis(channel_a_rwa_hamiltonian(spec, drive), modes);
  return evolve_quadratic(bogoliubov_ground_state(modes), h, t);
}

GaussianState channel_b_state(const ChannelBSpec& spec, const LaserDrive& drive, double t) {
  const ModeRegistry modes = channel_b_modes(spec);
  const QuadraticForm h = to_particle_basis(channel_b_rwa_hamiltonian(spec, drive), modes);
  return evolve_quadratic(bogoliubov_ground_state(modes), h, t);
}

std::string validity_flags(const GaussianState& state, const LaserDrive& drive) {
  std::string flags;
  double extracted = 0.0;
  for (std::size_t k = 0; k < state.mode_count(); ++k) extracted += mean_number(state, k);
  if (extracted > 0.01 * drive.n_condensate) append_flag(flags, flag::depletion);

  const GaussianState qp = to_quasiparticle_basis(state);
  const double limit = std::pow(std::sinh(1.0), 2);
  for (std::size_t k = 0; k < qp.mode_count(); ++k) {
    if (mean_number(qp, k) > limit) {
      append_flag(flags, flag::nonperturbative);
      break;
    }
  }
  return flags;
}

SqueezingResult simulate_channel_a(const ChannelASpec& spec, const LaserDrive& drive,
                                   const std::vector<double>& times, const SimulationOptions& opts) {
  validate_times(times);
  SqueezingResult out;

  if (opts.model == DynamicsModel::Ladder) {
    const ModeRegistry modes = ladder_modes(spec, opts.ladder_order);
    const double delta = channel_a_detuning(spec, drive);
    const QuadraticForm h = to_particle_basis(quasiparticle_laser_hamiltonian(modes, spec.dy, delta, drive), modes);
    GaussianState state = bogoliubov_ground_state(modes);
    double now = 0.0;
    for (double t : times) {
      state = apply(state, propagator(h, now, t));
      now = t;
      record(out, t, pair_moments(state, 0, 3), validity_flags(state, drive));
    }
    return out;
  }
  if (opts.model != DynamicsModel::Rwa) {
    throw ValidationError("simulate_channel_a supports the rwa and ladder models");
  }

  const ModeRegistry modes = channel_a_modes(spec);
  const QuadraticForm h = to_particle_basis(channel_a_rwa_hamiltonian(spec, drive), modes);
  const GaussianState ground = bogoliubov_ground_state(modes);
  for (double t : times) {
    const GaussianState state = evolve_quadratic(ground, h, t);
    record(out, t, pair_moments(state, 0, 3), validity_flags(state, drive));
  }
  return out;
}

SqueezingResult simulate_channel_b(const ChannelBSpec& spec, const LaserDrive& drive,
                                   const std::vector<double>& times) {
  validate_times(times);
  const ModeRegistry modes = channel_b_modes(spec);
  const QuadraticForm h = to_particle_basis(channel_b_rwa_hamiltonian(spec, drive), modes);
  const GaussianState ground = bogoliubov_ground_state(modes);
  SqueezingResult out;
  for (double t : times) {
    const GaussianState state = evolve_quadratic(ground, h, t);
    record(out, t, pair_moments(state, 0, 1), validity_flags(state, drive));
  }
  return out;
}

ChannelAPerturbative perturbative_channel_a(const ChannelASpec& spec, const LaserDrive& drive, double t) {
  spec.validate();
  validate_times({t});
  const BogoliubovCoeffs lo = coeffs(spec.y);
  const BogoliubovCoeffs hi = coeffs(spec.y + spec.dy);
  const double v_pair = pair_coeffs(spec.y, spec.y + spec.dy).v12;
  const double u_hi2 = hi.u * hi.u, v_hi2 = hi.v * hi.v;
  const double u_lo2 = lo.u * lo.u, v_lo2 = lo.v * lo.v;

  // Quasiparticle pair occupation to second order: (1/2 Omega~ v_{k,k+} t)^2.
  const double pumped = 0.25 * std::pow(drive.coupling * t, 2) * v_pair * v_pair;
  const double vacuum_noise = u_hi2 * v_hi2 + u_lo2 * v_lo2;
  const double imbalance = u_hi2 - u_lo2;

  ChannelAPerturbative r;
  r.n_hi = v_hi2 + pumped * u_hi2;
  r.n_lo = v_lo2 + pumped * u_lo2;
  r.var_diff = vacuum_noise + pumped * (imbalance * imbalance + vacuum_noise);
  r.xi = r.var_diff / (r.n_hi + r.n_lo);
  r.xi_asymptotic =
      ((u_hi2 + v_hi2) * u_hi2 + (u_lo2 + v_lo2) * u_lo2 - 2.0 * u_lo2 * u_hi2) / (u_hi2 + u_lo2);
  return r;
}

ChannelBPerturbative perturbative_channel_b(const ChannelBSpec& spec, const LaserDrive& drive, double t) {
  spec.validate();
  validate_times({t});
  const BogoliubovCoeffs c = coeffs(spec.dy);
  const double amplitude = 0.5 * drive.coupling * std::sqrt(drive.n_condensate) * (c.u - c.v) * t;
  const double a2 = amplitude * amplitude;
  ChannelBPerturbative r;
  r.n_plus = c.v * c.v + c.u * c.u * a2;
  r.n_minus = c.v * c.v + c.v * c.v * a2;
  r.var_diff = a2;
  r.xi = r.var_diff / (r.n_plus + r.n_minus);
  return r;
}

const char* to_string(DynamicsModel model) {
  switch (model) {
    case DynamicsModel::Perturbative: return "perturbative";
    case DynamicsModel::Rwa: return "rwa";
    case DynamicsModel::Ladder: return "ladder";
  }
  return "?";
}

DynamicsModel parse_model(const std::string& name) {
  if (name == "perturbative") return DynamicsModel::Perturbative;
  if (name == "rwa") return DynamicsModel::Rwa;
  if (name == "ladder") return DynamicsModel::Ladder;
  throw ValidationError("unknown dynamics model '" + name + "' (expected perturbative, rwa or ladder)");
}

namespace {

std::vector<ScanRow> scan_point(const ScanRequest& req, const LaserDrive& drive, double x) {
  std::vector<ScanRow> rows;
  rows.reserve(req.times.size());
  auto push = [&](double t, double n_hi, double n_lo, double var, double xi_value, std::string flags) {
    rows.push_back({x, t, n_hi, n_lo, var, xi_value, std::move(flags)});
  };

  if (req.channel == Channel::A) {
    const ChannelASpec spec{x, req.dy_ratio * x};
    if (req.model == DynamicsModel::Perturbative) {
      const double v_pair = pair_coeffs(spec.y, spec.y + spec.dy).v12;
      const double limit = std::pow(std::sinh(1.0), 2);
      for (double t : req.times) {
        const ChannelAPerturbative p = perturbative_channel_a(spec, drive, t);
        std::string flags;
        if (p.n_hi + p.n_lo > 0.01 * drive.n_condensate) append_flag(flags, flag::depletion);
        if (0.25 * std::pow(drive.coupling * t * v_pair, 2) > limit) append_flag(flags, flag::nonperturbative);
        push(t, p.n_hi, p.n_lo, p.var_diff, p.xi, std::move(flags));
      }
    } else {
      const SqueezingResult r = simulate_channel_a(spec, drive, req.times, {req.model, req.ladder_order});
      for (std::size_t k = 0; k < r.times.size(); ++k) {
        push(r.times[k], r.n_hi[k], r.n_lo[k], r.var_diff[k], r.xi[k], r.flags[k]);
      }
    }
  } else {
    const ChannelBSpec spec{x};
    // The direct-Bragg state is linear in Omega~, so every model coincides.
    const SqueezingResult r = simulate_channel_b(spec, drive, req.times);
    for (std::size_t k = 0; k < r.times.size(); ++k) {
      push(r.times[k], r.n_hi[k], r.n_lo[k], r.var_diff[k], r.xi[k], r.flags[k]);
    }
  }
  return rows;
}

}  // namespace

std::vector<ScanRow> scan(const ScanRequest& req, const LaserDrive& drive) {
  if (req.grid.empty()) throw ValidationError("scan grid is empty");
  if (req.times.empty()) throw ValidationError("scan time list is empty");

  std::vector<std::vector<ScanRow>> blocks(req.grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < req.grid.size(); i = next++) {
      const double x = req.grid[i];
      try {
        blocks[i] = scan_point(req, drive, x);
      } catch (const Error& e) {
        const double nan = std::numeric_limits<double>::quiet_NaN();
        blocks[i].clear();
        for (double t : req.times) blocks[i].push_back({x, t, nan, nan, nan, nan, "error: " + sanitize(e.what())});
      }
    }
  };

  unsigned threads = req.threads ? req.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(req.grid.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
  }

  std::vector<ScanRow> rows;
  rows.reserve(req.grid.size() * req.times.size());
  for (auto& block : blocks) {
    for (auto& row : block) rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace bsq
