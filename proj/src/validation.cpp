#include "bsq/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "bsq/bogoliubov.hpp"
#include "bsq/errors.hpp"

namespace bsq {

namespace {

ModeRegistry scenario_modes(const OracleScenario& s) {
  return s.channel == Channel::A ? channel_a_modes({s.y, s.dy}) : channel_b_modes({s.dy});
}

QuadraticForm scenario_hamiltonian(const OracleScenario& s, const LaserDrive& drive) {
  return s.channel == Channel::A ? channel_a_rwa_hamiltonian({s.y, s.dy}, drive)
                                 : channel_b_rwa_hamiltonian({s.dy}, drive);
}

double relative_gap(double engine, double oracle, double floor) {
  return std::abs(engine - oracle) / std::max(std::abs(oracle), floor);
}

}  // namespace

LaserDrive oracle_drive() { return {1.0, 1.0, 1.0}; }

std::pair<std::size_t, std::size_t> observed_modes(Channel channel) {
  return channel == Channel::A ? std::pair<std::size_t, std::size_t>{0, 3} : std::pair<std::size_t, std::size_t>{0, 1};
}

std::vector<OracleScenario> default_oracle_scenarios(const LaserDrive& drive) {
  std::vector<OracleScenario> out;
  char name[96];
  // Squeeze parameter r = g t with g = 1/2 Omega~ v_{k,k+dk}.
  for (auto [y, dy] : {std::pair{0.5, 1.0}, std::pair{1.0, 0.5}, std::pair{2.0, 1.0}}) {
    const double g = 0.5 * drive.coupling * pair_coeffs(y, y + dy).v12;
    for (double r : {0.0, 0.1, 0.2}) {
      std::snprintf(name, sizeof name, "A y=%g dy=%g r=%g", y, dy, r);
      out.push_back({name, Channel::A, y, dy, r / g});
    }
  }
  // Displacement |alpha| = 1/2 Omega~ sqrt(N0) (u - v) t.
  for (double dy : {0.5, 1.0, 2.0}) {
    const BogoliubovCoeffs c = coeffs(dy);
    const double rate = 0.5 * drive.coupling * std::sqrt(drive.n_condensate) * (c.u - c.v);
    for (double alpha : {0.0, 0.5, 1.0}) {
      std::snprintf(name, sizeof name, "B dy=%g |alpha|=%g", dy, alpha);
      out.push_back({name, Channel::B, 0.0, dy, alpha / rate});
    }
  }
  return out;
}

GaussianState engine_state(const OracleScenario& s, const LaserDrive& drive) {
  return s.channel == Channel::A ? channel_a_state({s.y, s.dy}, drive, s.t) : channel_b_state({s.dy}, drive, s.t);
}

PairMoments engine_moments(const OracleScenario& s, const LaserDrive& drive) {
  const auto [i, j] = observed_modes(s.channel);
  return pair_moments(engine_state(s, drive), i, j);
}

std::vector<int> cutoffs_for(const std::vector<double>& occupations, double tail, int floor) {
  std::vector<int> out;
  for (double n : occupations) {
    const double q = n / (n + 1.0);
    int cut = floor;
    if (q > 0.0) {
      while ((cut + 1.0) * (cut + 1.0) * std::pow(q, cut + 1) > tail) ++cut;
    }
    out.push_back(cut);
  }
  return out;
}

fock::FockMoments oracle_moments(const OracleScenario& s, const LaserDrive& drive, const fock::FockSpace& space) {
  const ModeRegistry modes = scenario_modes(s);
  std::vector<fock::SqueezedPair> pairs;
  for (std::size_t k = 0; k < modes.size(); ++k) {
    if (modes.label(k) > 0.0) pairs.push_back({k, modes.partner(k), -coeffs(modes.label(k)).beta});
  }
  const fock::FockState ground = fock::pair_product_state(space, pairs);
  const fock::OperatorSum h = fock::hamiltonian_terms(scenario_hamiltonian(s, drive), modes, fock::Basis::Quasiparticle);
  const auto [i, j] = observed_modes(s.channel);
  return fock::moments(fock::evolve(ground, h, s.t), i, j);
}

OracleReport run_oracle_check(const std::vector<OracleScenario>& scenarios, const LaserDrive& drive,
                              const EngineEvaluator& engine, const OracleTolerances& tol) {
  if (scenarios.empty()) throw ValidationError("oracle check needs at least one scenario");
  OracleReport report;
  for (const auto& s : scenarios) {
    OracleComparison row;
    row.scenario = s;
    try {
      const GaussianState predicted = engine_state(s, drive);
      std::vector<double> occ;
      for (std::size_t k = 0; k < predicted.mode_count(); ++k) occ.push_back(mean_number(predicted, k));
      const ModeRegistry modes = predicted.modes;
      row.cutoffs = cutoffs_for(occ);
      for (std::size_t k = 0; k < modes.size(); ++k) {
        // the initial squeezed vacuum must also fit
        row.cutoffs[k] = std::max(row.cutoffs[k], fock::required_cutoff(coeffs(std::abs(modes.label(k))).beta));
      }
      const fock::FockSpace space(row.cutoffs);
      row.oracle = oracle_moments(s, drive, space);

      const fock::FockSpace wide = space.doubled();
      if (wide.dimension() > fock::kMaxDimension) {
        throw DimensionError("doubled cutoff space exceeds the dimension cap; convergence unverifiable");
      }
      const fock::FockMoments check = oracle_moments(s, drive, wide);
      row.convergence_change = std::max({std::abs(check.n_i - row.oracle.n_i), std::abs(check.n_j - row.oracle.n_j),
                                         std::abs(check.var_diff - row.oracle.var_diff)});
      row.converged = row.convergence_change < tol.convergence;
      if (!row.converged) row.failure = "cutoff not converged";
    } catch (const Error& e) {
      row.converged = false;
      row.failure = std::string("oracle: ") + e.what();
    }

    if (row.converged) {
      try {
        row.engine = engine(s, drive);
        if (!row.oracle.xi) throw UndefinedSqueezing("oracle populations vanish");
        row.deviation = std::max({relative_gap(row.engine.n_i, row.oracle.n_i, tol.absolute_floor),
                                  relative_gap(row.engine.n_j, row.oracle.n_j, tol.absolute_floor),
                                  relative_gap(row.engine.var_diff, row.oracle.var_diff, tol.absolute_floor),
                                  relative_gap(row.engine.xi, *row.oracle.xi, tol.absolute_floor)});
        if (!std::isfinite(row.deviation)) row.deviation = std::numeric_limits<double>::infinity();
        row.matched = row.deviation <= tol.relative;
        if (!row.matched) row.failure = "engine and oracle disagree";
      } catch (const Error& e) {
        row.failure = std::string("engine: ") + e.what();
      }
    }

    report.all_converged = report.all_converged && row.converged;
    report.all_matched = report.all_matched && row.matched;
    report.max_deviation = std::max(report.max_deviation, row.deviation);
    report.max_convergence_change = std::max(report.max_convergence_change, row.convergence_change);
    report.rows.push_back(std::move(row));
  }
  return report;
}

std::string format_report(const OracleReport& r) {
  std::ostringstream out;
  char line[320];
  for (const auto& row : r.rows) {
    std::string cut;
    for (int c : row.cutoffs) cut += (cut.empty() ? "" : "/") + std::to_string(c);
    std::snprintf(line, sizeof line, "%-26s cutoffs %-12s dev %.3e  conv %.3e  %s", row.scenario.name.c_str(),
                  cut.c_str(), row.deviation, row.convergence_change,
                  row.failure.empty() ? "ok" : row.failure.c_str());
    out << line << '\n';
  }
  std::snprintf(line, sizeof line, "max deviation %.3e, max convergence change %.3e: %s", r.max_deviation,
                r.max_convergence_change,
                r.passed() ? "PASS" : (!r.all_converged ? "FAIL (convergence)" : "FAIL (mismatch)"));
  out << line << '\n';
  return out.str();
}

}  // namespace bsq
