#pragma once

// Run configuration read from a flat UTF-8 key-value file:
//
//   # comment
//   atom_mass_kg = 3.8175e-26
//   n0_atoms = 1e7
//   ...
//
// Lab quantities are given in laboratory units (cm^3, nm, 2pi MHz, 2pi GHz)
// and kept that way so that serialize() reproduces the input exactly; use
// LabInputs::to_params() for SI values.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bsq/channels.hpp"
#include "bsq/units.hpp"

namespace bsq {

struct LabInputs {
  double atom_mass_kg = 0.0;
  double n0_atoms = 0.0;
  double volume_cm3 = 0.0;
  double a_nm = 0.0;
  double rabi_2pi_mhz = 0.0;
  double detuning_2pi_ghz = 0.0;

  LabParameters to_params() const;
  bool operator==(const LabInputs&) const = default;
};

/// "min:max:count" with an optional ":lin" (default) or ":log" suffix.
struct GridSpec {
  double min = 0.1;
  double max = 5.0;
  int count = 50;
  bool log = false;

  static GridSpec parse(std::string_view text);
  std::vector<double> points() const;
  std::string str() const;
  bool operator==(const GridSpec&) const = default;
};

struct RunConfig {
  LabInputs lab;
  Channel channel = Channel::A;
  GridSpec grid;
  std::optional<std::vector<double>> times;  // unset: channel default
  double dy_ratio = 0.5;
  DynamicsModel model = DynamicsModel::Perturbative;
  int ladder_order = 2;
  std::string out_dir = ".";
  bool plot = false;

  /// Five log-spaced times: 0.1 ms to 10 ms for channel A (pair growth
  /// rate ~ Omega~), 1 ns to 0.1 us for channel B, whose amplitude grows
  /// sqrt(N0) times faster and saturates xi within microseconds.
  static std::vector<double> default_times(Channel channel);
  std::vector<double> resolved_times() const { return times ? *times : default_times(channel); }
  bool operator==(const RunConfig&) const = default;
};

/// Throws ConfigError (with key and 1-based line) on unknown, duplicate,
/// missing or malformed keys. The six lab keys are required; the rest default.
RunConfig parse_run_config(std::string_view text);
RunConfig load_run_config(const std::filesystem::path& path);

/// Canonical text form; parse_run_config(serialize(c)) == c.
std::string serialize(const RunConfig& config);

/// Comma-separated list of seconds.
std::vector<double> parse_times(std::string_view text);

/// Shortest decimal form that reads back to the same double.
std::string exact_number(double value);

/// Config for the reference sodium experiment.
RunConfig reference_config();

}  // namespace bsq
