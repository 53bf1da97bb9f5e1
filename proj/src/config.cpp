#include "bsq/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "bsq/errors.hpp"

namespace bsq {

namespace {

constexpr const char* kLabKeys[] = {"atom_mass_kg", "n0_atoms",     "volume_cm3",
                                    "a_nm",         "rabi_2pi_mhz", "detuning_2pi_ghz"};
constexpr const char* kOptionalKeys[] = {"channel", "grid", "times", "dy_ratio", "model", "ladder_order", "out_dir", "plot"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view text, const std::string& key, int line) {
  text = trim(text);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw ConfigError("key '" + key + "': '" + std::string(text) + "' is not a finite number", key, line);
  }
  return value;
}

int parse_int(std::string_view text, const std::string& key, int line) {
  text = trim(text);
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError("key '" + key + "': '" + std::string(text) + "' is not an integer", key, line);
  }
  return value;
}

bool is_known(const std::string& key) {
  for (const char* k : kLabKeys) {
    if (key == k) return true;
  }
  for (const char* k : kOptionalKeys) {
    if (key == k) return true;
  }
  return false;
}

}  // namespace

std::string exact_number(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

LabParameters LabInputs::to_params() const {
  LabParameters p;
  p.atom_mass = atom_mass_kg;
  p.n_condensate = n0_atoms;
  p.volume = lab_units::cm3_to_m3(volume_cm3);
  p.scattering_length = lab_units::nm_to_m(a_nm);
  p.rabi_frequency = lab_units::two_pi_mhz_to_rad_s(rabi_2pi_mhz);
  p.detuning = lab_units::two_pi_ghz_to_rad_s(detuning_2pi_ghz);
  return p;
}

GridSpec GridSpec::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = text.find(':', start);
    parts.push_back(trim(text.substr(start, colon == std::string_view::npos ? colon : colon - start)));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() != 3 && parts.size() != 4) {
    throw ConfigError("grid '" + std::string(text) + "' must be min:max:count[:lin|log]", "grid");
  }
  GridSpec g;
  g.min = parse_double(parts[0], "grid", 0);
  g.max = parse_double(parts[1], "grid", 0);
  g.count = parse_int(parts[2], "grid", 0);
  if (parts.size() == 4) {
    if (parts[3] == "log") {
      g.log = true;
    } else if (parts[3] != "lin") {
      throw ConfigError("grid spacing must be 'lin' or 'log'", "grid");
    }
  }
  if (g.count < 1) throw ConfigError("grid count must be >= 1 (empty grid)", "grid");
  if (g.max < g.min) throw ConfigError("grid max must be >= min", "grid");
  if (!(g.min > 0.0)) throw ConfigError("grid values are momenta and must be > 0", "grid");
  return g;
}

std::vector<double> GridSpec::points() const {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = 0; i < count; ++i) {
    const double f = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
    out.push_back(log ? min * std::pow(max / min, f) : min + (max - min) * f);
  }
  return out;
}

std::string GridSpec::str() const {
  return exact_number(min) + ":" + exact_number(max) + ":" + std::to_string(count) + (log ? ":log" : ":lin");
}

std::vector<double> RunConfig::default_times(Channel channel) {
  const double first = channel == Channel::A ? 1e-4 : 1e-9;
  std::vector<double> out;
  for (int k = 0; k < 5; ++k) out.push_back(first * std::pow(10.0, 0.5 * k));
  return out;
}

std::vector<double> parse_times(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    const auto piece = trim(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    const double t = parse_double(piece, "times", 0);
    if (t < 0.0) throw ConfigError("times must be >= 0", "times");
    if (!out.empty() && t < out.back()) throw ConfigError("times must be ascending", "times");
    out.push_back(t);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

RunConfig parse_run_config(std::string_view text) {
  std::map<std::string, std::pair<std::string, int>> entries;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'", {}, line_no);
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (!is_known(key)) {
      throw ConfigError("line " + std::to_string(line_no) + ": unknown key '" + key + "'", key, line_no);
    }
    if (entries.contains(key)) {
      throw ConfigError("line " + std::to_string(line_no) + ": duplicate key '" + key + "'", key, line_no);
    }
    entries.emplace(key, std::pair{value, line_no});
  }

  for (const char* k : kLabKeys) {
    if (!entries.contains(k)) throw ConfigError(std::string("missing required key '") + k + "'", k);
  }

  auto number = [&](const char* key) {
    const auto& [value, line] = entries.at(key);
    return parse_double(value, key, line);
  };
  auto rethrow_at = [&](const char* key, auto&& fn) {
    const int line = entries.at(key).second;
    try {
      fn(entries.at(key).first);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line) + ": " + e.what(), key, line);
    } catch (const Error& e) {
      throw ConfigError("line " + std::to_string(line) + ": " + e.what(), key, line);
    }
  };

  RunConfig c;
  c.lab.atom_mass_kg = number("atom_mass_kg");
  c.lab.n0_atoms = number("n0_atoms");
  c.lab.volume_cm3 = number("volume_cm3");
  c.lab.a_nm = number("a_nm");
  c.lab.rabi_2pi_mhz = number("rabi_2pi_mhz");
  c.lab.detuning_2pi_ghz = number("detuning_2pi_ghz");
  for (const char* k : kLabKeys) {
    if (!(number(k) > 0.0)) {
      throw ConfigError(std::string("key '") + k + "' must be > 0", k, entries.at(k).second);
    }
  }

  if (entries.contains("channel")) {
    rethrow_at("channel", [&](const std::string& v) {
      if (v == "a" || v == "A") {
        c.channel = Channel::A;
      } else if (v == "b" || v == "B") {
        c.channel = Channel::B;
      } else {
        throw ConfigError("channel must be 'a' or 'b'", "channel");
      }
    });
  }
  if (entries.contains("grid")) rethrow_at("grid", [&](const std::string& v) { c.grid = GridSpec::parse(v); });
  if (entries.contains("times")) rethrow_at("times", [&](const std::string& v) { c.times = parse_times(v); });
  if (entries.contains("dy_ratio")) {
    c.dy_ratio = number("dy_ratio");
    if (!(c.dy_ratio > 0.0) || c.dy_ratio == 1.0) {
      throw ConfigError("dy_ratio must be > 0 and != 1", "dy_ratio", entries.at("dy_ratio").second);
    }
  }
  if (entries.contains("model")) rethrow_at("model", [&](const std::string& v) { c.model = parse_model(v); });
  if (entries.contains("ladder_order")) {
    const auto& [v, line] = entries.at("ladder_order");
    c.ladder_order = parse_int(v, "ladder_order", line);
    if (c.ladder_order < 1 || c.ladder_order > 6) throw ConfigError("ladder_order must be in [1, 6]", "ladder_order", line);
  }
  if (entries.contains("out_dir")) c.out_dir = entries.at("out_dir").first;
  if (entries.contains("plot")) {
    rethrow_at("plot", [&](const std::string& v) {
      if (v == "true") {
        c.plot = true;
      } else if (v == "false") {
        c.plot = false;
      } else {
        throw ConfigError("plot must be 'true' or 'false'", "plot");
      }
    });
  }
  return c;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_run_config(buf.str());
}

std::string serialize(const RunConfig& c) {
  std::ostringstream out;
  out << "atom_mass_kg = " << exact_number(c.lab.atom_mass_kg) << '\n'
      << "n0_atoms = " << exact_number(c.lab.n0_atoms) << '\n'
      << "volume_cm3 = " << exact_number(c.lab.volume_cm3) << '\n'
      << "a_nm = " << exact_number(c.lab.a_nm) << '\n'
      << "rabi_2pi_mhz = " << exact_number(c.lab.rabi_2pi_mhz) << '\n'
      << "detuning_2pi_ghz = " << exact_number(c.lab.detuning_2pi_ghz) << '\n'
      << "channel = " << (c.channel == Channel::A ? "a" : "b") << '\n'
      << "grid = " << c.grid.str() << '\n'
      ;
  if (c.times) {
    out << "times = ";
    for (std::size_t i = 0; i < c.times->size(); ++i) out << (i ? "," : "") << exact_number((*c.times)[i]);
    out << '\n';
  }
  out << "dy_ratio = " << exact_number(c.dy_ratio) << '\n'
      << "model = " << to_string(c.model) << '\n'
      << "ladder_order = " << c.ladder_order << '\n'
      << "out_dir = " << c.out_dir << '\n'
      << "plot = " << (c.plot ? "true" : "false") << '\n';
  return out.str();
}

RunConfig reference_config() {
  RunConfig c;
  c.lab.atom_mass_kg = kSodium23MassKg;
  c.lab.n0_atoms = 1e7;
  c.lab.volume_cm3 = 1e-7;
  c.lab.a_nm = 2.8;
  c.lab.rabi_2pi_mhz = 1.8;
  c.lab.detuning_2pi_ghz = 1.0;
  return c;
}

}  // namespace bsq
