#include "bsq/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "bsq/config.hpp"
#include "bsq/errors.hpp"
#include "bsq/report.hpp"
#include "bsq/validation.hpp"

namespace bsq::cli {

namespace {

struct Overrides {
  std::string config_path;
  std::string out_dir;
  bool plot = false;
  std::string times;
  std::string grid;
  std::string model;
  std::string channel;
  double y = 2.0;  // derive: momentum for the loss estimate
};

RunConfig resolve(const Overrides& o) {
  RunConfig c = o.config_path.empty() ? reference_config() : load_run_config(o.config_path);
  if (!o.out_dir.empty()) c.out_dir = o.out_dir;
  if (o.plot) c.plot = true;
  if (!o.times.empty()) c.times = parse_times(o.times);
  if (!o.grid.empty()) c.grid = GridSpec::parse(o.grid);
  if (!o.model.empty()) {
    try {
      c.model = parse_model(o.model);
    } catch (const ValidationError& e) {
      throw ConfigError(e.what(), "model");
    }
  }
  if (!o.channel.empty()) {
    if (o.channel == "a" || o.channel == "A") {
      c.channel = Channel::A;
    } else if (o.channel == "b" || o.channel == "B") {
      c.channel = Channel::B;
    } else {
      throw ConfigError("channel must be 'a' or 'b'", "channel");
    }
  }
  validate(c.lab.to_params());
  return c;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write '" + path.string() + "'", "out_dir");
  f << text;
}

int run_scan(const RunConfig& c, const std::string& stem, std::ostream& out) {
  const LabParameters params = c.lab.to_params();
  const LaserDrive drive = LaserDrive::from(params, derive(params));
  ScanRequest req;
  req.channel = c.channel;
  req.grid = c.grid.points();
  req.dy_ratio = c.dy_ratio;
  req.times = c.resolved_times();
  req.model = c.model;
  req.ladder_order = c.ladder_order;
  const std::vector<ScanRow> rows = scan(req, drive);

  const std::filesystem::path dir(c.out_dir);
  const auto csv_path = dir / (stem + ".csv");
  write_file(csv_path, scan_csv(rows, config_hash(c)));
  out << csv_path.string() << '\n';
  if (c.plot) {
    const auto svg_path = dir / (stem + ".svg");
    const bool a = c.channel == Channel::A;
    write_file(svg_path, svg_plot(rows, a ? "pair extraction (k+dk, -k)" : "direct Bragg (+dk, -dk)",
                                  a ? "|k| / k0" : "|dk| / k0"));
    out << svg_path.string() << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relative number squeezing of condensate excitations by stimulated light scattering", "bsq"};
  app.require_subcommand(1);
  Overrides o;

  auto common = [&](CLI::App* sub, bool scans) {
    sub->add_option("--config", o.config_path, "key = value run configuration")->check(CLI::ExistingFile);
    sub->add_option("--out", o.out_dir, "output directory (overrides out_dir)");
    if (scans) {
      sub->add_flag("--plot", o.plot, "also write an SVG plot");
      sub->add_option("--times", o.times, "comma-separated times in seconds");
      sub->add_option("--grid", o.grid, "min:max:count[:lin|log]");
      sub->add_option("--model", o.model, "perturbative, rwa or ladder");
    }
  };
  auto* derive_cmd = app.add_subcommand("derive", "derived scales and loss estimates");
  common(derive_cmd, false);
  derive_cmd->add_option("--y", o.y, "|k|/k0 for the loss estimate")->capture_default_str();
  auto* fig1 = app.add_subcommand("fig1", "channel A scan, dk = k/2");
  common(fig1, true);
  auto* fig2 = app.add_subcommand("fig2", "channel B scan over dk");
  common(fig2, true);
  auto* scan_cmd = app.add_subcommand("scan", "scan of the configured channel");
  common(scan_cmd, true);
  scan_cmd->add_option("--channel", o.channel, "a or b");
  auto* oracle = app.add_subcommand("oracle-check", "Gaussian engine against brute-force Fock evolution");
  common(oracle, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (derive_cmd->parsed()) {
      const RunConfig c = resolve(o);
      const std::string text = derive_report(c.lab.to_params(), o.y);
      out << text;
      if (!o.out_dir.empty()) write_file(std::filesystem::path(c.out_dir) / "derive.txt", text);
      return kExitOk;
    }
    if (fig1->parsed()) {
      RunConfig c = resolve(o);
      c.channel = Channel::A;
      c.dy_ratio = 0.5;
      return run_scan(c, "fig1", out);
    }
    if (fig2->parsed()) {
      RunConfig c = resolve(o);
      c.channel = Channel::B;
      return run_scan(c, "fig2", out);
    }
    if (scan_cmd->parsed()) {
      const RunConfig c = resolve(o);
      return run_scan(c, "scan", out);
    }
    if (oracle->parsed()) {
      if (!o.config_path.empty()) resolve(o);  // validate only; the oracle uses a unit drive
      const OracleReport report = run_oracle_check(default_oracle_scenarios(), oracle_drive());
      out << format_report(report);
      return report.passed() ? kExitOk : kExitNumerical;
    }
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const InvalidParameter& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace bsq::cli
