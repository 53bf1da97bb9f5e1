#include <doctest.h>

#include <string>

#include "bsq/config.hpp"
#include "bsq/errors.hpp"
#include "bsq/report.hpp"

using namespace bsq;

namespace {

const char* kLab =
    "# reference sodium experiment\n"
    "atom_mass_kg = 3.8175458e-26\n"
    "n0_atoms = 1e7\n"
    "volume_cm3 = 1e-7   # 100 um^3\n"
    "a_nm = 2.8\n"
    "rabi_2pi_mhz = 1.8\n"
    "detuning_2pi_ghz = 1\n";

ConfigError parse_error(const std::string& text) {
  try {
    parse_run_config(text);
  } catch (const ConfigError& e) {
    return e;
  }
  FAIL("expected ConfigError");
  return ConfigError("");
}

}  // namespace

TEST_SUITE("config") {
  TEST_CASE("lab keys and defaults") {
    const RunConfig c = parse_run_config(kLab);
    CHECK(c.lab.n0_atoms == 1e7);
    CHECK(c.lab.detuning_2pi_ghz == 1.0);
    CHECK(c.channel == Channel::A);
    CHECK(c.model == DynamicsModel::Perturbative);
    CHECK_FALSE(c.times.has_value());
    const auto ta = c.resolved_times();
    CHECK(ta.size() == 5);
    CHECK(ta.front() == doctest::Approx(1e-4));
    CHECK(ta.back() == doctest::Approx(1e-2));
    RunConfig b = c;
    b.channel = Channel::B;
    CHECK(b.resolved_times().front() == doctest::Approx(1e-9));
    CHECK(b.resolved_times().back() == doctest::Approx(1e-7));
    const DerivedScales s = derive(c.lab.to_params());
    CHECK(lab_units::per_m3_to_per_cm3(s.density) == doctest::Approx(1e14).epsilon(1e-12));
  }

  TEST_CASE("scan keys") {
    const RunConfig c = parse_run_config(std::string(kLab) +
                                         "channel = b\ngrid = 0.2:4:7:log\ntimes = 0, 1e-3,2e-3\n"
                                         "model = rwa\nladder_order = 3\nout_dir = out/x\nplot = true\n");
    CHECK(c.channel == Channel::B);
    CHECK(c.grid.log);
    CHECK(c.grid.points().size() == 7);
    CHECK(c.grid.points().front() == doctest::Approx(0.2));
    CHECK(c.grid.points().back() == doctest::Approx(4.0));
    CHECK(c.times == std::vector<double>{0.0, 1e-3, 2e-3});
    CHECK(c.resolved_times() == *c.times);
    CHECK(c.model == DynamicsModel::Rwa);
    CHECK(c.ladder_order == 3);
    CHECK(c.out_dir == "out/x");
    CHECK(c.plot);
  }

  TEST_CASE("round trip is an identity") {
    RunConfig c = parse_run_config(std::string(kLab) + "grid = 0.1:5:50:lin\n");
    c.dy_ratio = 0.1 + 0.2;
    const RunConfig no_times = parse_run_config(serialize(c));
    CHECK(no_times == c);
    CHECK_FALSE(no_times.times.has_value());
    c.times = std::vector<double>{0.1 + 0.2, 1.0 / 3.0};
    const std::string text = serialize(c);
    const RunConfig back = parse_run_config(text);
    CHECK(back == c);
    CHECK(serialize(back) == text);
    CHECK(config_hash(back) == config_hash(c));
    c.lab.a_nm = std::nextafter(c.lab.a_nm, 3.0);
    CHECK(config_hash(c) != config_hash(back));
  }

  TEST_CASE("diagnostics name the key and line") {
    const std::string lab(kLab);
    {
      const auto e = parse_error("atom_mass_kg = 1\n");
      CHECK(e.key() == "n0_atoms");
      CHECK(std::string(e.what()).find("n0_atoms") != std::string::npos);
    }
    {
      const auto e = parse_error(lab + "colour = blue\n");
      CHECK(e.key() == "colour");
      CHECK(e.line() == 8);
    }
    {
      const auto e = parse_error(lab + "a_nm = 3\n");
      CHECK(e.key() == "a_nm");
    }
    CHECK(parse_error(lab + "grid = 1:2\n").key() == "grid");
    CHECK(parse_error(lab + "grid = 1:2:0\n").key() == "grid");
    CHECK(parse_error(lab + "times = 1e-3,abc\n").key() == "times");
    CHECK(parse_error(lab + "times = 2,1\n").key() == "times");
    CHECK(parse_error(lab + "model = exact\n").key() == "model");
    CHECK(parse_error(lab + "plot = yes\n").key() == "plot");
    CHECK(parse_error(lab + "dy_ratio = 1\n").key() == "dy_ratio");
    CHECK(parse_error("just some words\n").line() == 1);
    std::string negative(kLab);
    negative.replace(negative.find("a_nm = 2.8"), 10, "a_nm = -2.8");
    CHECK(parse_error(negative).key() == "a_nm");
  }
}

TEST_SUITE("report") {
  TEST_CASE("csv formatting") {
    CHECK(csv_number(0.1) == "0.1");
    CHECK(csv_number(1.0 / 3.0) == "0.333333333333");
    CHECK(csv_number(6.02214076e23) == "6.02214076e+23");
    CHECK(csv_number(std::nan("")) == "nan");
    const std::vector<ScanRow> rows{{2.0, 0.01, 60.0, 60.5, 0.79, 0.0066, "nonperturbative"}};
    const std::string csv = scan_csv(rows, "abc");
    CHECK(csv == "# config-hash: abc\ny,t_seconds,n_hi,n_lo,var_diff,xi,flags\n2,0.01,60,60.5,0.79,0.0066,nonperturbative\n");
    CHECK(scan_csv({}, "abc") == "# config-hash: abc\ny,t_seconds,n_hi,n_lo,var_diff,xi,flags\n");
  }

  TEST_CASE("fnv1a reference vectors") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("foobar") == 0x85944171f73967e8ULL);
  }

  TEST_CASE("derive report") {
    const std::string text = derive_report(reference_sodium_parameters(), 2.0);
    CHECK(text.find("[derived]") != std::string::npos);
    CHECK(text.find("rescatter_fraction_4pi = 0.457") != std::string::npos);
    CHECK(text.find("8 pi a^2") != std::string::npos);
    CHECK(text.find("4 pi a^2") != std::string::npos);
    CHECK(text.find("energy_scale_hz = 1546.9") != std::string::npos);
  }

  TEST_CASE("svg") {
    const std::vector<ScanRow> rows{{1, 0.1, 1, 1, 1, 0.5, ""}, {2, 0.1, 1, 1, 1, 0.2, ""}};
    const std::string svg = svg_plot(rows, "t", "x");
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("polyline") != std::string::npos);
  }
}
