#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bsq/cli.hpp"
#include "bsq/config.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = bsq::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("bsq_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("derive on the reference configuration") {
    const Run r = run({"derive"});
    CHECK(r.code == 0);
    CHECK(r.out.find("energy_scale_hz = 1546.96") != std::string::npos);
    CHECK(r.out.find("beliaev_time_s = 0.00346") != std::string::npos);
  }

  TEST_CASE("missing key exits 2 and names the key") {
    const fs::path dir = scratch("missing");
    write(dir / "c.cfg", "atom_mass_kg = 3.8e-26\nn0_atoms = 1e7\nvolume_cm3 = 1e-7\na_nm = 2.8\nrabi_2pi_mhz = 1.8\n");
    const Run r = run({"derive", "--config", (dir / "c.cfg").string()});
    CHECK(r.code == 2);
    CHECK(r.err.find("detuning_2pi_ghz") != std::string::npos);
    CHECK(run({"fig1", "--grid", "1:2:0"}).code == 2);
    CHECK(run({"fig1", "--times", "x"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"fig1", "--bogus"}).code == 2);
    CHECK(run({"fig1", "--help"}).code == 0);
  }

  TEST_CASE("re-ingested config reproduces the derived report") {
    const fs::path dir = scratch("roundtrip");
    write(dir / "c.cfg", bsq::serialize(bsq::reference_config()));
    const Run a = run({"derive", "--config", (dir / "c.cfg").string()});
    const Run b = run({"derive"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    write(dir / "d.cfg", bsq::serialize(bsq::load_run_config(dir / "c.cfg")));
    CHECK(slurp(dir / "d.cfg") == slurp(dir / "c.cfg"));
  }

  TEST_CASE("fig1 is deterministic and writes the schema") {
    const fs::path dir = scratch("fig1");
    CHECK(run({"fig1", "--out", (dir / "a").string(), "--plot"}).code == 0);
    const std::string a = slurp(dir / "a" / "fig1.csv");
    CHECK(run({"fig1", "--out", (dir / "a").string(), "--plot"}).code == 0);
    CHECK(a == slurp(dir / "a" / "fig1.csv"));
    // the hash covers the resolved config, so a different output directory changes only that line
    CHECK(run({"fig1", "--out", (dir / "b").string(), "--plot"}).code == 0);
    const std::string b = slurp(dir / "b" / "fig1.csv");
    CHECK(a.substr(a.find('\n')) == b.substr(b.find('\n')));
    CHECK(a.substr(0, a.find('\n')) != b.substr(0, b.find('\n')));
    CHECK(fs::exists(dir / "a" / "fig1.svg"));
    CHECK(a.find("# config-hash: ") == 0);
    CHECK(a.find("\ny,t_seconds,n_hi,n_lo,var_diff,xi,flags\n") != std::string::npos);
    CHECK(a.find('\r') == std::string::npos);
    // 50 grid points x 5 times + 2 header lines
    CHECK(std::count(a.begin(), a.end(), '\n') == 252);
  }

  TEST_CASE("fig2 and scan") {
    const fs::path dir = scratch("fig2");
    CHECK(run({"fig2", "--out", dir.string(), "--grid", "0.2:3:5", "--times", "0,1e-3"}).code == 0);
    const std::string csv = slurp(dir / "fig2.csv");
    CHECK(csv.find("\n0.2,0,") != std::string::npos);
    CHECK(run({"scan", "--out", dir.string(), "--channel", "b", "--grid", "0.2:3:5", "--times", "0,1e-3"}).code == 0);
    // same resolved config => same hash and bytes
    CHECK(slurp(dir / "scan.csv") == csv);
    CHECK(run({"scan", "--out", dir.string(), "--channel", "c"}).code == 2);
    CHECK(run({"scan", "--out", dir.string(), "--model", "exact"}).code == 2);
  }
}
