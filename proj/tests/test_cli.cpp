#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pipeflow/config.hpp"
#include "pipeflow/io.hpp"
#include "pipeflow/validate.hpp"

namespace fs = std::filesystem;
using namespace pipeflow;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_cli(const std::string& args) {
  const char* bin = std::getenv("PIPEFLOW_BIN");
  REQUIRE(bin != nullptr);
  const std::string cmd = std::string(bin) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WEXITSTATUS(status);
}

fs::path temp_dir() {
  const fs::path dir =
      fs::temp_directory_path() / ("pipeflow_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("parse_number accepts decimals and fractions") {
  CHECK(parse_number("2.5") == 2.5);
  CHECK(parse_number("1e-3") == 1e-3);
  CHECK(parse_number("1/150") == 1.0 / 150.0);
  CHECK(parse_number("-3/4") == -0.75);
  CHECK_THROWS_AS(parse_number("abc"), std::invalid_argument);
  CHECK_THROWS_AS(parse_number("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_number("1.5x"), std::invalid_argument);
}

TEST_CASE("presets expand to the published parameter sets") {
  const ExperimentConfig e1 = preset_config("experiment1");
  REQUIRE(e1.shock.has_value());
  CHECK(e1.shock->m_G_L == 2.0);
  CHECK(e1.shock->v_G_L == 1.5);
  CHECK(e1.shock->m_G_R == 2.5);
  CHECK(e1.shock->m_L_L == 3.0);
  CHECK(e1.shock->v_L_L == 1.0);
  CHECK(e1.shock->m_L_prime == 3.25);
  CHECK(e1.shock->m_L_R == 3.0);
  CHECK(e1.params.C_G == 1.0);
  CHECK(e1.params.rho_L == 1.0);

  const ExperimentConfig e2 = preset_config("experiment2");
  REQUIRE(e2.rarefaction.has_value());
  CHECK(e2.rarefaction->m_G_L == 0.4);
  CHECK(e2.rarefaction->v_G_L == 1.5);
  CHECK(e2.rarefaction->m_G_R == 0.2963);
  CHECK(e2.rarefaction->m_L_prime == 0.5);
  CHECK(e2.rarefaction->v_L_prime == 1.0);
  CHECK(e2.rarefaction->m_L_L == 0.7);
  CHECK(e2.rarefaction->m_L_R == 0.7);

  CHECK_THROWS_AS(preset_config("experiment3"), std::invalid_argument);
}

TEST_CASE("apply_key handles scheme, boundary, dt/cfl exclusivity, and unknown keys") {
  ExperimentConfig cfg;
  apply_key(cfg, "scheme", "nt");
  CHECK(cfg.scheme == LiquidScheme::NT);
  apply_key(cfg, "boundary", "periodic");
  CHECK(cfg.boundary == BoundaryKind::Periodic);
  apply_key(cfg, "cfl", "0.45");
  CHECK(cfg.cfl == 0.45);
  CHECK(cfg.fixed_dt == 0.0);
  apply_key(cfg, "dt", "1/150");
  CHECK(cfg.fixed_dt == 1.0 / 150.0);
  CHECK(cfg.cfl == 0.0);
  CHECK_THROWS_AS(apply_key(cfg, "nonsense", "1"), std::invalid_argument);
  CHECK_THROWS_AS(apply_key(cfg, "scheme", "upwind"), std::invalid_argument);
}

TEST_CASE("explicit Riemann states accept velocities and store momenta") {
  ExperimentConfig cfg;
  apply_key(cfg, "left.m_G", "2");
  apply_key(cfg, "left.v_G", "1.5");
  apply_key(cfg, "right.m_L", "3");
  apply_key(cfg, "right.v_L", "0.25");
  REQUIRE(cfg.explicit_init.has_value());
  CHECK(cfg.explicit_init->left.gas.q == 3.0);
  CHECK(cfg.explicit_init->right.liquid.q == 0.75);
}

TEST_CASE("config dump round-trips") {
  ExperimentConfig cfg = preset_config("experiment2");
  cfg.scheme = LiquidScheme::NT;
  cfg.n = 128;
  cfg.cfl = 0.45;
  cfg.fixed_dt = 0.0;

  std::ostringstream first;
  dump_config(cfg, first);

  const fs::path path = temp_dir() / "roundtrip.cfg";
  {
    std::ofstream out(path);
    out << first.str();
  }
  ExperimentConfig reloaded;
  apply_config_file(reloaded, path.string());
  std::ostringstream second;
  dump_config(reloaded, second);
  CHECK(first.str() == second.str());
}

TEST_CASE("config files support comments and report bad lines") {
  const fs::path path = temp_dir() / "commented.cfg";
  {
    std::ofstream out(path);
    out << "# full line comment\n\n";
    out << "n = 32   # trailing comment\n";
    out << "scheme = nt\n";
  }
  ExperimentConfig cfg;
  apply_config_file(cfg, path.string());
  CHECK(cfg.n == 32);
  CHECK(cfg.scheme == LiquidScheme::NT);

  const fs::path bad = temp_dir() / "bad.cfg";
  {
    std::ofstream out(bad);
    out << "just a word\n";
  }
  ExperimentConfig cfg2;
  CHECK_THROWS_AS(apply_config_file(cfg2, bad.string()), std::invalid_argument);
}

TEST_CASE("exact subcommand writes the chain and exits 0") {
  const fs::path dir = temp_dir() / "exact1";
  REQUIRE(run_cli("exact --preset experiment1 --t 1 --samples 200 --out " +
                  dir.string()) == 0);
  const std::string chain = slurp(dir / "solution.txt");
  CHECK(chain.find("1.27639320225002") != std::string::npos);   // v_G^R
  CHECK(chain.find("0.381966011250105") != std::string::npos);  // s
  CHECK(slurp(dir / "exact_profile.csv").substr(0, 20) == "x,m_G,v_G,m_L,v_L\n-5");
}

TEST_CASE("exact subcommand reports a construction failure with exit code 2") {
  const fs::path dir = temp_dir() / "degenerate";
  const fs::path cfg = dir / "zero_jump.cfg";
  fs::create_directories(dir);
  {
    std::ofstream out(cfg);
    out << "preset = experiment1\n";
    out << "shock.m_G_R = 2\n";  // equal to m_G_L: no lambda1 shock
  }
  CHECK(run_cli("exact --config " + cfg.string() + " --out " + dir.string()) ==
        2);
}

TEST_CASE("solve runs are byte-identical across invocations") {
  const fs::path d1 = temp_dir() / "solve_a";
  const fs::path d2 = temp_dir() / "solve_b";
  const std::string common =
      "solve --preset experiment1 --scheme nt --n 32 --dt 1/50 --T 0.5 --out ";
  REQUIRE(run_cli(common + d1.string()) == 0);
  REQUIRE(run_cli(common + d2.string()) == 0);
  CHECK(slurp(d1 / "nodes.csv") == slurp(d2 / "nodes.csv"));
  CHECK(slurp(d1 / "midpoints.csv") == slurp(d2 / "midpoints.csv"));
  CHECK(slurp(d1 / "nodes.csv").find("exact_m_G") != std::string::npos);
}

TEST_CASE("preset dump-config reruns produce identical output") {
  const fs::path dir = temp_dir() / "dumprun";
  const fs::path cfgpath = dir / "resolved.cfg";
  fs::create_directories(dir);
  REQUIRE(run_cli("solve --preset experiment2 --n 24 --T 0.25 --dump-config " +
                  cfgpath.string() + " --out " + (dir / "a").string()) == 0);
  REQUIRE(run_cli("solve --config " + cfgpath.string() + " --out " +
                  (dir / "b").string()) == 0);
  CHECK(slurp(dir / "a" / "midpoints.csv") == slurp(dir / "b" / "midpoints.csv"));
}

TEST_CASE("solve with a constant state reproduces the initial data") {
  const fs::path dir = temp_dir() / "constant";
  const fs::path cfg = dir / "constant.cfg";
  fs::create_directories(dir);
  {
    std::ofstream out(cfg);
    out << "left.m_G = 2\nleft.v_G = 1.5\nleft.m_L = 3\nleft.v_L = 1\n";
    out << "right.m_G = 2\nright.v_G = 1.5\nright.m_L = 3\nright.v_L = 1\n";
    out << "n = 16\ndt = 1/50\nT = 0.5\n";
  }
  REQUIRE(run_cli("solve --config " + cfg.string() + " --out " +
                  dir.string()) == 0);
  std::istringstream rows(slurp(dir / "nodes.csv"));
  std::string line;
  std::getline(rows, line);  // header
  while (std::getline(rows, line)) {
    std::istringstream cells(line);
    std::string x, mg, vg;
    std::getline(cells, x, ',');
    std::getline(cells, mg, ',');
    std::getline(cells, vg, ',');
    CHECK(mg == "2");
    CHECK(vg == "1.5");
  }
}

TEST_CASE("error-table spot values sit within factor 2 of the published ones") {
  // under the CFL-0.45 reading (the stable one of the two reported)
  const ErrorTable t1 =
      compute_error_table(preset_config("experiment1"), DtRule::Cfl045, {256});
  CHECK(t1.rows[0].roe.err.m_L > 0.5 * 0.37);
  CHECK(t1.rows[0].roe.err.m_L < 2.0 * 0.37);
  const ErrorTable t2 =
      compute_error_table(preset_config("experiment2"), DtRule::Cfl045, {16});
  CHECK(t2.rows[0].nt.err.v_L > 0.5 * 11.16);
  CHECK(t2.rows[0].nt.err.v_L < 2.0 * 11.16);
}

TEST_CASE("validation suite passes on the real implementation") {
  const ValidationReport rep = run_validation();
  for (const CheckResult& c : rep.checks) {
    INFO(c.name, ": ", c.detail);
    CHECK(c.pass);
  }
  CHECK(rep.all_pass());
}

TEST_CASE("validation catches the corrupted gas Roe matrix") {
  FaultInjection fault;
  fault.gas_roe_sign = true;
  const ValidationReport rep = run_validation(fault);
  bool gas_failed = false;
  for (const CheckResult& c : rep.checks)
    if (c.name.rfind("gas Roe", 0) == 0 && !c.pass) gas_failed = true;
  CHECK(gas_failed);
  CHECK(!rep.all_pass());
}

TEST_CASE("validation catches a degraded liquid quadrature") {
  FaultInjection fault;
  fault.quad_order = 2;
  fault.quad_panels = 1;
  const ValidationReport rep = run_validation(fault);
  bool liquid_failed = false;
  for (const CheckResult& c : rep.checks)
    if (c.name.rfind("liquid Roe", 0) == 0 && !c.pass) liquid_failed = true;
  CHECK(liquid_failed);
}

TEST_CASE("solver abort surfaces as exit code 3") {
  // dt = dx/4 puts the NT run at twice its stability bound: blow-up
  const fs::path dir = temp_dir() / "abort";
  CHECK(run_cli("solve --preset experiment1 --scheme nt --n 64 --dt " +
                std::to_string((10.0 / 64.0) / 4.0) + " --T 1 --out " +
                dir.string()) == 3);
}

TEST_CASE("validate subcommand exit codes") {
  CHECK(run_cli("validate") == 0);
  CHECK(run_cli("validate --inject gas-roe-sign") == 4);
  CHECK(run_cli("validate --quad-order 2 --quad-panels 1") == 4);
}
