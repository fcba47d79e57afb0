#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "pipeflow/config.hpp"
#include "pipeflow/io.hpp"
#include "pipeflow/validate.hpp"

namespace fs = std::filesystem;
using namespace pipeflow;

namespace {

struct CliOverrides {
  std::optional<std::string> config_path;
  std::optional<std::string> preset;
  std::optional<std::string> scheme;
  std::optional<std::string> boundary;
  std::optional<std::string> n;
  std::optional<std::string> dt;
  std::optional<std::string> cfl;
  std::optional<std::string> t_end;
  std::optional<std::string> sample_time;
  std::optional<std::string> samples;
  std::optional<std::string> c_g;
  std::optional<std::string> rho_l;
  std::optional<std::string> out;
  std::optional<std::string> dump_config_path;
};

void add_common_options(CLI::App* cmd, CliOverrides& o) {
  cmd->add_option("--config", o.config_path, "flat key = value config file");
  cmd->add_option("--preset", o.preset, "experiment1 | experiment2");
  cmd->add_option("--scheme", o.scheme, "liquid scheme: roe | nt");
  cmd->add_option("--boundary", o.boundary, "open | periodic");
  cmd->add_option("--n", o.n, "number of cells");
  cmd->add_option("--dt", o.dt, "fixed time step (fractions like 1/150 accepted)");
  cmd->add_option("--cfl", o.cfl, "CFL number (overrides --dt)");
  cmd->add_option("--T", o.t_end, "end time");
  cmd->add_option("--t", o.sample_time, "sampling time for `exact`");
  cmd->add_option("--samples", o.samples, "profile sample count for `exact`");
  cmd->add_option("--C_G", o.c_g, "gas compressibility constant");
  cmd->add_option("--rho_L", o.rho_l, "liquid reference density");
  cmd->add_option("--out", o.out, "output directory");
  cmd->add_option("--dump-config", o.dump_config_path,
                  "write the resolved configuration to this file");
}

ExperimentConfig resolve(const CliOverrides& o) {
  ExperimentConfig cfg;
  if (o.config_path) apply_config_file(cfg, *o.config_path);
  if (o.preset) apply_key(cfg, "preset", *o.preset);
  if (o.scheme) apply_key(cfg, "scheme", *o.scheme);
  if (o.boundary) apply_key(cfg, "boundary", *o.boundary);
  if (o.n) apply_key(cfg, "n", *o.n);
  if (o.dt) apply_key(cfg, "dt", *o.dt);
  if (o.cfl) apply_key(cfg, "cfl", *o.cfl);
  if (o.t_end) apply_key(cfg, "T", *o.t_end);
  if (o.sample_time) apply_key(cfg, "t", *o.sample_time);
  if (o.samples) apply_key(cfg, "samples", *o.samples);
  if (o.c_g) apply_key(cfg, "C_G", *o.c_g);
  if (o.rho_l) apply_key(cfg, "rho_L", *o.rho_l);
  if (o.out) apply_key(cfg, "out", *o.out);
  if (o.dump_config_path) {
    std::ofstream out(*o.dump_config_path);
    if (!out) throw std::runtime_error("cannot write " + *o.dump_config_path);
    dump_config(cfg, out);
  }
  return cfg;
}

std::ofstream open_out(const ExperimentConfig& cfg, const std::string& name) {
  fs::create_directories(cfg.out_dir);
  const fs::path path = fs::path(cfg.out_dir) / name;
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

int cmd_exact(const CliOverrides& o) {
  const ExperimentConfig cfg = resolve(o);
  const auto exact = build_exact(cfg);
  if (!exact)
    throw std::invalid_argument(
        "exact: no construction configured (use --preset or shock.*/raref.* keys)");
  {
    auto out = open_out(cfg, "solution.txt");
    write_solution_file(out, *exact);
  }
  {
    auto out = open_out(cfg, "exact_profile.csv");
    write_exact_profile_csv(out, *exact, cfg.a, cfg.b, cfg.samples,
                            cfg.sample_time);
  }
  std::cout << "wrote " << cfg.out_dir << "/solution.txt and exact_profile.csv"
            << " (" << exact->waves.size() << " waves, all checks passed)\n";
  return 0;
}

int cmd_solve(const CliOverrides& o) {
  const ExperimentConfig cfg = resolve(o);
  const auto exact = build_exact(cfg);
  const RunConfig rc = to_run_config(cfg, exact ? &*exact : nullptr);
  const SimState final_state = run(rc);
  const RiemannSolution* ex = exact ? &*exact : nullptr;
  {
    auto out = open_out(cfg, "nodes.csv");
    write_nodes_csv(out, final_state, rc.grid, ex);
  }
  {
    auto out = open_out(cfg, "midpoints.csv");
    write_midpoints_csv(out, final_state, rc.grid, ex);
  }
  std::cout << "wrote " << cfg.out_dir << "/nodes.csv and midpoints.csv at t="
            << fmt15(final_state.time) << '\n';
  return 0;
}

int cmd_error_table(const CliOverrides& o) {
  const ExperimentConfig cfg = resolve(o);
  for (const DtRule rule : {DtRule::FixedRatio4, DtRule::Cfl045}) {
    const ErrorTable table = compute_error_table(cfg, rule);
    const std::string tag =
        rule == DtRule::FixedRatio4 ? "ratio4" : "cfl045";
    {
      auto out = open_out(cfg, "error_table_" + tag + ".txt");
      write_error_table(table, out);
    }
    {
      auto out = open_out(cfg, "error_table_" + tag + ".csv");
      write_error_table_csv(table, out);
    }
  }
  std::cout << "wrote error tables under " << cfg.out_dir << '\n';
  return 0;
}

int cmd_validate(const FaultInjection& fault) {
  const ValidationReport report = run_validation(fault);
  print_report(report, std::cout);
  return report.all_pass() ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-volume solver for the triangular two-phase pipe-flow model"};
  app.require_subcommand(1);

  CliOverrides exact_opts, solve_opts, table_opts;
  auto* exact_cmd =
      app.add_subcommand("exact", "construct an exact Riemann solution");
  add_common_options(exact_cmd, exact_opts);
  auto* solve_cmd = app.add_subcommand("solve", "run the finite-volume solver");
  add_common_options(solve_cmd, solve_opts);
  auto* table_cmd = app.add_subcommand(
      "error-table", "L1 error tables over grid sizes, both dt conventions");
  add_common_options(table_cmd, table_opts);

  FaultInjection fault;
  std::string inject;
  auto* validate_cmd =
      app.add_subcommand("validate", "run the built-in validation suites");
  validate_cmd->add_option("--inject", inject,
                           "deliberate degradation: gas-roe-sign");
  validate_cmd->add_option("--quad-order", fault.quad_order,
                           "override liquid Roe quadrature order");
  validate_cmd->add_option("--quad-panels", fault.quad_panels,
                           "override liquid Roe quadrature panels");

  CLI11_PARSE(app, argc, argv);

  try {
    if (exact_cmd->parsed()) return cmd_exact(exact_opts);
    if (solve_cmd->parsed()) return cmd_solve(solve_opts);
    if (table_cmd->parsed()) return cmd_error_table(table_opts);
    if (validate_cmd->parsed()) {
      if (inject == "gas-roe-sign") fault.gas_roe_sign = true;
      else if (!inject.empty())
        throw std::invalid_argument("unknown --inject value " + inject);
      return cmd_validate(fault);
    }
  } catch (const ConstructionError& e) {
    std::cerr << "construction failure: " << e.what() << '\n';
    return 2;
  } catch (const SolverError& e) {
    std::cerr << "solver abort: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
