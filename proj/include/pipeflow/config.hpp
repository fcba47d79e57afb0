#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "pipeflow/exact_riemann.hpp"
#include "pipeflow/simulation.hpp"

namespace pipeflow {

/// Numeric literal, decimal or a fraction like "1/150".
double parse_number(const std::string& text);

/// Fully resolved experiment description. Populated from a preset, a flat
/// key = value config file, CLI flags, or any combination (later sources
/// override earlier ones, key by key).
struct ExperimentConfig {
  ModelParams params;
  double a = -5.0;
  double b = 5.0;
  int n = 54;
  LiquidScheme scheme = LiquidScheme::Roe;
  BoundaryKind boundary = BoundaryKind::Open;
  double fixed_dt = 1.0 / 150.0;  // <= 0 means unset
  double cfl = 0.0;               // <= 0 means unset
  double t_end = 1.0;
  double sample_time = 1.0;  // `exact` profile time
  int samples = 200;         // `exact` profile resolution
  std::string out_dir = "out";

  std::optional<ShockProblemSpec> shock;
  std::optional<RarefactionProblemSpec> rarefaction;
  std::optional<RiemannInit> explicit_init;
};

/// The canonical parameter sets: "experiment1" (all-shock) and
/// "experiment2" (all-rarefaction).
ExperimentConfig preset_config(const std::string& name);

/// Apply one key = value assignment; unknown keys are an error.
void apply_key(ExperimentConfig& cfg, const std::string& key,
               const std::string& value);

/// Apply a flat key-value file ('#' comments, blank lines ignored). A
/// `preset` key expands in place before later keys override it.
void apply_config_file(ExperimentConfig& cfg, const std::string& path);

/// Write every resolved field as key = value; reloading reproduces cfg.
void dump_config(const ExperimentConfig& cfg, std::ostream& os);

/// Exact solution for the configured construction, if one is configured.
std::optional<RiemannSolution> build_exact(const ExperimentConfig& cfg);

/// Solver configuration; initial data from the explicit states when given,
/// otherwise from the outermost states of the exact solution.
RunConfig to_run_config(const ExperimentConfig& cfg,
                        const RiemannSolution* exact);

}  // namespace pipeflow
