#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "pipeflow/exact_riemann.hpp"
#include "pipeflow/model.hpp"

namespace pipeflow {

/// Staggered discretization of [a,b]: gas unknowns at the N+1 nodes
/// x_j = a + j dx, liquid unknowns at the N midpoints x_{j+1/2}.
struct StaggeredGrid {
  double a = -5.0;
  double b = 5.0;
  int n = 54;

  double dx() const { return (b - a) / n; }
  double node(int j) const { return a + j * dx(); }
  double midpoint(int j) const { return a + (j + 0.5) * dx(); }
};

struct SimState {
  double time = 0.0;
  std::vector<GasState> u;     // n+1 nodes
  std::vector<LiquidState> w;  // n midpoints
};

enum class LiquidScheme { Roe, NT };
enum class BoundaryKind { Open, Periodic };

/// Fixed dt when fixed_dt > 0, otherwise dt = cfl dx / max wave speed.
struct TimeStepPolicy {
  double fixed_dt = 0.0;
  double cfl = 0.0;
};

/// Single jump at x = 0 (node exactly at 0 takes the right state).
struct RiemannInit {
  FullState left, right;
};

/// Right state inside (jump_lo, jump_hi), left elsewhere; periodic-friendly.
struct MirroredJumpInit {
  FullState left, right;
  double jump_lo = 0.0;
  double jump_hi = 2.5;
};

/// Smooth liquid profile m_L = base + amp sin(2 pi k (x-a)/(b-a)), v_L = 0,
/// over a spatially constant gas state.
struct SmoothLiquidInit {
  double base = 0.5;
  double amp = 0.1;
  int wavenumber = 1;
  GasState gas{1.0, 0.0};
};

using InitialData = std::variant<RiemannInit, MirroredJumpInit, SmoothLiquidInit>;

struct RunConfig {
  StaggeredGrid grid;
  ModelParams params;
  InitialData init = RiemannInit{};
  LiquidScheme scheme = LiquidScheme::Roe;
  BoundaryKind boundary = BoundaryKind::Open;
  TimeStepPolicy policy{};
  double t_end = 1.0;
};

SimState init_riemann(const StaggeredGrid& grid, const FullState& left,
                      const FullState& right);

SimState initial_state(const RunConfig& config);

/// Ghost-augmented copies of the state arrays: node_ghosts gas nodes and
/// mid_ghosts liquid midpoints per side, zero-order extrapolation for open
/// boundaries, wrap-around for periodic (nodes x_0 and x_N identified).
struct GhostArrays {
  std::vector<GasState> u;
  std::vector<LiquidState> w;
  int node_ghosts = 0;
  int mid_ghosts = 0;
};

GhostArrays boundary_extend(const SimState& state, BoundaryKind boundary,
                            int node_ghosts, int mid_ghosts);

/// One explicit step of size dt: gas by Roe fluxes at midpoints, liquid by
/// Roe fluxes at nodes (using the single time-t^n gas state there) or one
/// nonstaggered NT step. Both phases read gas data from time t^n.
SimState step(const SimState& state, double dt, const RunConfig& config);

/// Largest characteristic speed magnitude on the grid.
double max_wave_speed(const SimState& state, const ModelParams& params);

/// Advance from t = 0 to t_end under the configured step policy; the last
/// step is shortened to land exactly on t_end. Warns on stderr (once) if a
/// fixed dt violates the CFL condition.
SimState run(const RunConfig& config,
             const std::function<void(const SimState&)>& on_step = nullptr);

/// Percent relative L1 errors against the exact solution, each variable on
/// its own grid (gas at nodes, liquid at midpoints), velocities as q/m.
struct ErrorReport {
  double m_G = 0.0;
  double v_G = 0.0;
  double m_L = 0.0;
  double v_L = 0.0;
};

ErrorReport rel_l1_error(const SimState& state, const StaggeredGrid& grid,
                         const RiemannSolution& exact);

}  // namespace pipeflow
