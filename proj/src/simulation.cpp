#include "pipeflow/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <string>

#include "pipeflow/nt.hpp"
#include "pipeflow/roe.hpp"

namespace pipeflow {

SimState init_riemann(const StaggeredGrid& grid, const FullState& left,
                      const FullState& right) {
  SimState s;
  s.time = 0.0;
  s.u.resize(grid.n + 1);
  s.w.resize(grid.n);
  for (int j = 0; j <= grid.n; ++j)
    s.u[j] = grid.node(j) < 0.0 ? left.gas : right.gas;
  for (int j = 0; j < grid.n; ++j)
    s.w[j] = grid.midpoint(j) < 0.0 ? left.liquid : right.liquid;
  return s;
}

SimState initial_state(const RunConfig& config) {
  const StaggeredGrid& g = config.grid;
  if (const auto* r = std::get_if<RiemannInit>(&config.init))
    return init_riemann(g, r->left, r->right);
  if (const auto* m = std::get_if<MirroredJumpInit>(&config.init)) {
    SimState s;
    s.u.resize(g.n + 1);
    s.w.resize(g.n);
    auto pick = [&](double x) -> const FullState& {
      return (x > m->jump_lo && x < m->jump_hi) ? m->right : m->left;
    };
    for (int j = 0; j <= g.n; ++j) s.u[j] = pick(g.node(j)).gas;
    for (int j = 0; j < g.n; ++j) s.w[j] = pick(g.midpoint(j)).liquid;
    return s;
  }
  const auto& sm = std::get<SmoothLiquidInit>(config.init);
  SimState s;
  s.u.assign(g.n + 1, sm.gas);
  s.w.resize(g.n);
  for (int j = 0; j < g.n; ++j) {
    const double x = g.midpoint(j);
    const double m_L =
        sm.base + sm.amp * std::sin(2.0 * M_PI * sm.wavenumber * (x - g.a) /
                                    (g.b - g.a));
    s.w[j] = {m_L, 0.0};
  }
  return s;
}

GhostArrays boundary_extend(const SimState& state, BoundaryKind boundary,
                            int node_ghosts, int mid_ghosts) {
  const int nu = static_cast<int>(state.u.size());  // n+1
  const int nw = static_cast<int>(state.w.size());  // n
  GhostArrays g;
  g.node_ghosts = node_ghosts;
  g.mid_ghosts = mid_ghosts;
  g.u.resize(nu + 2 * node_ghosts);
  g.w.resize(nw + 2 * mid_ghosts);

  for (int j = 0; j < nu; ++j) g.u[j + node_ghosts] = state.u[j];
  for (int j = 0; j < nw; ++j) g.w[j + mid_ghosts] = state.w[j];

  if (boundary == BoundaryKind::Open) {
    for (int k = 1; k <= node_ghosts; ++k) {
      g.u[node_ghosts - k] = state.u.front();
      g.u[node_ghosts + nu - 1 + k] = state.u.back();
    }
    for (int k = 1; k <= mid_ghosts; ++k) {
      g.w[mid_ghosts - k] = state.w.front();
      g.w[mid_ghosts + nw - 1 + k] = state.w.back();
    }
  } else {
    // periodic: nodes 0 and n are the same physical point
    const int n = nw;
    auto unode = [&](int j) { return state.u[((j % n) + n) % n]; };
    auto wmid = [&](int j) { return state.w[((j % n) + n) % n]; };
    for (int k = 1; k <= node_ghosts; ++k) {
      g.u[node_ghosts - k] = unode(-k);
      g.u[node_ghosts + nu - 1 + k] = unode(n + k);
    }
    for (int k = 1; k <= mid_ghosts; ++k) {
      g.w[mid_ghosts - k] = wmid(-k);
      g.w[mid_ghosts + nw - 1 + k] = wmid(n - 1 + k);
    }
  }
  return g;
}

namespace {

Flux2 gas_interface_flux(const GasState& uL, const GasState& uR,
                         const ModelParams& p) {
  const RoeData d = roe_data_gas(uL, uR, p);
  return roe_flux(flux_gas(uL, p), flux_gas(uR, p), d, uL.vec(), uR.vec());
}

Flux2 liquid_interface_flux(const LiquidState& wL, const LiquidState& wR,
                            double m_G, const ModelParams& p) {
  const RoeData d = roe_data_liquid(wL, wR, m_G, p);
  return roe_flux(flux_liquid(wL, m_G, p), flux_liquid(wR, m_G, p), d,
                  wL.vec(), wR.vec());
}

}  // namespace

SimState step(const SimState& state, double dt, const RunConfig& config) {
  if (!(dt > 0.0)) throw std::invalid_argument("step: dt must be positive");
  const int n = config.grid.n;
  const double r = dt / config.grid.dx();
  const ModelParams& p = config.params;

  const GhostArrays g =
      boundary_extend(state, config.boundary, kNtNodeGhosts, kNtMidGhosts);
  auto un = [&](int j) -> const GasState& { return g.u[j + g.node_ghosts]; };
  auto wm = [&](int j) -> const LiquidState& { return g.w[j + g.mid_ghosts]; };

  SimState next;
  next.time = state.time + dt;
  next.u.resize(n + 1);
  next.w.resize(n);

  // gas: Roe fluxes at the midpoints x_{j+1/2} (interfaces of the u-cells)
  std::vector<Flux2> F(n + 2);  // F[i] at midpoint between nodes i-1 and i
  for (int i = 0; i <= n + 1; ++i) {
    try {
      F[i] = gas_interface_flux(un(i - 1), un(i), p);
    } catch (const std::exception& e) {
      throw SolverError("gas flux failed at interface " + std::to_string(i) +
                            ": " + e.what(),
                        i, state.time);
    }
  }
  for (int j = 0; j <= n; ++j) {
    next.u[j].m = state.u[j].m - r * (F[j + 1][0] - F[j][0]);
    next.u[j].q = state.u[j].q - r * (F[j + 1][1] - F[j][1]);
  }
  if (config.boundary == BoundaryKind::Periodic) next.u[n] = next.u[0];

  // liquid: either Roe fluxes at the nodes x_j, where the time-t^n gas state
  // is single-valued, or one NT step
  if (config.scheme == LiquidScheme::Roe) {
    std::vector<Flux2> G(n + 1);  // G[j] at node x_j
    for (int j = 0; j <= n; ++j) {
      try {
        G[j] = liquid_interface_flux(wm(j - 1), wm(j), state.u[j].m, p);
      } catch (const std::exception& e) {
        throw SolverError("liquid flux failed at node " + std::to_string(j) +
                              ": " + e.what(),
                          j, state.time);
      }
    }
    for (int j = 0; j < n; ++j) {
      next.w[j].m = state.w[j].m - r * (G[j + 1][0] - G[j][0]);
      next.w[j].q = state.w[j].q - r * (G[j + 1][1] - G[j][1]);
    }
  } else {
    try {
      next.w = nt_step(g.w, g.u, r, p);
    } catch (const SolverError& e) {
      throw SolverError(std::string(e.what()) + " at t=" +
                            std::to_string(state.time),
                        e.cell, state.time);
    }
  }
  return next;
}

double max_wave_speed(const SimState& state, const ModelParams& params) {
  double s = 0.0;
  for (const GasState& u : state.u) {
    const auto [l1, l2] = eigen_gas(u, params);
    s = std::max({s, std::abs(l1), std::abs(l2)});
  }
  for (std::size_t j = 0; j < state.w.size(); ++j) {
    // midpoint x_{j+1/2} lies between nodes j and j+1
    const double m_G = std::max(state.u[j].m, state.u[j + 1].m);
    const auto [m1, m2] = eigen_liquid(state.w[j], m_G, params);
    s = std::max({s, std::abs(m1), std::abs(m2)});
  }
  return s;
}

SimState run(const RunConfig& config,
             const std::function<void(const SimState&)>& on_step) {
  if (!(config.t_end >= 0.0))
    throw std::invalid_argument("run: t_end must be nonnegative");
  if (!(config.policy.fixed_dt > 0.0) && !(config.policy.cfl > 0.0))
    throw std::invalid_argument("run: need a positive fixed dt or CFL number");
  if (config.policy.cfl > 1.0)
    throw std::invalid_argument("run: CFL number must lie in (0, 1]");
  if (config.grid.n < 4)
    throw std::invalid_argument("run: need at least 4 cells");

  SimState state = initial_state(config);
  if (on_step) on_step(state);
  if (config.t_end == 0.0) return state;

  bool warned = false;
  const double dx = config.grid.dx();
  long steps = 0;
  while (state.time < config.t_end) {
    double dt;
    double smax;
    try {
      smax = max_wave_speed(state, config.params);
    } catch (const std::exception& e) {
      throw SolverError(std::string("state left the admissible set: ") +
                            e.what(),
                        -1, state.time);
    }
    if (config.policy.fixed_dt > 0.0) {
      dt = config.policy.fixed_dt;
      if (!warned && dt * smax / dx > 1.0 + 1e-9) {
        std::cerr << "warning: fixed dt violates CFL (dt*smax/dx = "
                  << dt * smax / dx << ")\n";
        warned = true;
      }
    } else {
      dt = config.policy.cfl * dx / smax;
    }
    const double remaining = config.t_end - state.time;
    const bool final_step = dt >= remaining * (1.0 - 1e-12);
    if (final_step) dt = remaining;
    state = step(state, dt, config);
    if (final_step) state.time = config.t_end;
    if (on_step) on_step(state);
    if (++steps > 100000000)
      throw std::runtime_error("run: step count safety limit exceeded");
  }
  return state;
}

ErrorReport rel_l1_error(const SimState& state, const StaggeredGrid& grid,
                         const RiemannSolution& exact) {
  if (!(state.time > 0.0))
    throw std::invalid_argument("rel_l1_error: state.time must be positive");
  ErrorReport rep;
  double num_mG = 0, den_mG = 0, num_vG = 0, den_vG = 0;
  for (std::size_t j = 0; j < state.u.size(); ++j) {
    const FullState ex = sample(exact, grid.node(static_cast<int>(j)), state.time);
    num_mG += std::abs(state.u[j].m - ex.gas.m);
    den_mG += std::abs(ex.gas.m);
    num_vG += std::abs(state.u[j].velocity() - ex.gas.velocity());
    den_vG += std::abs(ex.gas.velocity());
  }
  double num_mL = 0, den_mL = 0, num_vL = 0, den_vL = 0;
  for (std::size_t j = 0; j < state.w.size(); ++j) {
    const FullState ex =
        sample(exact, grid.midpoint(static_cast<int>(j)), state.time);
    num_mL += std::abs(state.w[j].m - ex.liquid.m);
    den_mL += std::abs(ex.liquid.m);
    num_vL += std::abs(state.w[j].velocity() - ex.liquid.velocity());
    den_vL += std::abs(ex.liquid.velocity());
  }
  rep.m_G = 100.0 * num_mG / den_mG;
  rep.v_G = 100.0 * num_vG / den_vG;
  rep.m_L = 100.0 * num_mL / den_mL;
  rep.v_L = 100.0 * num_vL / den_vL;
  return rep;
}

}  // namespace pipeflow
