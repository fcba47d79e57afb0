#include "pipeflow/io.hpp"

#include <cstdio>
#include <ostream>

namespace pipeflow {

std::string fmt15(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string fmt_exact(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_solution_file(std::ostream& os, const RiemannSolution& sol) {
  os << "# exact Riemann solution\n";
  os << "C_G " << fmt15(sol.params.C_G) << '\n';
  os << "rho_L " << fmt15(sol.params.rho_L) << '\n';
  os << "states " << sol.states.size() << '\n';
  os << "# index m_G v_G m_L v_L\n";
  for (std::size_t i = 0; i < sol.states.size(); ++i) {
    const FullState& s = sol.states[i];
    os << "state " << i << ' ' << fmt15(s.gas.m) << ' '
       << fmt15(s.gas.velocity()) << ' ' << fmt15(s.liquid.m) << ' '
       << fmt15(s.liquid.velocity()) << '\n';
  }
  os << "waves " << sol.waves.size() << '\n';
  for (std::size_t i = 0; i < sol.waves.size(); ++i) {
    const Wave& w = sol.waves[i];
    os << "wave " << i << " family " << to_string(w.family) << " kind "
       << to_string(w.kind);
    if (w.kind == WaveKind::Shock) {
      os << " speed " << fmt15(w.speed) << '\n';
    } else {
      os << " head " << fmt15(w.head) << " tail " << fmt15(w.tail)
         << " samples " << w.states.size()
         << (w.degenerate ? " degenerate" : "") << '\n';
      for (std::size_t k = 0; k < w.states.size(); ++k) {
        const auto& s = w.states[k];
        os << "  " << fmt15(s.xi);
        for (const double y : s.y) os << ' ' << fmt15(y);
        os << '\n';
      }
    }
  }
  os << "checks " << sol.checks.size() << '\n';
  for (const OrderingCheck& c : sol.checks) {
    os << "check \"" << c.name << "\" "
       << (c.increasing ? "increasing" : "decreasing") << ' '
       << (c.pass ? "pass" : "FAIL") << " values";
    for (const double v : c.values) os << ' ' << fmt15(v);
    os << '\n';
  }
}

void write_exact_profile_csv(std::ostream& os, const RiemannSolution& sol,
                             double a, double b, int samples, double t) {
  os << "x,m_G,v_G,m_L,v_L\n";
  for (int i = 0; i < samples; ++i) {
    const double x = a + (b - a) * i / (samples - 1);
    const FullState s = sample(sol, x, t);
    os << fmt15(x) << ',' << fmt15(s.gas.m) << ',' << fmt15(s.gas.velocity())
       << ',' << fmt15(s.liquid.m) << ',' << fmt15(s.liquid.velocity())
       << '\n';
  }
}

namespace {

void write_row(std::ostream& os, double x, double m_G, double v_G, double m_L,
               double v_L, const RiemannSolution* exact, double t) {
  os << fmt15(x) << ',' << fmt15(m_G) << ',' << fmt15(v_G) << ','
     << fmt15(m_L) << ',' << fmt15(v_L);
  if (exact) {
    const FullState e = sample(*exact, x, t);
    os << ',' << fmt15(e.gas.m) << ',' << fmt15(e.gas.velocity()) << ','
       << fmt15(e.liquid.m) << ',' << fmt15(e.liquid.velocity());
  }
  os << '\n';
}

void write_header(std::ostream& os, bool with_exact) {
  os << "x,m_G,v_G,m_L,v_L";
  if (with_exact) os << ",exact_m_G,exact_v_G,exact_m_L,exact_v_L";
  os << '\n';
}

}  // namespace

void write_nodes_csv(std::ostream& os, const SimState& state,
                     const StaggeredGrid& grid, const RiemannSolution* exact) {
  write_header(os, exact != nullptr);
  const int n = grid.n;
  for (int j = 0; j <= n; ++j) {
    // liquid columns: mean of the midpoints flanking node j
    const LiquidState& wl = state.w[std::max(j - 1, 0)];
    const LiquidState& wr = state.w[std::min(j, n - 1)];
    const double m_L = 0.5 * (wl.m + wr.m);
    const double q_L = 0.5 * (wl.q + wr.q);
    write_row(os, grid.node(j), state.u[j].m, state.u[j].velocity(), m_L,
              q_L / m_L, exact, state.time);
  }
}

void write_midpoints_csv(std::ostream& os, const SimState& state,
                         const StaggeredGrid& grid,
                         const RiemannSolution* exact) {
  write_header(os, exact != nullptr);
  for (int j = 0; j < grid.n; ++j) {
    const double m_G = 0.5 * (state.u[j].m + state.u[j + 1].m);
    const double q_G = 0.5 * (state.u[j].q + state.u[j + 1].q);
    write_row(os, grid.midpoint(j), m_G, q_G / m_G, state.w[j].m,
              state.w[j].velocity(), exact, state.time);
  }
}

}  // namespace pipeflow
