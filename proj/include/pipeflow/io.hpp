#pragma once

#include <iosfwd>
#include <string>

#include "pipeflow/exact_riemann.hpp"
#include "pipeflow/simulation.hpp"

namespace pipeflow {

/// Number formatted with 15 significant digits (deterministic output).
std::string fmt15(double v);

/// Number formatted so it parses back to the identical double.
std::string fmt_exact(double v);

/// Structured text form of a solution: model constants, the constant-state
/// chain, each wave with speeds and fan sample tables, and the recorded
/// ordering checks.
void write_solution_file(std::ostream& os, const RiemannSolution& sol);

/// CSV profile x,m_G,v_G,m_L,v_L of the exact solution at time t.
void write_exact_profile_csv(std::ostream& os, const RiemannSolution& sol,
                             double a, double b, int samples, double t);

/// Node CSV: gas at the nodes, liquid columns averaged from the adjacent
/// midpoints. Midpoint CSV: liquid at the midpoints, gas columns averaged
/// from the adjacent nodes. Exact columns appear when exact != nullptr.
void write_nodes_csv(std::ostream& os, const SimState& state,
                     const StaggeredGrid& grid, const RiemannSolution* exact);
void write_midpoints_csv(std::ostream& os, const SimState& state,
                         const StaggeredGrid& grid,
                         const RiemannSolution* exact);

}  // namespace pipeflow
