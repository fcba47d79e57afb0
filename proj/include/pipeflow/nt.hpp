#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "pipeflow/model.hpp"
#include "pipeflow/roe.hpp"

namespace pipeflow {

/// Ghost layers nt_step expects on each side of its input arrays.
inline constexpr int kNtMidGhosts = 3;   // liquid midpoints
inline constexpr int kNtNodeGhosts = 2;  // gas nodes

/// Common-sign minimum magnitude, zero when signs disagree.
double minmod(std::initializer_list<double> values);
double minmod(double a, double b);
double minmod(double a, double b, double c);

/// Gas state at a cell interface: the Roe-linearized Riemann solution
/// evaluated at the interface. Upwind state when both eigenvalues share a
/// sign (zero counts with the adjacent one-sided case), otherwise the middle
/// state; a nonpositive middle-state mass is a hard error since the liquid
/// pressure law needs m_G > 0.
GasState interface_gas_state(const GasState& uL, const GasState& uR,
                             const ModelParams& p);

/// Componentwise minmod of the one-sided liquid flux differences, the
/// forward difference taken with the right node's gas state and the backward
/// difference with the left node's gas state.
Flux2 flux_slope(const LiquidState& wm, const LiquidState& w0,
                 const LiquidState& wp, const GasState& u_left_node,
                 const GasState& u_right_node, const ModelParams& p);

/// One nonstaggered NT step for the liquid midpoint array. w holds
/// kNtMidGhosts ghost midpoints per side, u holds kNtNodeGhosts ghost nodes
/// per side; with N interior midpoints, w.size() == N + 6 and
/// u.size() == N + 5. lambda is the mesh ratio dt/dx. Returns the N interior
/// midpoints at the next time level.
std::vector<LiquidState> nt_step(std::span<const LiquidState> w,
                                 std::span<const GasState> u, double lambda,
                                 const ModelParams& p);

}  // namespace pipeflow
