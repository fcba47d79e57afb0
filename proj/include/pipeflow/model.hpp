#pragma once

#include <array>
#include <utility>

#include "pipeflow/errors.hpp"

namespace pipeflow {

/// Closure constants for both pressure laws: ideal gas p = m_G / C_G and the
/// hydrostatic liquid law with incompressible reference density rho_L.
/// strict_physical additionally rejects m_L >= rho_L (volume fraction > 1);
/// off by default so the reference test cases with m_L > rho_L stay valid.
struct ModelParams {
  double C_G = 1.0;
  double rho_L = 1.0;
  bool strict_physical = false;
};

/// Conserved gas pair (m_G, q_G = m_G v_G).
struct GasState {
  double m = 0.0;
  double q = 0.0;
  double velocity() const;
  std::array<double, 2> vec() const { return {m, q}; }
};

/// Conserved liquid pair (m_L, q_L = m_L v_L).
struct LiquidState {
  double m = 0.0;
  double q = 0.0;
  double velocity() const;
  std::array<double, 2> vec() const { return {m, q}; }
};

struct FullState {
  GasState gas;
  LiquidState liquid;
};

using Flux2 = std::array<double, 2>;

void check_gas_state(const GasState& u, const ModelParams& p);
void check_liquid_state(const LiquidState& w, const ModelParams& p);

double p_gas(double m_G, const ModelParams& p);
double p_liquid(double m_G, double m_L, const ModelParams& p);

/// dP/dm_L and dP/dm_G of the liquid pressure law.
double dp_dm_l(double m_G, double m_L, const ModelParams& p);
double dp_dm_g(double m_G, double m_L, const ModelParams& p);

Flux2 flux_gas(const GasState& u, const ModelParams& p);
Flux2 flux_liquid(const LiquidState& w, double m_G, const ModelParams& p);

/// (lambda_1, lambda_2) = v_G -/+ 1/sqrt(C_G).
std::pair<double, double> eigen_gas(const GasState& u, const ModelParams& p);

/// (mu_1, mu_2) = v_L -/+ sqrt(dP/dm_L); requires dP/dm_L > 0.
std::pair<double, double> eigen_liquid(const LiquidState& w, double m_G,
                                       const ModelParams& p);

}  // namespace pipeflow
