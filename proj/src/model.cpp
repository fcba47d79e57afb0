#include "pipeflow/model.hpp"

#include <cmath>
#include <string>

namespace pipeflow {

namespace {

double safe_velocity(double m, double q, const char* phase) {
  if (std::abs(m) < 1e-300)
    throw std::domain_error(std::string(phase) +
                            " velocity: mass magnitude below 1e-300");
  return q / m;
}

}  // namespace

double GasState::velocity() const { return safe_velocity(m, q, "gas"); }
double LiquidState::velocity() const { return safe_velocity(m, q, "liquid"); }

void check_gas_state(const GasState& u, const ModelParams&) {
  if (!(u.m > 0.0))
    throw std::domain_error("gas state: m_G must be positive, got " +
                            std::to_string(u.m));
}

void check_liquid_state(const LiquidState& w, const ModelParams& p) {
  if (!(w.m > 0.0))
    throw std::domain_error("liquid state: m_L must be positive, got " +
                            std::to_string(w.m));
  if (w.m == p.rho_L)
    throw SingularityError("liquid state: m_L equals rho_L (pressure law singular)");
  if (p.strict_physical && w.m >= p.rho_L)
    throw std::domain_error("liquid state: m_L >= rho_L rejected in strict-physical mode");
}

double p_gas(double m_G, const ModelParams& p) {
  if (!(m_G > 0.0))
    throw std::domain_error("p_gas: m_G must be positive, got " +
                            std::to_string(m_G));
  return m_G / p.C_G;
}

double p_liquid(double m_G, double m_L, const ModelParams& p) {
  if (!(m_G > 0.0) || !(m_L > 0.0))
    throw std::domain_error("p_liquid: masses must be positive");
  if (m_L == p.rho_L)
    throw SingularityError("p_liquid: m_L equals rho_L");
  const double r = p.rho_L;
  return m_L * m_G / ((r - m_L) * p.C_G) +
         (m_L * m_G / (2.0 * r * r)) * (r - m_L) +
         m_L * m_L * m_L / (2.0 * r * r);
}

double dp_dm_l(double m_G, double m_L, const ModelParams& p) {
  if (!(m_G > 0.0) || !(m_L > 0.0))
    throw std::domain_error("dp_dm_l: masses must be positive");
  if (m_L == p.rho_L)
    throw SingularityError("dp_dm_l: m_L equals rho_L");
  const double r = p.rho_L;
  const double d = r - m_L;
  return m_G * r / (d * d * p.C_G) + m_G / (2.0 * r) - m_L * m_G / (r * r) +
         3.0 * m_L * m_L / (2.0 * r * r);
}

double dp_dm_g(double m_G, double m_L, const ModelParams& p) {
  if (!(m_G > 0.0) || !(m_L > 0.0))
    throw std::domain_error("dp_dm_g: masses must be positive");
  if (m_L == p.rho_L)
    throw SingularityError("dp_dm_g: m_L equals rho_L");
  const double r = p.rho_L;
  return m_L / ((r - m_L) * p.C_G) + (m_L / (2.0 * r * r)) * (r - m_L);
}

Flux2 flux_gas(const GasState& u, const ModelParams& p) {
  check_gas_state(u, p);
  return {u.q, u.q * u.q / u.m + p_gas(u.m, p)};
}

Flux2 flux_liquid(const LiquidState& w, double m_G, const ModelParams& p) {
  check_liquid_state(w, p);
  return {w.q, w.q * w.q / w.m + p_liquid(m_G, w.m, p)};
}

std::pair<double, double> eigen_gas(const GasState& u, const ModelParams& p) {
  check_gas_state(u, p);
  const double c = 1.0 / std::sqrt(p.C_G);
  const double v = u.velocity();
  return {v - c, v + c};
}

std::pair<double, double> eigen_liquid(const LiquidState& w, double m_G,
                                       const ModelParams& p) {
  const double dp = dp_dm_l(m_G, w.m, p);
  if (!(dp > 0.0))
    throw HyperbolicityError("eigen_liquid: dP/dm_L <= 0 at m_L=" +
                             std::to_string(w.m));
  const double c = std::sqrt(dp);
  const double v = w.velocity();
  return {v - c, v + c};
}

}  // namespace pipeflow
