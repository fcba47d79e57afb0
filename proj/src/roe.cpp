#include "pipeflow/roe.hpp"

#include <cmath>
#include <string>

namespace pipeflow {

const Quadrature& default_quadrature() {
  static const Quadrature quad(16, 4);
  return quad;
}

namespace {

RoeData companion_form(double ubar, double cbar2) {
  if (!(cbar2 > 0.0))
    throw HyperbolicityError(
        "roe: averaged sound speed squared nonpositive (" +
        std::to_string(cbar2) + "), eigenvalues would be complex");
  RoeData d;
  d.ubar = ubar;
  d.cbar = std::sqrt(cbar2);
  d.a = {{{0.0, 1.0}, {cbar2 - ubar * ubar, 2.0 * ubar}}};
  d.lambda1 = ubar - d.cbar;
  d.lambda2 = ubar + d.cbar;
  return d;
}

}  // namespace

RoeData roe_data_gas(const GasState& uL, const GasState& uR,
                     const ModelParams& p) {
  check_gas_state(uL, p);
  check_gas_state(uR, p);
  const double sL = std::sqrt(uL.m), sR = std::sqrt(uR.m);
  const double ubar = (sL * uL.velocity() + sR * uR.velocity()) / (sL + sR);
  return companion_form(ubar, 1.0 / p.C_G);
}

RoeData roe_data_liquid(const LiquidState& wL, const LiquidState& wR,
                        double m_G, const ModelParams& p,
                        const Quadrature& quad) {
  check_liquid_state(wL, p);
  check_liquid_state(wR, p);
  if (!(m_G > 0.0))
    throw std::domain_error("roe_data_liquid: m_G must be positive");
  const double lo = std::min(wL.m, wR.m), hi = std::max(wL.m, wR.m);
  if (lo <= p.rho_L && p.rho_L <= hi)
    throw SingularityError(
        "roe_data_liquid: segment between m_L^L and m_L^R crosses rho_L");

  const double z1L = std::sqrt(wL.m), z1R = std::sqrt(wR.m);
  const double z2L = wL.q / z1L, z2R = wR.q / z1R;  // sqrt(m) v
  const double z1bar = 0.5 * (z1L + z1R);
  const double z2bar = 0.5 * (z2L + z2R);
  const double qbar = quad.line_average(
      [&](double z) { return z * dp_dm_l(m_G, z * z, p); }, z1L, z1R);
  return companion_form(z2bar / z1bar, qbar / z1bar);
}

Mat2 abs_roe_matrix(const RoeData& data) {
  const double l1 = data.lambda1, l2 = data.lambda2;
  const double gap = l2 - l1;
  if (std::abs(gap) < 1e-12 * std::max({std::abs(l1), std::abs(l2), 1.0}))
    throw DegenerateEigenvalueError(
        "abs_roe_matrix: eigenvalues too close to separate");
  const double a1 = std::abs(l1), a2 = std::abs(l2);
  return {{{(l2 * a1 - l1 * a2) / gap, (a2 - a1) / gap},
           {l1 * l2 * (a1 - a2) / gap, (l2 * a2 - l1 * a1) / gap}}};
}

Flux2 roe_flux(const Flux2& fL, const Flux2& fR, const RoeData& data,
               const std::array<double, 2>& uL,
               const std::array<double, 2>& uR) {
  const Mat2 absA = abs_roe_matrix(data);
  const double d0 = uR[0] - uL[0], d1 = uR[1] - uL[1];
  return {0.5 * (fL[0] + fR[0]) - 0.5 * (absA[0][0] * d0 + absA[0][1] * d1),
          0.5 * (fL[1] + fR[1]) - 0.5 * (absA[1][0] * d0 + absA[1][1] * d1)};
}

}  // namespace pipeflow
