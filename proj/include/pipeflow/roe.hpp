#pragma once

#include <array>

#include "pipeflow/model.hpp"
#include "pipeflow/numerics.hpp"

namespace pipeflow {

using Mat2 = std::array<std::array<double, 2>, 2>;

/// Roe linearization of a 2x2 subsystem in companion form
///   A = [[0, 1], [cbar^2 - ubar^2, 2 ubar]],
/// eigenvalues ubar -/+ cbar, right eigenvectors r_k = (1, lambda_k).
/// ubar is the sqrt(m)-weighted velocity average and cbar^2 the averaged
/// sound speed (exact for the gas phase, quadrature of z1 dP/dm_L(m_G, z1^2)
/// over the parameter-vector segment for the liquid phase).
struct RoeData {
  Mat2 a{};
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double ubar = 0.0;
  double cbar = 0.0;

  std::array<double, 2> r1() const { return {1.0, lambda1}; }
  std::array<double, 2> r2() const { return {1.0, lambda2}; }
};

const Quadrature& default_quadrature();

RoeData roe_data_gas(const GasState& uL, const GasState& uR,
                     const ModelParams& p);

RoeData roe_data_liquid(const LiquidState& wL, const LiquidState& wR,
                        double m_G, const ModelParams& p,
                        const Quadrature& quad = default_quadrature());

/// |A| = R diag(|lambda_1|, |lambda_2|) R^{-1}.
Mat2 abs_roe_matrix(const RoeData& data);

/// F(uL,uR) = (f(uL) + f(uR))/2 - |A| (uR - uL) / 2.
Flux2 roe_flux(const Flux2& fL, const Flux2& fR, const RoeData& data,
               const std::array<double, 2>& uL,
               const std::array<double, 2>& uR);

}  // namespace pipeflow
