#include "pipeflow/nt.hpp"

#include <cmath>
#include <string>

namespace pipeflow {

double minmod(std::initializer_list<double> values) {
  if (values.size() == 0)
    throw std::invalid_argument("minmod: empty argument list");
  const double first = *values.begin();
  const double s = first > 0.0 ? 1.0 : (first < 0.0 ? -1.0 : 0.0);
  if (s == 0.0) return 0.0;
  double mag = std::abs(first);
  for (const double a : values) {
    if (a * s <= 0.0) return 0.0;
    mag = std::min(mag, std::abs(a));
  }
  return s * mag;
}

double minmod(double a, double b) { return minmod({a, b}); }
double minmod(double a, double b, double c) { return minmod({a, b, c}); }

GasState interface_gas_state(const GasState& uL, const GasState& uR,
                             const ModelParams& p) {
  const RoeData d = roe_data_gas(uL, uR, p);
  if (d.lambda1 >= 0.0) return uL;
  if (d.lambda2 <= 0.0) return uR;
  // middle state of the linearized Riemann problem,
  //   (sqrt(C_G)/2) ((l2 uR^1 - uR^2) r1 + (-l1 uL^1 + uL^2) r2)
  const double f = 0.5 * std::sqrt(p.C_G);
  const double c1 = d.lambda2 * uR.m - uR.q;
  const double c2 = -d.lambda1 * uL.m + uL.q;
  GasState mid{f * (c1 + c2), f * (c1 * d.lambda1 + c2 * d.lambda2)};
  if (!(mid.m > 0.0))
    throw SolverError("interface_gas_state: nonpositive middle-state gas mass " +
                          std::to_string(mid.m),
                      -1, 0.0);
  return mid;
}

Flux2 flux_slope(const LiquidState& wm, const LiquidState& w0,
                 const LiquidState& wp, const GasState& u_left_node,
                 const GasState& u_right_node, const ModelParams& p) {
  const Flux2 fwd_hi = flux_liquid(wp, u_right_node.m, p);
  const Flux2 fwd_lo = flux_liquid(w0, u_right_node.m, p);
  const Flux2 bwd_hi = flux_liquid(w0, u_left_node.m, p);
  const Flux2 bwd_lo = flux_liquid(wm, u_left_node.m, p);
  return {minmod(fwd_hi[0] - fwd_lo[0], bwd_hi[0] - bwd_lo[0]),
          minmod(fwd_hi[1] - fwd_lo[1], bwd_hi[1] - bwd_lo[1])};
}

std::vector<LiquidState> nt_step(std::span<const LiquidState> w,
                                 std::span<const GasState> u, double lambda,
                                 const ModelParams& p) {
  const int n = static_cast<int>(w.size()) - 2 * kNtMidGhosts;
  if (n < 1)
    throw std::invalid_argument("nt_step: midpoint array too small");
  if (static_cast<int>(u.size()) != n + 1 + 2 * kNtNodeGhosts)
    throw std::invalid_argument("nt_step: node array size mismatch");

  // index helpers: wi(i) = w_{i+1/2}, un(j) = u_j, for interior i,j >= 0
  auto wi = [&](int i) -> const LiquidState& { return w[i + kNtMidGhosts]; };
  auto un = [&](int j) -> const GasState& { return u[j + kNtNodeGhosts]; };

  const int lo = -kNtMidGhosts;       // first available midpoint
  const int hi = n - 1 + kNtMidGhosts;  // last available midpoint

  auto at_cell = [&](const char* what, int i, auto&& fn) {
    try {
      return fn();
    } catch (const std::exception& e) {
      throw SolverError(std::string("nt_step: ") + what + " failed at cell " +
                            std::to_string(i) + ": " + e.what(),
                        i, 0.0);
    }
  };

  // staggered slopes w'_{j+1/2} = minmod(D w_{j+1}, (D w_{j+1} + D w_j)/2, D w_j)
  // with D w_j = w_{j+1/2} - w_{j-1/2}
  std::vector<Flux2> wslope(n + 2 * kNtMidGhosts - 2);
  auto ws = [&](int i) -> const Flux2& { return wslope[i - (lo + 1)]; };
  for (int i = lo + 1; i <= hi - 1; ++i) {
    Flux2 s;
    for (int k = 0; k < 2; ++k) {
      const double dr = (k == 0 ? wi(i + 1).m - wi(i).m : wi(i + 1).q - wi(i).q);
      const double dl = (k == 0 ? wi(i).m - wi(i - 1).m : wi(i).q - wi(i - 1).q);
      s[k] = minmod(dr, 0.5 * (dr + dl), dl);
    }
    wslope[i - (lo + 1)] = s;
  }

  // predictor states and their fluxes at the frozen interface gas state
  std::vector<Flux2> ghalf(n + 2 * kNtMidGhosts - 2);
  auto gh = [&](int i) -> const Flux2& { return ghalf[i - (lo + 1)]; };
  for (int i = lo + 1; i <= hi - 1; ++i) {
    ghalf[i - (lo + 1)] = at_cell("predictor flux", i, [&] {
      const Flux2 gs = flux_slope(wi(i - 1), wi(i), wi(i + 1), un(i), un(i + 1), p);
      const LiquidState pred{wi(i).m - 0.5 * lambda * gs[0],
                             wi(i).q - 0.5 * lambda * gs[1]};
      const GasState ustar = interface_gas_state(un(i), un(i + 1), p);
      return flux_liquid(pred, ustar.m, p);
    });
  }

  // staggered corrector differences Dw_{j+1/2}^{n+1} = w_{j+1}^{n+1} - w_j^{n+1}
  std::vector<Flux2> cdiff(n + 2 * kNtMidGhosts - 4);
  auto cd = [&](int i) -> const Flux2& { return cdiff[i - (lo + 2)]; };
  for (int i = lo + 2; i <= hi - 2; ++i) {
    Flux2 d;
    for (int k = 0; k < 2; ++k) {
      const double wp1 = (k == 0 ? wi(i + 1).m : wi(i + 1).q);
      const double wm1 = (k == 0 ? wi(i - 1).m : wi(i - 1).q);
      d[k] = 0.5 * (wp1 - wm1) -
             0.125 * (ws(i + 1)[k] - 2.0 * ws(i)[k] + ws(i - 1)[k]) -
             lambda * (gh(i + 1)[k] - 2.0 * gh(i)[k] + gh(i - 1)[k]);
    }
    cdiff[i - (lo + 2)] = d;
  }

  // nonstaggered node slopes w'_j = minmod(Dw_{j+1/2}^{n+1}, Dw_{j-1/2}^{n+1})
  std::vector<Flux2> nslope(n + 1);
  for (int j = 0; j <= n; ++j)
    for (int k = 0; k < 2; ++k)
      nslope[j][k] = minmod(cd(j)[k], cd(j - 1)[k]);

  std::vector<LiquidState> out(n);
  for (int i = 0; i < n; ++i) {
    Flux2 v;
    for (int k = 0; k < 2; ++k) {
      const double wp1 = (k == 0 ? wi(i + 1).m : wi(i + 1).q);
      const double w0 = (k == 0 ? wi(i).m : wi(i).q);
      const double wm1 = (k == 0 ? wi(i - 1).m : wi(i - 1).q);
      v[k] = 0.25 * (wp1 + 2.0 * w0 + wm1) -
             0.0625 * (ws(i + 1)[k] - ws(i - 1)[k]) -
             0.5 * lambda * (gh(i + 1)[k] - gh(i - 1)[k]) -
             0.125 * (nslope[i + 1][k] - nslope[i][k]);
    }
    out[i] = {v[0], v[1]};
  }
  return out;
}

}  // namespace pipeflow
