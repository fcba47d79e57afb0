#include "pipeflow/exact_riemann.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace pipeflow {

const char* to_string(WaveFamily f) {
  switch (f) {
    case WaveFamily::Mu1: return "mu1";
    case WaveFamily::Lambda1: return "lambda1";
    case WaveFamily::Lambda2: return "lambda2";
    case WaveFamily::Mu2: return "mu2";
  }
  return "?";
}

const char* to_string(WaveKind k) {
  return k == WaveKind::Shock ? "shock" : "rarefaction";
}

namespace {

constexpr double kMuQuadTol = 1e-12;
constexpr double kLambdaOdeTol = 1e-12;
constexpr double kFanRootTol = 1e-10;

void record_check(std::vector<OrderingCheck>& checks, std::string name,
                  std::vector<double> values, bool increasing) {
  OrderingCheck c{std::move(name), std::move(values), increasing, true};
  for (std::size_t i = 0; i + 1 < c.values.size(); ++i) {
    const bool ok = increasing ? c.values[i] < c.values[i + 1]
                               : c.values[i] > c.values[i + 1];
    if (!ok) c.pass = false;
  }
  checks.push_back(c);
  if (!c.pass) {
    std::ostringstream os;
    os << "construction check failed: " << c.name << " (values";
    for (const double v : c.values) os << ' ' << v;
    os << " not strictly " << (increasing ? "increasing" : "decreasing") << ')';
    throw ConstructionError(os.str());
  }
}

void check_segment_avoids_rho(double m_a, double m_b, const ModelParams& p,
                              const char* what) {
  if (std::min(m_a, m_b) <= p.rho_L && p.rho_L <= std::max(m_a, m_b))
    throw SingularityError(std::string(what) +
                           ": liquid mass interval crosses rho_L");
}

}  // namespace

double rh_velocity_jump(double mL, double mR, double pL, double pR) {
  if (!(mL > 0.0) || !(mR > 0.0))
    throw std::domain_error("rh_velocity_jump: masses must be positive");
  const double rad = (mR - mL) * (pR - pL) / (mR * mL);
  if (rad < 0.0)
    throw ConstructionError(
        "rh_velocity_jump: negative radicand, no Hugoniot connection");
  return std::sqrt(rad);
}

double shock_speed(double mL, double vL, double mR, double vR) {
  if (mL == mR)
    throw std::domain_error("shock_speed: degenerate jump (mL == mR)");
  return (mR * vR - mL * vL) / (mR - mL);
}

std::pair<double, double> solve_coupled_shock(double m_L_prime,
                                              double v_L_prime, double m_G_L,
                                              double m_G_R, double s,
                                              const ModelParams& p) {
  check_liquid_state({m_L_prime, m_L_prime * v_L_prime}, p);
  const double P_left = p_liquid(m_G_L, m_L_prime, p);
  const double dv2 = (s - v_L_prime) * (s - v_L_prime);

  auto H = [&](double m) {
    return (m / m_L_prime) * (p_liquid(m_G_R, m, p) - P_left) -
           (m - m_L_prime) * dv2;
  };

  if (m_G_L == m_G_R) return {m_L_prime, v_L_prime};  // H(m_L') = 0 exactly

  // Expand a bracket around m_L' (the root branch continuous in the gas
  // jump), staying on m_L's side of the rho_L pole and within ratio 10.
  const double pole = p.rho_L;
  const double hi_cap =
      m_L_prime < pole ? std::min(10.0 * m_L_prime, pole * (1.0 - 1e-9))
                       : 10.0 * m_L_prime;
  const double lo_cap =
      m_L_prime > pole ? std::max(0.1 * m_L_prime, pole * (1.0 + 1e-9))
                       : 0.1 * m_L_prime;

  const double h0 = H(m_L_prime);
  if (h0 == 0.0) return {m_L_prime, v_L_prime};

  double root = 0.0;
  bool found = false;
  for (double delta = 1.0 / 64.0; delta <= 16.0; delta *= 2.0) {
    const double hi = std::min(m_L_prime * (1.0 + delta), hi_cap);
    if (hi > m_L_prime && H(hi) * h0 < 0.0) {
      root = bracketed_root(H, m_L_prime, hi, 1e-13);
      found = true;
      break;
    }
    const double lo = std::max(m_L_prime / (1.0 + delta), lo_cap);
    if (lo < m_L_prime && H(lo) * h0 < 0.0) {
      root = bracketed_root(H, lo, m_L_prime, 1e-13);
      found = true;
      break;
    }
    if (hi >= hi_cap && lo <= lo_cap) break;
  }
  if (!found)
    throw ConstructionError(
        "solve_coupled_shock: no root of H near m_L' (searched up to ratio 10 "
        "on both sides)");

  const double m_L_dprime = root;
  // second equivalence: [v_L] = (s - v_L^L) [m_L] / m_L^R
  const double v_L_dprime =
      v_L_prime + (s - v_L_prime) * (m_L_dprime - m_L_prime) / m_L_dprime;
  return {m_L_dprime, v_L_dprime};
}

double mu_rarefaction_velocity(double m_from, double v_from, double m_to,
                               double m_G, WaveFamily family,
                               const ModelParams& p) {
  if (family != WaveFamily::Mu1 && family != WaveFamily::Mu2)
    throw std::invalid_argument("mu_rarefaction_velocity: mu family required");
  if (!(m_from > 0.0) || !(m_to > 0.0) || !(m_G > 0.0))
    throw std::domain_error("mu_rarefaction_velocity: masses must be positive");
  if (m_to == m_from) return v_from;
  check_segment_avoids_rho(m_from, m_to, p, "mu_rarefaction_velocity");

  const double sign = family == WaveFamily::Mu1 ? -1.0 : 1.0;
  const double integral = integrate_to_tol(
      [&](double m) {
        const double dp = dp_dm_l(m_G, m, p);
        if (!(dp > 0.0))
          throw HyperbolicityError(
              "mu_rarefaction_velocity: dP/dm_L <= 0 on the mass interval");
        return std::sqrt(dp) / m;
      },
      m_from, m_to, kMuQuadTol);
  return v_from + sign * integral;
}

DenseTrajectory lambda_rarefaction_curve(const FullState& left,
                                         double m_G_target,
                                         const ModelParams& p) {
  check_gas_state(left.gas, p);
  check_liquid_state(left.liquid, p);
  const double cg = std::sqrt(p.C_G);
  const double xi0 = eigen_gas(left.gas, p).first;  // lambda_1(left)

  std::vector<double> y0 = {left.gas.m, left.gas.q, left.liquid.m,
                            left.liquid.q};
  if (!(m_G_target > 0.0))
    throw IntegrationError("lambda_rarefaction_curve: target gas mass must be positive",
                           xi0);

  auto rhs = [&p, cg](double xi, const std::vector<double>& y,
                      std::vector<double>& dy) {
    const double m_G = y[0], q_G = y[1], m_L = y[2], q_L = y[3];
    if (!(m_G > 0.0) || !(m_L > 0.0))
      throw IntegrationError("lambda_rarefaction_curve: mass left the domain", xi);
    const double v_G = q_G / m_G, v_L = q_L / m_L;
    const double lam = v_G - 1.0 / cg;
    const double denom = (lam - v_L) * (lam - v_L) - dp_dm_l(m_G, m_L, p);
    if (std::abs(denom) < 1e-8)
      throw ResonanceError(
          "lambda_rarefaction_curve: mu eigenvalue resonates with lambda_1",
          xi);
    const double c = dp_dm_g(m_G, m_L, p) / denom;
    // eigenvector (1, lambda, c, c lambda) scaled by -m_G sqrt(C_G) so that
    // grad(lambda_1) . r = 1 and xi is the characteristic speed
    const double scale = -m_G * cg;
    dy = {scale, scale * lam, scale * c, scale * c * lam};
  };

  if (m_G_target == left.gas.m) {
    DenseTrajectory traj;
    std::vector<double> dy(4);
    rhs(xi0, y0, dy);
    traj.append(xi0, y0, dy);
    return traj;
  }

  // p'' = 0, so m_G decays exponentially in xi and the end parameter is known
  const double xi1 = xi0 + std::log(left.gas.m / m_G_target) / cg;
  return integrate_ode(rhs, y0, xi0, xi1, kLambdaOdeTol);
}

namespace {

FullState traj_endpoint_state(const DenseTrajectory& traj) {
  const auto& s = traj[traj.size() - 1];
  return {{s.y[0], s.y[1]}, {s.y[2], s.y[3]}};
}

// dm/dxi and d(m v)/dxi along a mu integral curve parameterized by the
// characteristic speed; used for the Hermite data of fan sample tables.
std::array<double, 2> mu_curve_slope(double m, double v, double m_G,
                                     WaveFamily family, const ModelParams& p) {
  const double sign = family == WaveFamily::Mu1 ? -1.0 : 1.0;
  const double dp = dp_dm_l(m_G, m, p);
  const double sq = std::sqrt(dp);
  const double r = p.rho_L;
  // d(dP/dm_L)/dm_L
  const double dp2 = 2.0 * m_G * r / ((r - m) * (r - m) * (r - m) * p.C_G) -
                     m_G / (r * r) + 3.0 * m / (r * r);
  const double mu = v + sign * sq;
  const double dmu_dm = sign * (sq / m) + sign * dp2 / (2.0 * sq);
  const double dm_dxi = 1.0 / dmu_dm;
  return {dm_dxi, mu * dm_dxi};
}

// Sample table across a mu fan: states at uniformly spaced liquid masses,
// parameterized by the local characteristic speed.
DenseTrajectory mu_fan_trajectory(const FullState& left, double m_to,
                                  double v_to, WaveFamily family,
                                  const ModelParams& p) {
  DenseTrajectory traj;
  const int K = 32;
  const double m_from = left.liquid.m, v_from = left.liquid.velocity();
  for (int k = 0; k <= K; ++k) {
    const double m = m_from + (m_to - m_from) * k / K;
    const double v = k == 0 ? v_from
                     : k == K ? v_to
                              : mu_rarefaction_velocity(m_from, v_from, m,
                                                        left.gas.m, family, p);
    const double sign = family == WaveFamily::Mu1 ? -1.0 : 1.0;
    const double xi = v + sign * std::sqrt(dp_dm_l(left.gas.m, m, p));
    const auto slope = mu_curve_slope(m, v, left.gas.m, family, p);
    traj.append(xi, {left.gas.m, left.gas.q, m, m * v},
                {0.0, 0.0, slope[0], slope[1]});
  }
  return traj;
}

bool fan_is_degenerate(double head, double tail) {
  return std::abs(tail - head) <=
         1e-12 * std::max({1.0, std::abs(head), std::abs(tail)});
}

}  // namespace

RiemannSolution build_all_shock(const ShockProblemSpec& spec,
                                const ModelParams& p) {
  RiemannSolution sol;
  sol.params = p;

  const GasState gas_L{spec.m_G_L, spec.m_G_L * spec.v_G_L};
  check_gas_state(gas_L, p);
  if (!(spec.m_G_R > 0.0) || !(spec.m_L_L > 0.0) || !(spec.m_L_prime > 0.0) ||
      !(spec.m_L_R > 0.0))
    throw std::domain_error("build_all_shock: spec masses must be positive");
  if (spec.m_G_R == spec.m_G_L)
    throw ConstructionError(
        "build_all_shock: zero gas jump, no lambda_1 shock exists (step 2)");

  // step (2): gas lambda_1 Lax shock
  const double jump_g = rh_velocity_jump(spec.m_G_L, spec.m_G_R,
                                         p_gas(spec.m_G_L, p),
                                         p_gas(spec.m_G_R, p));
  const double v_G_R = spec.v_G_L - jump_g;
  const double s = shock_speed(spec.m_G_L, spec.v_G_L, spec.m_G_R, v_G_R);
  const GasState gas_R{spec.m_G_R, spec.m_G_R * v_G_R};
  record_check(sol.checks, "lambda1 Lax: lambda1(L) > s > lambda1(R)",
               {eigen_gas(gas_L, p).first, s, eigen_gas(gas_R, p).first},
               false);

  // step (3): left-going mu_1 liquid shock at the left gas mass
  check_segment_avoids_rho(spec.m_L_L, spec.m_L_prime, p, "build_all_shock mu1");
  const double jump_1 = rh_velocity_jump(spec.m_L_L, spec.m_L_prime,
                                         p_liquid(spec.m_G_L, spec.m_L_L, p),
                                         p_liquid(spec.m_G_L, spec.m_L_prime, p));
  const double v_L_prime = spec.v_L_L - jump_1;
  const double s_L_L =
      shock_speed(spec.m_L_L, spec.v_L_L, spec.m_L_prime, v_L_prime);
  const LiquidState liq_L{spec.m_L_L, spec.m_L_L * spec.v_L_L};
  const LiquidState liq_ML{spec.m_L_prime, spec.m_L_prime * v_L_prime};
  record_check(sol.checks, "mu1 Lax: mu1(L) > s_L^L > mu1(ML)",
               {eigen_liquid(liq_L, spec.m_G_L, p).first, s_L_L,
                eigen_liquid(liq_ML, spec.m_G_L, p).first},
               false);
  record_check(sol.checks, "wave ordering: s_L^L < s", {s_L_L, s}, true);

  // step (4): liquid jump riding the gas shock
  const auto [m_L_dprime, v_L_dprime] =
      solve_coupled_shock(spec.m_L_prime, v_L_prime, spec.m_G_L, spec.m_G_R, s,
                          p);
  const LiquidState liq_MR{m_L_dprime, m_L_dprime * v_L_dprime};

  // step (5)
  record_check(sol.checks, "step (5): mu2(MR) > s",
               {eigen_liquid(liq_MR, spec.m_G_R, p).second, s}, false);

  // step (6): right-going mu_2 liquid shock at the right gas mass
  check_segment_avoids_rho(m_L_dprime, spec.m_L_R, p, "build_all_shock mu2");
  const double jump_2 = rh_velocity_jump(m_L_dprime, spec.m_L_R,
                                         p_liquid(spec.m_G_R, m_L_dprime, p),
                                         p_liquid(spec.m_G_R, spec.m_L_R, p));
  const double v_L_R = v_L_dprime - jump_2;
  const double s_L_R = shock_speed(m_L_dprime, v_L_dprime, spec.m_L_R, v_L_R);
  const LiquidState liq_R{spec.m_L_R, spec.m_L_R * v_L_R};
  record_check(sol.checks, "mu2 Lax: mu2(MR) > s_L^R > mu2(R)",
               {eigen_liquid(liq_MR, spec.m_G_R, p).second, s_L_R,
                eigen_liquid(liq_R, spec.m_G_R, p).second},
               false);
  record_check(sol.checks, "wave ordering: s < s_L^R", {s, s_L_R}, true);

  sol.states = {FullState{gas_L, liq_L}, FullState{gas_L, liq_ML},
                FullState{gas_R, liq_MR}, FullState{gas_R, liq_R}};
  Wave w1{WaveFamily::Mu1, WaveKind::Shock, s_L_L, 0, 0, {}, false};
  Wave w2{WaveFamily::Lambda1, WaveKind::Shock, s, 0, 0, {}, false};
  Wave w3{WaveFamily::Mu2, WaveKind::Shock, s_L_R, 0, 0, {}, false};
  sol.waves = {std::move(w1), std::move(w2), std::move(w3)};
  return sol;
}

RiemannSolution build_all_rarefaction(const RarefactionProblemSpec& spec,
                                      const ModelParams& p) {
  RiemannSolution sol;
  sol.params = p;

  const GasState gas_L{spec.m_G_L, spec.m_G_L * spec.v_G_L};
  const LiquidState liq_ML{spec.m_L_prime, spec.m_L_prime * spec.v_L_prime};
  check_gas_state(gas_L, p);
  check_liquid_state(liq_ML, p);
  if (!(spec.m_G_R > 0.0) || !(spec.m_L_L > 0.0) || !(spec.m_L_R > 0.0))
    throw std::domain_error("build_all_rarefaction: spec masses must be positive");

  // step (2): lambda_1 fan through (gas left, liquid prime) down to m_G^R
  const FullState fan_left{gas_L, liq_ML};
  DenseTrajectory lam_traj = lambda_rarefaction_curve(fan_left, spec.m_G_R, p);
  const FullState fan_right = traj_endpoint_state(lam_traj);
  const GasState gas_R = fan_right.gas;
  const LiquidState liq_MR = fan_right.liquid;

  // step (3): mu_1 fan from (m_L^L, v_L^L) to (m_L', v_L') at the left gas mass
  const double v_L_L = mu_rarefaction_velocity(
      spec.m_L_prime, spec.v_L_prime, spec.m_L_L, spec.m_G_L, WaveFamily::Mu1, p);
  const LiquidState liq_L{spec.m_L_L, spec.m_L_L * v_L_L};

  // step (4): mu_2 fan from (m_L'', v_L'') to (m_L^R, v_L^R) at the right gas mass
  const double v_L_R = mu_rarefaction_velocity(
      liq_MR.m, liq_MR.velocity(), spec.m_L_R, gas_R.m, WaveFamily::Mu2, p);
  const LiquidState liq_R{spec.m_L_R, spec.m_L_R * v_L_R};

  const double mu1_head = eigen_liquid(liq_L, spec.m_G_L, p).first;
  const double mu1_tail = eigen_liquid(liq_ML, spec.m_G_L, p).first;
  const double lam_head = eigen_gas(gas_L, p).first;
  const double lam_tail = eigen_gas(gas_R, p).first;
  const double mu2_head = eigen_liquid(liq_MR, gas_R.m, p).second;
  const double mu2_tail = eigen_liquid(liq_R, gas_R.m, p).second;

  Wave w1{WaveFamily::Mu1, WaveKind::Rarefaction, 0, mu1_head, mu1_tail,
          {}, fan_is_degenerate(mu1_head, mu1_tail)};
  Wave w2{WaveFamily::Lambda1, WaveKind::Rarefaction, 0, lam_head, lam_tail,
          std::move(lam_traj), fan_is_degenerate(lam_head, lam_tail)};
  Wave w3{WaveFamily::Mu2, WaveKind::Rarefaction, 0, mu2_head, mu2_tail,
          {}, fan_is_degenerate(mu2_head, mu2_tail)};
  if (!w1.degenerate)
    w1.states = mu_fan_trajectory({gas_L, liq_L}, spec.m_L_prime,
                                  spec.v_L_prime, WaveFamily::Mu1, p);
  if (!w3.degenerate)
    w3.states = mu_fan_trajectory({gas_R, liq_MR}, spec.m_L_R, v_L_R,
                                  WaveFamily::Mu2, p);

  // every non-degenerate fan must spread and the fans must not overlap
  std::vector<double> speeds;
  for (const Wave* w : {&w1, &w2, &w3})
    if (!w->degenerate) {
      speeds.push_back(w->head);
      speeds.push_back(w->tail);
    }
  if (!speeds.empty())
    record_check(sol.checks, "fan ordering: mu1 < lambda1 < mu2 fan speeds",
                 speeds, true);

  sol.states = {FullState{gas_L, liq_L}, FullState{gas_L, liq_ML},
                FullState{gas_R, liq_MR}, FullState{gas_R, liq_R}};
  sol.waves = {std::move(w1), std::move(w2), std::move(w3)};
  return sol;
}

namespace {

FullState fan_state_at(const RiemannSolution& sol, std::size_t wave_idx,
                       double xi) {
  const Wave& w = sol.waves[wave_idx];
  if (w.family == WaveFamily::Lambda1 || w.family == WaveFamily::Lambda2) {
    const auto y = w.states.eval(xi);
    return {{y[0], y[1]}, {y[2], y[3]}};
  }
  // mu fan: gas constant; invert mu(m_L) = xi along the integral curve
  const FullState& left = sol.states[wave_idx];
  const FullState& right = sol.states[wave_idx + 1];
  const double m_G = left.gas.m;
  const double m_from = left.liquid.m, v_from = left.liquid.velocity();
  const double sign = w.family == WaveFamily::Mu1 ? -1.0 : 1.0;
  auto mu_of_m = [&](double m) {
    const double v =
        mu_rarefaction_velocity(m_from, v_from, m, m_G, w.family, sol.params);
    return v + sign * std::sqrt(dp_dm_l(m_G, m, sol.params)) - xi;
  };
  const double lo = std::min(m_from, right.liquid.m);
  const double hi = std::max(m_from, right.liquid.m);
  const double m = bracketed_root(mu_of_m, lo, hi, kFanRootTol);
  const double v =
      mu_rarefaction_velocity(m_from, v_from, m, m_G, w.family, sol.params);
  return {left.gas, {m, m * v}};
}

}  // namespace

FullState sample(const RiemannSolution& sol, double x, double t) {
  if (sol.states.empty()) throw std::invalid_argument("sample: empty solution");
  if (!(t > 0.0)) return x <= 0.0 ? sol.states.front() : sol.states.back();
  const double xi = x / t;
  for (std::size_t i = 0; i < sol.waves.size(); ++i) {
    const Wave& w = sol.waves[i];
    if (xi <= w.left_edge_speed()) return sol.states[i];
    if (w.kind == WaveKind::Rarefaction && !w.degenerate && xi < w.tail)
      return fan_state_at(sol, i, xi);
  }
  return sol.states.back();
}

}  // namespace pipeflow
