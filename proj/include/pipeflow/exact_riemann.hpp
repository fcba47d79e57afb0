#pragma once

#include <string>
#include <vector>

#include "pipeflow/model.hpp"
#include "pipeflow/numerics.hpp"

namespace pipeflow {

enum class WaveFamily { Mu1, Lambda1, Lambda2, Mu2 };
enum class WaveKind { Shock, Rarefaction };

const char* to_string(WaveFamily f);
const char* to_string(WaveKind k);

/// One wave of a self-similar solution. Shocks carry a speed; rarefactions
/// carry fan speeds [head, tail] and a trajectory of 4-component states
/// (m_G, q_G, m_L, q_L) parameterized by the characteristic speed xi.
/// A fan of zero width (equal adjacent states) is marked degenerate.
struct Wave {
  WaveFamily family = WaveFamily::Mu1;
  WaveKind kind = WaveKind::Shock;
  double speed = 0.0;
  double head = 0.0;
  double tail = 0.0;
  DenseTrajectory states;
  bool degenerate = false;

  double left_edge_speed() const {
    return kind == WaveKind::Shock ? speed : head;
  }
  double right_edge_speed() const {
    return kind == WaveKind::Shock ? speed : tail;
  }
};

/// One verified chain of strict inequalities from the construction,
/// values[0] > values[1] > ... when decreasing, < when increasing.
struct OrderingCheck {
  std::string name;
  std::vector<double> values;
  bool increasing = false;
  bool pass = false;
};

/// Constant states separated by waves, ordered left to right, with the
/// admissibility checks recorded during construction.
struct RiemannSolution {
  ModelParams params;
  std::vector<FullState> states;  // waves.size() + 1 entries
  std::vector<Wave> waves;
  std::vector<OrderingCheck> checks;
};

/// Free parameters of the all-shock construction. v_L_L pins the liquid
/// velocity scale (one more degree of freedom than masses alone).
struct ShockProblemSpec {
  double m_G_L, v_G_L, m_G_R;
  double m_L_L, v_L_L, m_L_prime, m_L_R;
};

/// Free parameters of the all-rarefaction construction; m_G_R fixes the
/// extent of the lambda_1 fan.
struct RarefactionProblemSpec {
  double m_G_L, v_G_L, m_G_R;
  double m_L_prime, v_L_prime;
  double m_L_L, m_L_R;
};

/// Magnitude of the velocity jump across a shock from the Rankine-Hugoniot
/// relation [v]^2 = [m][p] / (m^R m^L). The caller picks the sign branch
/// (the admissible branch has v decreasing left to right in both families).
double rh_velocity_jump(double mL, double mR, double pL, double pR);

/// s = [m v] / [m].
double shock_speed(double mL, double vL, double mR, double vR);

/// Liquid state riding a gas shock of speed s: root of
///   H(m) = (m / m_L') [P] - [m_L] (s - v_L')^2
/// with [P] = P(m_G^R, m) - P(m_G^L, m_L'), then the velocity from the mass
/// jump relation. Returns (m_L'', v_L'').
std::pair<double, double> solve_coupled_shock(double m_L_prime,
                                              double v_L_prime, double m_G_L,
                                              double m_G_R, double s,
                                              const ModelParams& p);

/// Velocity after following a mu-family rarefaction curve from
/// (m_from, v_from) to mass m_to at fixed gas mass:
///   v_to = v_from -/+ integral of sqrt(dP/dm_L)/xi, sign - for mu_1.
double mu_rarefaction_velocity(double m_from, double v_from, double m_to,
                               double m_G, WaveFamily family,
                               const ModelParams& p);

/// lambda_1 integral curve through `left`, parameterized by characteristic
/// speed (the eigenvector is normalized so grad(lambda) . r = 1), integrated
/// until m_G reaches m_G_target.
DenseTrajectory lambda_rarefaction_curve(const FullState& left,
                                         double m_G_target,
                                         const ModelParams& p);

RiemannSolution build_all_shock(const ShockProblemSpec& spec,
                                const ModelParams& p);

RiemannSolution build_all_rarefaction(const RarefactionProblemSpec& spec,
                                      const ModelParams& p);

/// Self-similar evaluation at (x, t). For t > 0 the state at xi = x/t;
/// exactly on a wave speed the left limit is returned. t <= 0 falls back to
/// the initial data convention (left for x <= 0, right for x > 0).
FullState sample(const RiemannSolution& sol, double x, double t);

}  // namespace pipeflow
