#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pipeflow/exact_riemann.hpp"

using namespace pipeflow;

namespace {
const ModelParams unit;

// full-precision reference chain for the all-shock test case, computed with
// 40-digit arithmetic from the construction equations
constexpr double kVGR = 1.276393202250021;
constexpr double kS = 0.3819660112501052;
constexpr double kVLp = 0.7487123616092960;
constexpr double kSLL = -2.266739299079152;
constexpr double kMLpp = 3.499453028996313;
constexpr double kVLpp = 0.7225694223521052;
constexpr double kVLR = 0.2475062571143696;
constexpr double kSLR = 3.576069977904304;

// reference chain for the all-rarefaction case (adaptive RK + quadrature at
// 1e-13 tolerance, independent implementation)
constexpr double kR_mGR = 0.2963;
constexpr double kR_vGR = 1.8000920925284625;
constexpr double kR_mLpp = 0.5695424549843344;
constexpr double kR_vLpp = 0.9566114882546266;
constexpr double kR_vLL = 0.4140844392306438;
constexpr double kR_vLR = 1.3019969363845305;

ShockProblemSpec exp1_spec() { return {2.0, 1.5, 2.5, 3.0, 1.0, 3.25, 3.0}; }
RarefactionProblemSpec exp2_spec() {
  return {0.4, 1.5, 0.2963, 0.5, 1.0, 0.7, 0.7};
}
}  // namespace

TEST_CASE("velocity jump across the reference gas shock") {
  const double j = rh_velocity_jump(2.0, 2.5, 2.0, 2.5);
  CHECK(j == doctest::Approx(std::sqrt(0.05)).epsilon(1e-14));
  CHECK(1.5 - j == doctest::Approx(1.2764).epsilon(1e-4));
}

TEST_CASE("velocity jump across the reference liquid shock") {
  const double j = rh_velocity_jump(3.0, 3.25, p_liquid(2.0, 3.0, unit),
                                    p_liquid(2.0, 3.25, unit));
  CHECK(j == doctest::Approx(0.2512876383907040).epsilon(1e-13));
  CHECK(1.0 - j == doctest::Approx(0.7487).epsilon(1e-4));
}

TEST_CASE("velocity jump vanishes for equal masses") {
  CHECK(rh_velocity_jump(3.0, 3.0, 1.0, 5.0) == 0.0);
}

TEST_CASE("velocity jump rejects a negative radicand") {
  CHECK_THROWS_AS(rh_velocity_jump(1.0, 2.0, 5.0, 1.0), ConstructionError);
}

TEST_CASE("shock speeds of the reference chain") {
  CHECK(shock_speed(2.0, 1.5, 2.5, kVGR) ==
        doctest::Approx(0.3820).epsilon(1e-4));
  CHECK(shock_speed(3.0, 1.0, 3.25, kVLp) ==
        doctest::Approx(-2.2667).epsilon(1e-4));
  CHECK(shock_speed(1.0, 0.7, 2.0, 0.7) == doctest::Approx(0.7));
  CHECK_THROWS_AS(shock_speed(2.0, 1.0, 2.0, 3.0), std::domain_error);
}

TEST_CASE("coupled shock solve reproduces the reference middle-right state") {
  const auto [m, v] = solve_coupled_shock(3.25, kVLp, 2.0, 2.5, kS, unit);
  CHECK(m == doctest::Approx(kMLpp).epsilon(1e-10));
  CHECK(v == doctest::Approx(kVLpp).epsilon(1e-10));

  // both Rankine-Hugoniot conditions hold across the liquid jump at speed s
  const double r1 = kS * (m - 3.25) - (m * v - 3.25 * kVLp);
  const double r2 = kS * (m * v - 3.25 * kVLp) -
                    (m * v * v - 3.25 * kVLp * kVLp) -
                    (p_liquid(2.5, m, unit) - p_liquid(2.0, 3.25, unit));
  CHECK(std::abs(r1) < 1e-8);
  CHECK(std::abs(r2) < 1e-8);
}

TEST_CASE("zero gas jump forces zero liquid jump") {
  const auto [m, v] = solve_coupled_shock(3.25, 0.7487, 2.0, 2.0, 0.5, unit);
  CHECK(m == 3.25);
  CHECK(v == 0.7487);
}

TEST_CASE("coupled shock root below m_L' is found when P_mG > 0") {
  // physical branch (m_L < rho_L): the liquid mass drops across the gas shock
  const double vGR = 1.5 - rh_velocity_jump(0.4, 0.5, 0.4, 0.5);
  const double s = shock_speed(0.4, 1.5, 0.5, vGR);
  const auto [m, v] = solve_coupled_shock(0.5, 1.0, 0.4, 0.5, s, unit);
  CHECK(m < 0.5);
  CHECK(m > 0.1);
  const double r1 = s * (m - 0.5) - (m * v - 0.5 * 1.0);
  CHECK(std::abs(r1) < 1e-10);
}

TEST_CASE("mu rarefaction velocities of the all-rarefaction chain") {
  CHECK(mu_rarefaction_velocity(0.5, 1.0, 0.7, 0.4, WaveFamily::Mu1, unit) ==
        doctest::Approx(kR_vLL).epsilon(1e-10));
  CHECK(mu_rarefaction_velocity(kR_mLpp, kR_vLpp, 0.7, kR_mGR,
                                WaveFamily::Mu2, unit) ==
        doctest::Approx(kR_vLR).epsilon(1e-8));
  CHECK(mu_rarefaction_velocity(0.5, 1.0, 0.5, 0.4, WaveFamily::Mu1, unit) ==
        1.0);
}

TEST_CASE("mu rarefaction reports hyperbolicity loss on the interval") {
  // dP/dm_L(7, m) < 0 around m = 3
  CHECK_THROWS_AS(
      mu_rarefaction_velocity(2.5, 0.0, 3.5, 7.0, WaveFamily::Mu1, unit),
      HyperbolicityError);
}

TEST_CASE("lambda curve with target equal to the left mass is a point") {
  const FullState left{{0.4, 0.6}, {0.5, 0.5}};
  const DenseTrajectory t = lambda_rarefaction_curve(left, 0.4, unit);
  CHECK(t.size() == 1);
  CHECK(t.front_xi() == doctest::Approx(0.5));
}

TEST_CASE("lambda curve reaches the reference end state") {
  const FullState left{{0.4, 0.4 * 1.5}, {0.5, 0.5 * 1.0}};
  const DenseTrajectory t = lambda_rarefaction_curve(left, kR_mGR, unit);
  const auto y = t.eval(t.back_xi());
  CHECK(y[0] == doctest::Approx(kR_mGR).epsilon(1e-10));
  CHECK(y[1] / y[0] == doctest::Approx(1.8).epsilon(1e-3));
  CHECK(y[2] == doctest::Approx(kR_mLpp).epsilon(1e-8));
  CHECK(y[3] / y[2] == doctest::Approx(kR_vLpp).epsilon(1e-8));
}

TEST_CASE("lambda curve parameterization: lambda_1(state(xi)) == xi at samples") {
  const FullState left{{0.4, 0.4 * 1.5}, {0.5, 0.5 * 1.0}};
  const DenseTrajectory t = lambda_rarefaction_curve(left, kR_mGR, unit);
  for (std::size_t k = 0; k < t.size(); ++k) {
    const auto& s = t[k];
    const double lam1 = s.y[1] / s.y[0] - 1.0;
    CHECK(lam1 == doctest::Approx(s.xi).epsilon(1e-8));
  }
}

TEST_CASE("lambda curve agrees with a fixed-step RK4 oracle") {
  const FullState left{{0.4, 0.4 * 1.5}, {0.5, 0.5 * 1.0}};
  const double xi0 = 0.5, xi1 = 0.5 + std::log(0.4 / kR_mGR);

  // classic RK4, 4000 steps, written directly against the curve equations
  std::array<double, 4> y{0.4, 0.6, 0.5, 0.5};
  auto f = [&](const std::array<double, 4>& s) {
    const double mG = s[0], vG = s[1] / s[0], mL = s[2], vL = s[3] / s[2];
    const double lam = vG - 1.0;
    const double c = dp_dm_g(mG, mL, unit) /
                     ((lam - vL) * (lam - vL) - dp_dm_l(mG, mL, unit));
    return std::array<double, 4>{-mG, -mG * lam, -mG * c, -mG * c * lam};
  };
  const int steps = 4000;
  const double h = (xi1 - xi0) / steps;
  for (int k = 0; k < steps; ++k) {
    const auto k1 = f(y);
    std::array<double, 4> t2, t3, t4;
    for (int i = 0; i < 4; ++i) t2[i] = y[i] + 0.5 * h * k1[i];
    const auto k2 = f(t2);
    for (int i = 0; i < 4; ++i) t3[i] = y[i] + 0.5 * h * k2[i];
    const auto k3 = f(t3);
    for (int i = 0; i < 4; ++i) t4[i] = y[i] + h * k3[i];
    const auto k4 = f(t4);
    for (int i = 0; i < 4; ++i)
      y[i] += h / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  }

  const DenseTrajectory t = lambda_rarefaction_curve(left, kR_mGR, unit);
  const auto got = t.eval(t.back_xi());
  for (int i = 0; i < 4; ++i)
    CHECK(got[i] == doctest::Approx(y[i]).epsilon(1e-8));
}

TEST_CASE("all-shock construction reproduces the reference chain") {
  const RiemannSolution sol = build_all_shock(exp1_spec(), unit);
  REQUIRE(sol.states.size() == 4);
  REQUIRE(sol.waves.size() == 3);

  CHECK(sol.states[2].gas.velocity() == doctest::Approx(kVGR).epsilon(1e-12));
  CHECK(sol.waves[1].speed == doctest::Approx(kS).epsilon(1e-12));
  CHECK(sol.states[1].liquid.velocity() ==
        doctest::Approx(kVLp).epsilon(1e-12));
  CHECK(sol.waves[0].speed == doctest::Approx(kSLL).epsilon(1e-12));
  CHECK(sol.states[2].liquid.m == doctest::Approx(kMLpp).epsilon(1e-10));
  CHECK(sol.states[2].liquid.velocity() ==
        doctest::Approx(kVLpp).epsilon(1e-10));
  CHECK(sol.states[3].liquid.velocity() ==
        doctest::Approx(kVLR).epsilon(1e-10));
  CHECK(sol.waves[2].speed == doctest::Approx(kSLR).epsilon(1e-10));

  // outermost states reproduce the spec inputs exactly
  CHECK(sol.states[0].gas.m == 2.0);
  CHECK(sol.states[0].gas.velocity() == 1.5);
  CHECK(sol.states[0].liquid.m == 3.0);
  CHECK(sol.states[0].liquid.velocity() == 1.0);
  CHECK(sol.states[3].gas.m == 2.5);
  CHECK(sol.states[3].liquid.m == 3.0);

  // every recorded admissibility check passed
  REQUIRE(!sol.checks.empty());
  for (const OrderingCheck& c : sol.checks) CHECK(c.pass);
}

TEST_CASE("all-shock Lax blocks carry the published values") {
  const RiemannSolution sol = build_all_shock(exp1_spec(), unit);
  const OrderingCheck* mu1 = nullptr;
  const OrderingCheck* lam = nullptr;
  const OrderingCheck* mu2 = nullptr;
  for (const OrderingCheck& c : sol.checks) {
    if (c.name.rfind("mu1 Lax", 0) == 0) mu1 = &c;
    if (c.name.rfind("lambda1 Lax", 0) == 0) lam = &c;
    if (c.name.rfind("mu2 Lax", 0) == 0) mu2 = &c;
  }
  REQUIRE(mu1);
  REQUIRE(lam);
  REQUIRE(mu2);
  const double tol = 5e-4;
  CHECK(std::abs(mu1->values[0] - (-2.0)) < tol);
  CHECK(std::abs(mu1->values[1] - (-2.2667)) < tol);
  CHECK(std::abs(mu1->values[2] - (-2.5283)) < tol);
  CHECK(std::abs(lam->values[0] - 0.5) < tol);
  CHECK(std::abs(lam->values[1] - 0.3820) < tol);
  CHECK(std::abs(lam->values[2] - 0.2764) < tol);
  CHECK(std::abs(mu2->values[0] - 4.0798) < tol);
  CHECK(std::abs(mu2->values[1] - 3.5761) < tol);
  CHECK(std::abs(mu2->values[2] - 3.0537) < tol);
}

TEST_CASE("all-shock construction rejects a zero gas jump") {
  ShockProblemSpec spec = exp1_spec();
  spec.m_G_R = spec.m_G_L;
  CHECK_THROWS_AS(build_all_shock(spec, unit), ConstructionError);
}

TEST_CASE("every constructed shock satisfies both RH conditions directly") {
  const RiemannSolution sol = build_all_shock(exp1_spec(), unit);
  for (std::size_t i = 0; i < sol.waves.size(); ++i) {
    const Wave& w = sol.waves[i];
    REQUIRE(w.kind == WaveKind::Shock);
    const FullState& L = sol.states[i];
    const FullState& R = sol.states[i + 1];
    // liquid RH (every wave of this chain jumps in the liquid)
    const double mj = R.liquid.m - L.liquid.m;
    const double qj = R.liquid.q - L.liquid.q;
    const double PL = p_liquid(L.gas.m, L.liquid.m, unit);
    const double PR = p_liquid(R.gas.m, R.liquid.m, unit);
    CHECK(std::abs(w.speed * mj - qj) < 1e-8);
    CHECK(std::abs(w.speed * qj -
                   (R.liquid.q * R.liquid.velocity() -
                    L.liquid.q * L.liquid.velocity() + PR - PL)) < 1e-8);
    if (w.family == WaveFamily::Lambda1) {
      const double gmj = R.gas.m - L.gas.m;
      const double gqj = R.gas.q - L.gas.q;
      CHECK(std::abs(w.speed * gmj - gqj) < 1e-8);
      CHECK(std::abs(w.speed * gqj -
                     (R.gas.q * R.gas.velocity() - L.gas.q * L.gas.velocity() +
                      p_gas(R.gas.m, unit) - p_gas(L.gas.m, unit))) < 1e-8);
    } else {
      CHECK(L.gas.m == R.gas.m);
      CHECK(L.gas.q == R.gas.q);
    }
  }
}

TEST_CASE("all-rarefaction construction reproduces the reference chain") {
  const RiemannSolution sol = build_all_rarefaction(exp2_spec(), unit);
  REQUIRE(sol.states.size() == 4);
  REQUIRE(sol.waves.size() == 3);

  CHECK(sol.states[2].gas.m == doctest::Approx(kR_mGR).epsilon(1e-10));
  CHECK(sol.states[2].gas.velocity() ==
        doctest::Approx(kR_vGR).epsilon(1e-10));
  CHECK(sol.states[2].liquid.m == doctest::Approx(kR_mLpp).epsilon(1e-8));
  CHECK(sol.states[2].liquid.velocity() ==
        doctest::Approx(kR_vLpp).epsilon(1e-8));
  CHECK(sol.states[0].liquid.velocity() ==
        doctest::Approx(kR_vLL).epsilon(1e-8));
  CHECK(sol.states[3].liquid.velocity() ==
        doctest::Approx(kR_vLR).epsilon(1e-8));

  // published fan edges, in increasing order
  const double want[6] = {-1.8441, -0.4053, 0.5, 0.8, 2.3936, 3.2941};
  const double got[6] = {sol.waves[0].head, sol.waves[0].tail,
                         sol.waves[1].head, sol.waves[1].tail,
                         sol.waves[2].head, sol.waves[2].tail};
  for (int k = 0; k < 6; ++k) CHECK(std::abs(got[k] - want[k]) < 1e-3);
  for (int k = 0; k + 1 < 6; ++k) CHECK(got[k] < got[k + 1]);
}

TEST_CASE("gas components are constant across both mu fans") {
  const RiemannSolution sol = build_all_rarefaction(exp2_spec(), unit);
  for (const std::size_t i : {std::size_t{0}, std::size_t{2}}) {
    const Wave& w = sol.waves[i];
    REQUIRE(w.kind == WaveKind::Rarefaction);
    for (std::size_t k = 0; k < w.states.size(); ++k) {
      CHECK(w.states[k].y[0] == sol.states[i].gas.m);
      CHECK(w.states[k].y[1] == sol.states[i].gas.q);
    }
  }
}

TEST_CASE("degenerate construction: all fans of zero width") {
  // prime state equal to the left state, zero gas jump, right mass equal
  // to the (unchanged) middle mass: left state == right state
  const RarefactionProblemSpec spec{0.4, 1.5, 0.4, 0.5, 1.0, 0.5, 0.5};
  const RiemannSolution sol = build_all_rarefaction(spec, unit);
  for (const Wave& w : sol.waves) CHECK(w.degenerate);
  CHECK(sol.states.front().gas.m == sol.states.back().gas.m);
  CHECK(sol.states.front().liquid.m == sol.states.back().liquid.m);
  CHECK(sol.states.front().liquid.velocity() ==
        doctest::Approx(sol.states.back().liquid.velocity()).epsilon(1e-14));
}

TEST_CASE("overlapping fans are a construction failure") {
  // m_L^L < m_L' makes the mu1 'fan' a compression: head > tail
  const RarefactionProblemSpec spec{0.4, 1.5, 0.2963, 0.5, 1.0, 0.3, 0.7};
  CHECK_THROWS_AS(build_all_rarefaction(spec, unit), ConstructionError);
}

TEST_CASE("sampling the all-shock solution") {
  const RiemannSolution sol = build_all_shock(exp1_spec(), unit);
  const FullState far_left = sample(sol, -3.0, 1.0);
  CHECK(far_left.gas.m == 2.0);
  CHECK(far_left.gas.velocity() == 1.5);
  CHECK(far_left.liquid.m == 3.0);
  CHECK(far_left.liquid.velocity() == 1.0);

  const FullState mid = sample(sol, 0.0, 1.0);
  CHECK(mid.gas.m == 2.0);
  CHECK(mid.liquid.m == 3.25);
  CHECK(mid.liquid.velocity() == doctest::Approx(0.7487).epsilon(1e-4));

  const FullState right = sample(sol, 4.0, 1.0);
  CHECK(right.liquid.m == 3.0);
}

TEST_CASE("sampling at t = 0 uses the initial-jump convention") {
  const RiemannSolution sol = build_all_shock(exp1_spec(), unit);
  CHECK(sample(sol, -1.0, 0.0).gas.m == 2.0);
  CHECK(sample(sol, 0.0, 0.0).gas.m == 2.0);
  CHECK(sample(sol, 1.0, 0.0).gas.m == 2.5);
}

TEST_CASE("sampling inside the lambda fan hits the self-similarity identity") {
  const RiemannSolution sol = build_all_rarefaction(exp2_spec(), unit);
  const FullState s = sample(sol, 0.65, 1.0);
  CHECK(s.gas.velocity() - 1.0 == doctest::Approx(0.65).epsilon(1e-8));
}

TEST_CASE("sampling inside the mu fans inverts the characteristic speed") {
  const RiemannSolution sol = build_all_rarefaction(exp2_spec(), unit);
  for (const double xi : {-1.5, -0.9, 2.6, 3.1}) {
    const FullState s = sample(sol, xi, 1.0);
    const auto [m1, m2] = eigen_liquid(s.liquid, s.gas.m, unit);
    const double mu = xi < 0 ? m1 : m2;
    CHECK(mu == doctest::Approx(xi).epsilon(1e-8));
  }
}

TEST_CASE("samples are constant along rays") {
  for (const bool shock : {true, false}) {
    const RiemannSolution sol =
        shock ? build_all_shock(exp1_spec(), unit)
              : build_all_rarefaction(exp2_spec(), unit);
    for (int k = 0; k <= 20; ++k) {
      const double xi = -4.0 + 8.0 * k / 20.0;
      const FullState a = sample(sol, xi * 1.0, 1.0);
      const FullState b = sample(sol, xi * 2.0, 2.0);
      CHECK(std::abs(a.gas.m - b.gas.m) < 1e-10);
      CHECK(std::abs(a.gas.q - b.gas.q) < 1e-10);
      CHECK(std::abs(a.liquid.m - b.liquid.m) < 1e-10);
      CHECK(std::abs(a.liquid.q - b.liquid.q) < 1e-10);
    }
  }
}
