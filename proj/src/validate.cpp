#include "pipeflow/validate.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <sstream>

#include "pipeflow/io.hpp"
#include "pipeflow/nt.hpp"
#include "pipeflow/roe.hpp"

namespace pipeflow {

bool ValidationReport::all_pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

constexpr int kPairs = 10000;

// Roe properties (2) and (3) for the gas phase over random admissible pairs.
CheckResult check_gas_roe(const FaultInjection& fault) {
  const ModelParams p;
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> mass(0.1, 5.0), vel(-3.0, 3.0);

  double worst_jump = 0.0, worst_consistency = 0.0;
  for (int i = 0; i < kPairs; ++i) {
    const GasState uL{mass(rng), 0.0}, uR{mass(rng), 0.0};
    const GasState a{uL.m, uL.m * vel(rng)}, b{uR.m, uR.m * vel(rng)};
    RoeData d = roe_data_gas(a, b, p);
    if (fault.gas_roe_sign) {
      // the typo variant: lower-left entry -u^2 - 1/C_G
      d.a[1][0] = -d.ubar * d.ubar - 1.0 / p.C_G;
    }
    const Flux2 fa = flux_gas(a, p), fb = flux_gas(b, p);
    for (int r = 0; r < 2; ++r) {
      const double lhs = d.a[r][0] * (b.m - a.m) + d.a[r][1] * (b.q - a.q);
      worst_jump = std::max(worst_jump, std::abs(lhs - (fb[r] - fa[r])));
    }
    // consistency at the midpoint state against the analytic Jacobian
    RoeData dc = roe_data_gas(a, a, p);
    if (fault.gas_roe_sign) dc.a[1][0] = -dc.ubar * dc.ubar - 1.0 / p.C_G;
    const double v = a.velocity();
    const Mat2 jac{{{0.0, 1.0}, {1.0 / p.C_G - v * v, 2.0 * v}}};
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        worst_consistency =
            std::max(worst_consistency, std::abs(dc.a[r][c] - jac[r][c]));
  }
  CheckResult res;
  res.name = "gas Roe properties (2)+(3), " + std::to_string(kPairs) + " pairs";
  res.pass = worst_jump <= 1e-8 && worst_consistency <= 1e-10;
  res.detail = "max jump residual " + fmt15(worst_jump) +
               ", max Jacobian deviation " + fmt15(worst_consistency);
  return res;
}

CheckResult check_liquid_roe(const FaultInjection& fault) {
  const ModelParams p;
  const Quadrature quad(fault.quad_order > 0 ? fault.quad_order : 16,
                        fault.quad_panels > 0 ? fault.quad_panels : 4);
  std::mt19937 rng(54321);
  std::uniform_real_distribution<double> low(0.1, 0.9 * p.rho_L);
  std::uniform_real_distribution<double> high(1.1 * p.rho_L, 4.0 * p.rho_L);
  std::uniform_real_distribution<double> gas(0.1, 5.0), vel(-3.0, 3.0);

  double worst_jump = 0.0, worst_consistency = 0.0;
  for (int i = 0; i < kPairs; ++i) {
    const bool high_branch = i % 2 == 0;
    const double mA = high_branch ? high(rng) : low(rng);
    const double mB = high_branch ? high(rng) : low(rng);
    const LiquidState a{mA, mA * vel(rng)}, b{mB, mB * vel(rng)};
    const double m_G = gas(rng);
    const RoeData d = roe_data_liquid(a, b, m_G, p, quad);
    const Flux2 fa = flux_liquid(a, m_G, p), fb = flux_liquid(b, m_G, p);
    for (int r = 0; r < 2; ++r) {
      const double lhs = d.a[r][0] * (b.m - a.m) + d.a[r][1] * (b.q - a.q);
      worst_jump = std::max(worst_jump, std::abs(lhs - (fb[r] - fa[r])));
    }
    const RoeData dc = roe_data_liquid(a, a, m_G, p, quad);
    const double v = a.velocity();
    const double dp = dp_dm_l(m_G, a.m, p);
    const Mat2 jac{{{0.0, 1.0}, {dp - v * v, 2.0 * v}}};
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        worst_consistency =
            std::max(worst_consistency, std::abs(dc.a[r][c] - jac[r][c]));
  }
  CheckResult res;
  res.name = "liquid Roe properties (2)+(3), " + std::to_string(kPairs) + " pairs";
  res.pass = worst_jump <= 1e-8 && worst_consistency <= 1e-10;
  res.detail = "max jump residual " + fmt15(worst_jump) +
               ", max Jacobian deviation " + fmt15(worst_consistency);
  return res;
}

CheckResult check_conservation(LiquidScheme scheme) {
  ExperimentConfig base = preset_config("experiment1");
  const auto exact = build_exact(base);
  RunConfig rc = to_run_config(base, &*exact);
  const auto& init = std::get<RiemannInit>(rc.init);
  rc.init = MirroredJumpInit{init.left, init.right, 0.0, 2.5};
  rc.boundary = BoundaryKind::Periodic;
  rc.scheme = scheme;
  rc.grid.n = 64;
  rc.policy = TimeStepPolicy{0.0, 0.45};

  SimState s = initial_state(rc);
  const double dx = rc.grid.dx();
  auto totals = [&](const SimState& st) {
    double mg = 0, ml = 0;
    for (int j = 0; j < rc.grid.n; ++j) {  // node n duplicates node 0
      mg += st.u[j].m * dx;
      ml += st.w[j].m * dx;
    }
    return std::pair{mg, ml};
  };
  const auto [mg0, ml0] = totals(s);
  for (int k = 0; k < 100; ++k) {
    const double dt = 0.45 * dx / max_wave_speed(s, rc.params);
    s = step(s, dt, rc);
  }
  const auto [mg1, ml1] = totals(s);
  const double drift_g = std::abs(mg1 - mg0) / std::abs(mg0);
  const double drift_l = std::abs(ml1 - ml0) / std::abs(ml0);

  CheckResult res;
  res.name = std::string("conservation, periodic, 100 steps, ") +
             (scheme == LiquidScheme::Roe ? "Roe" : "NT") + " liquid";
  res.pass = drift_g <= 1e-12 && drift_l <= 1e-12;
  res.detail = "relative drift gas " + fmt15(drift_g) + ", liquid " +
               fmt15(drift_l);
  return res;
}

CheckResult check_experiment1() {
  const ExperimentConfig cfg = preset_config("experiment1");
  CheckResult res;
  res.name = "all-shock construction regression (experiment1)";
  try {
    const RiemannSolution sol = build_all_shock(*cfg.shock, cfg.params);
    struct Expect { const char* what; double got, want; };
    const double v_G_R = sol.states[2].gas.velocity();
    const double s = sol.waves[1].speed;
    const double v_L_p = sol.states[1].liquid.velocity();
    const double s_L_L = sol.waves[0].speed;
    const double m_L_pp = sol.states[2].liquid.m;
    const double v_L_pp = sol.states[2].liquid.velocity();
    const double v_L_R = sol.states[3].liquid.velocity();
    const double s_L_R = sol.waves[2].speed;
    const Expect table[] = {
        {"v_G^R", v_G_R, 1.2764},   {"s", s, 0.3820},
        {"v_L'", v_L_p, 0.7487},    {"s_L^L", s_L_L, -2.2667},
        {"m_L''", m_L_pp, 3.4995},  {"v_L''", v_L_pp, 0.7226},
        {"v_L^R", v_L_R, 0.2475},   {"s_L^R", s_L_R, 3.5761},
    };
    double worst = 0.0;
    for (const Expect& e : table) worst = std::max(worst, std::abs(e.got - e.want));
    res.pass = worst <= 5e-4;
    res.detail = "max deviation from reference chain " + fmt15(worst);
  } catch (const std::exception& e) {
    res.pass = false;
    res.detail = e.what();
  }
  return res;
}

CheckResult check_experiment2() {
  const ExperimentConfig cfg = preset_config("experiment2");
  CheckResult res;
  res.name = "all-rarefaction construction regression (experiment2)";
  try {
    const RiemannSolution sol = build_all_rarefaction(*cfg.rarefaction, cfg.params);
    struct Expect { const char* what; double got, want; };
    const Expect table[] = {
        {"m_G^R", sol.states[2].gas.m, 0.2963},
        {"v_G^R", sol.states[2].gas.velocity(), 1.8},
        {"m_L''", sol.states[2].liquid.m, 0.5695},
        {"v_L''", sol.states[2].liquid.velocity(), 0.9566},
        {"v_L^L", sol.states[0].liquid.velocity(), 0.4141},
        {"v_L^R", sol.states[3].liquid.velocity(), 1.3021},
        {"mu1 head", sol.waves[0].head, -1.8441},
        {"mu1 tail", sol.waves[0].tail, -0.4053},
        {"lam1 head", sol.waves[1].head, 0.5},
        {"lam1 tail", sol.waves[1].tail, 0.8},
        {"mu2 head", sol.waves[2].head, 2.3936},
        {"mu2 tail", sol.waves[2].tail, 3.2941},
    };
    double worst = 0.0;
    for (const Expect& e : table) worst = std::max(worst, std::abs(e.got - e.want));
    res.pass = worst <= 1e-3;
    res.detail = "max deviation from reference chain " + fmt15(worst);
  } catch (const std::exception& e) {
    res.pass = false;
    res.detail = e.what();
  }
  return res;
}

}  // namespace

ValidationReport run_validation(const FaultInjection& fault) {
  ValidationReport rep;
  rep.checks.push_back(check_gas_roe(fault));
  rep.checks.push_back(check_liquid_roe(fault));
  rep.checks.push_back(check_conservation(LiquidScheme::Roe));
  rep.checks.push_back(check_conservation(LiquidScheme::NT));
  rep.checks.push_back(check_experiment1());
  rep.checks.push_back(check_experiment2());
  return rep;
}

void print_report(const ValidationReport& report, std::ostream& os) {
  for (const CheckResult& c : report.checks)
    os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail
       << '\n';
  os << (report.all_pass() ? "all checks passed" : "SOME CHECKS FAILED")
     << '\n';
}

const char* to_string(DtRule rule) {
  return rule == DtRule::FixedRatio4 ? "dt = dx/4" : "dt = 0.45 dx / max speed";
}

ErrorTable compute_error_table(const ExperimentConfig& base, DtRule rule,
                               const std::vector<int>& ns) {
  const auto exact = build_exact(base);
  if (!exact)
    throw std::invalid_argument(
        "compute_error_table: config has no exact-solution construction");
  ErrorTable table;
  table.rule = rule;
  for (const int n : ns) {
    ErrorTableRow row;
    row.n = n;
    for (const LiquidScheme scheme : {LiquidScheme::Roe, LiquidScheme::NT}) {
      ExperimentConfig cfg = base;
      cfg.n = n;
      cfg.scheme = scheme;
      RunConfig rc = to_run_config(cfg, &*exact);
      if (rule == DtRule::FixedRatio4)
        rc.policy = TimeStepPolicy{rc.grid.dx() / 4.0, 0.0};
      else
        rc.policy = TimeStepPolicy{0.0, 0.45};
      ErrorCell& cell = scheme == LiquidScheme::Roe ? row.roe : row.nt;
      try {
        const SimState final_state = run(rc);
        cell.err = rel_l1_error(final_state, rc.grid, *exact);
      } catch (const std::exception& e) {
        cell.failed = true;
        cell.what = e.what();
        cell.err = ErrorReport{std::nan(""), std::nan(""), std::nan(""),
                               std::nan("")};
      }
    }
    table.rows.push_back(row);
  }
  return table;
}

void write_error_table(const ErrorTable& table, std::ostream& os) {
  os << "# relative L1 errors in percent, " << to_string(table.rule) << "\n";
  auto block = [&](const char* title, double ErrorReport::*field) {
    os << title << '\n';
    os << "    N   rel. L1 error (Roe)   rel. L1 error (NT)\n";
    char buf[96];
    for (const ErrorTableRow& r : table.rows) {
      auto cell = [&](const ErrorCell& c) {
        return c.failed ? std::string("blow-up")
                        : [&] {
                            char b[32];
                            std::snprintf(b, sizeof b, "%.2f", c.err.*field);
                            return std::string(b);
                          }();
      };
      std::snprintf(buf, sizeof buf, "  %3d   %19s   %18s\n", r.n,
                    cell(r.roe).c_str(), cell(r.nt).c_str());
      os << buf;
    }
  };
  block("liquid mass", &ErrorReport::m_L);
  block("liquid velocity", &ErrorReport::v_L);
  for (const ErrorTableRow& r : table.rows) {
    if (r.roe.failed)
      os << "# N=" << r.n << " Roe aborted: " << r.roe.what << '\n';
    if (r.nt.failed)
      os << "# N=" << r.n << " NT aborted: " << r.nt.what << '\n';
  }
}

void write_error_table_csv(const ErrorTable& table, std::ostream& os) {
  os << "n,roe_m_L,nt_m_L,roe_v_L,nt_v_L\n";
  for (const ErrorTableRow& r : table.rows)
    os << r.n << ',' << fmt15(r.roe.err.m_L) << ',' << fmt15(r.nt.err.m_L)
       << ',' << fmt15(r.roe.err.v_L) << ',' << fmt15(r.nt.err.v_L) << '\n';
}

}  // namespace pipeflow
