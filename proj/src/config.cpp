#include "pipeflow/config.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "pipeflow/io.hpp"

namespace pipeflow {

double parse_number(const std::string& text) {
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    if (slash == std::string::npos) {
      const double v = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return v;
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    const double p = std::stod(num, &used);
    if (used != num.size()) throw std::invalid_argument(text);
    const double q = std::stod(den, &used);
    if (used != den.size()) throw std::invalid_argument(text);
    if (q == 0.0) throw std::invalid_argument(text);
    return p / q;
  } catch (const std::exception&) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
}

ExperimentConfig preset_config(const std::string& name) {
  ExperimentConfig cfg;
  if (name == "experiment1") {
    cfg.shock = ShockProblemSpec{2.0, 1.5, 2.5, 3.0, 1.0, 3.25, 3.0};
  } else if (name == "experiment2") {
    cfg.rarefaction =
        RarefactionProblemSpec{0.4, 1.5, 0.2963, 0.5, 1.0, 0.7, 0.7};
  } else {
    throw std::invalid_argument("unknown preset '" + name +
                                "' (expected experiment1 or experiment2)");
  }
  return cfg;
}

namespace {

void ensure_explicit_init(ExperimentConfig& cfg) {
  if (!cfg.explicit_init) cfg.explicit_init = RiemannInit{};
}

double* state_field(RiemannInit& init, const std::string& key) {
  FullState* st = nullptr;
  std::string rest;
  if (key.rfind("left.", 0) == 0) {
    st = &init.left;
    rest = key.substr(5);
  } else if (key.rfind("right.", 0) == 0) {
    st = &init.right;
    rest = key.substr(6);
  } else {
    return nullptr;
  }
  if (rest == "m_G") return &st->gas.m;
  if (rest == "q_G") return &st->gas.q;
  if (rest == "m_L") return &st->liquid.m;
  if (rest == "q_L") return &st->liquid.q;
  return nullptr;
}

double* shock_field(ShockProblemSpec& s, const std::string& rest) {
  if (rest == "m_G_L") return &s.m_G_L;
  if (rest == "v_G_L") return &s.v_G_L;
  if (rest == "m_G_R") return &s.m_G_R;
  if (rest == "m_L_L") return &s.m_L_L;
  if (rest == "v_L_L") return &s.v_L_L;
  if (rest == "m_L_prime") return &s.m_L_prime;
  if (rest == "m_L_R") return &s.m_L_R;
  return nullptr;
}

double* raref_field(RarefactionProblemSpec& s, const std::string& rest) {
  if (rest == "m_G_L") return &s.m_G_L;
  if (rest == "v_G_L") return &s.v_G_L;
  if (rest == "m_G_R") return &s.m_G_R;
  if (rest == "m_L_prime") return &s.m_L_prime;
  if (rest == "v_L_prime") return &s.v_L_prime;
  if (rest == "m_L_L") return &s.m_L_L;
  if (rest == "m_L_R") return &s.m_L_R;
  return nullptr;
}

}  // namespace

void apply_key(ExperimentConfig& cfg, const std::string& key,
               const std::string& value) {
  if (key == "preset") {
    ExperimentConfig p = preset_config(value);
    cfg.shock = p.shock;
    cfg.rarefaction = p.rarefaction;
    return;
  }
  if (key == "C_G") { cfg.params.C_G = parse_number(value); return; }
  if (key == "rho_L") { cfg.params.rho_L = parse_number(value); return; }
  if (key == "strict_physical") {
    cfg.params.strict_physical = (value == "1" || value == "true");
    return;
  }
  if (key == "a") { cfg.a = parse_number(value); return; }
  if (key == "b") { cfg.b = parse_number(value); return; }
  if (key == "n") { cfg.n = static_cast<int>(parse_number(value)); return; }
  if (key == "scheme") {
    if (value == "roe") cfg.scheme = LiquidScheme::Roe;
    else if (value == "nt") cfg.scheme = LiquidScheme::NT;
    else throw std::invalid_argument("scheme must be roe or nt, got " + value);
    return;
  }
  if (key == "boundary") {
    if (value == "open") cfg.boundary = BoundaryKind::Open;
    else if (value == "periodic") cfg.boundary = BoundaryKind::Periodic;
    else throw std::invalid_argument("boundary must be open or periodic");
    return;
  }
  if (key == "dt") {
    cfg.fixed_dt = parse_number(value);
    cfg.cfl = 0.0;
    return;
  }
  if (key == "cfl") {
    cfg.cfl = parse_number(value);
    cfg.fixed_dt = 0.0;
    return;
  }
  if (key == "T") { cfg.t_end = parse_number(value); return; }
  if (key == "t") { cfg.sample_time = parse_number(value); return; }
  if (key == "samples") {
    cfg.samples = static_cast<int>(parse_number(value));
    return;
  }
  if (key == "out") { cfg.out_dir = value; return; }

  if (key.rfind("shock.", 0) == 0) {
    if (!cfg.shock) cfg.shock = ShockProblemSpec{};
    if (double* f = shock_field(*cfg.shock, key.substr(6))) {
      *f = parse_number(value);
      return;
    }
  }
  if (key.rfind("raref.", 0) == 0) {
    if (!cfg.rarefaction) cfg.rarefaction = RarefactionProblemSpec{};
    if (double* f = raref_field(*cfg.rarefaction, key.substr(6))) {
      *f = parse_number(value);
      return;
    }
  }
  if (key.rfind("left.", 0) == 0 || key.rfind("right.", 0) == 0) {
    ensure_explicit_init(cfg);
    const std::string base = key.substr(0, key.find('.') + 1);
    const std::string field = key.substr(key.find('.') + 1);
    // velocities accepted as v_*, stored as momenta
    if (field == "v_G" || field == "v_L") {
      RiemannInit& init = *cfg.explicit_init;
      FullState& st = base == "left." ? init.left : init.right;
      double& m = field == "v_G" ? st.gas.m : st.liquid.m;
      double& q = field == "v_G" ? st.gas.q : st.liquid.q;
      if (m == 0.0)
        throw std::invalid_argument("set " + base +
                                    (field == "v_G" ? "m_G" : "m_L") +
                                    " before " + key);
      q = m * parse_number(value);
      return;
    }
    if (double* f = state_field(*cfg.explicit_init, key)) {
      *f = parse_number(value);
      return;
    }
  }
  throw std::invalid_argument("unknown config key '" + key + "'");
}

void apply_config_file(ExperimentConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    std::string key, value;
    if (eq != std::string::npos) {
      key = line.substr(0, eq);
      value = line.substr(eq + 1);
    } else {
      key = line;
    }
    auto trim = [](std::string& s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
    };
    trim(key);
    trim(value);
    if (key.empty()) continue;
    if (eq == std::string::npos)
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": expected key = value");
    try {
      apply_key(cfg, key, value);
    } catch (const std::exception& e) {
      throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " +
                                  e.what());
    }
  }
}

void dump_config(const ExperimentConfig& cfg, std::ostream& os) {
  os << "C_G = " << fmt_exact(cfg.params.C_G) << '\n';
  os << "rho_L = " << fmt_exact(cfg.params.rho_L) << '\n';
  os << "strict_physical = " << (cfg.params.strict_physical ? 1 : 0) << '\n';
  os << "a = " << fmt_exact(cfg.a) << '\n';
  os << "b = " << fmt_exact(cfg.b) << '\n';
  os << "n = " << cfg.n << '\n';
  os << "scheme = " << (cfg.scheme == LiquidScheme::Roe ? "roe" : "nt") << '\n';
  os << "boundary = "
     << (cfg.boundary == BoundaryKind::Open ? "open" : "periodic") << '\n';
  if (cfg.fixed_dt > 0.0) os << "dt = " << fmt_exact(cfg.fixed_dt) << '\n';
  if (cfg.cfl > 0.0) os << "cfl = " << fmt_exact(cfg.cfl) << '\n';
  os << "T = " << fmt_exact(cfg.t_end) << '\n';
  os << "t = " << fmt_exact(cfg.sample_time) << '\n';
  os << "samples = " << cfg.samples << '\n';
  os << "out = " << cfg.out_dir << '\n';
  if (cfg.shock) {
    const ShockProblemSpec& s = *cfg.shock;
    os << "shock.m_G_L = " << fmt_exact(s.m_G_L) << '\n';
    os << "shock.v_G_L = " << fmt_exact(s.v_G_L) << '\n';
    os << "shock.m_G_R = " << fmt_exact(s.m_G_R) << '\n';
    os << "shock.m_L_L = " << fmt_exact(s.m_L_L) << '\n';
    os << "shock.v_L_L = " << fmt_exact(s.v_L_L) << '\n';
    os << "shock.m_L_prime = " << fmt_exact(s.m_L_prime) << '\n';
    os << "shock.m_L_R = " << fmt_exact(s.m_L_R) << '\n';
  }
  if (cfg.rarefaction) {
    const RarefactionProblemSpec& s = *cfg.rarefaction;
    os << "raref.m_G_L = " << fmt_exact(s.m_G_L) << '\n';
    os << "raref.v_G_L = " << fmt_exact(s.v_G_L) << '\n';
    os << "raref.m_G_R = " << fmt_exact(s.m_G_R) << '\n';
    os << "raref.m_L_prime = " << fmt_exact(s.m_L_prime) << '\n';
    os << "raref.v_L_prime = " << fmt_exact(s.v_L_prime) << '\n';
    os << "raref.m_L_L = " << fmt_exact(s.m_L_L) << '\n';
    os << "raref.m_L_R = " << fmt_exact(s.m_L_R) << '\n';
  }
  if (cfg.explicit_init) {
    const RiemannInit& r = *cfg.explicit_init;
    os << "left.m_G = " << fmt_exact(r.left.gas.m) << '\n';
    os << "left.q_G = " << fmt_exact(r.left.gas.q) << '\n';
    os << "left.m_L = " << fmt_exact(r.left.liquid.m) << '\n';
    os << "left.q_L = " << fmt_exact(r.left.liquid.q) << '\n';
    os << "right.m_G = " << fmt_exact(r.right.gas.m) << '\n';
    os << "right.q_G = " << fmt_exact(r.right.gas.q) << '\n';
    os << "right.m_L = " << fmt_exact(r.right.liquid.m) << '\n';
    os << "right.q_L = " << fmt_exact(r.right.liquid.q) << '\n';
  }
}

std::optional<RiemannSolution> build_exact(const ExperimentConfig& cfg) {
  if (cfg.shock) return build_all_shock(*cfg.shock, cfg.params);
  if (cfg.rarefaction) return build_all_rarefaction(*cfg.rarefaction, cfg.params);
  return std::nullopt;
}

RunConfig to_run_config(const ExperimentConfig& cfg,
                        const RiemannSolution* exact) {
  RunConfig rc;
  rc.grid = StaggeredGrid{cfg.a, cfg.b, cfg.n};
  rc.params = cfg.params;
  rc.scheme = cfg.scheme;
  rc.boundary = cfg.boundary;
  rc.policy = TimeStepPolicy{cfg.fixed_dt > 0.0 ? cfg.fixed_dt : 0.0,
                             cfg.cfl > 0.0 ? cfg.cfl : 0.0};
  rc.t_end = cfg.t_end;
  if (cfg.explicit_init) {
    rc.init = *cfg.explicit_init;
  } else if (exact && !exact->states.empty()) {
    rc.init = RiemannInit{exact->states.front(), exact->states.back()};
  } else {
    throw std::invalid_argument(
        "no initial data: give explicit left/right states or an exact-solution "
        "construction");
  }
  return rc;
}

}  // namespace pipeflow
