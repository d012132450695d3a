#include "hermax/run_config.hpp"

#include <fstream>
#include <set>

#include <json.hpp>

namespace hermax {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::set<std::string>& allowed,
                    const std::string& where, const std::string& origin) {
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (!allowed.count(it.key()))
      throw ConfigError(origin + ": unknown key \"" + it.key() + "\" in " +
                        where);
}

LorentzPole parse_pole(const json& j, const std::string& where,
                       const std::string& origin) {
  if (!j.is_object())
    throw ConfigError(origin + ": " + where + " entries must be objects");
  reject_unknown(j, {"omega", "resonance", "gamma"}, where, origin);
  LorentzPole p;
  p.omega = j.value("omega", 0.0);
  p.resonance = j.value("resonance", 0.0);
  p.gamma = j.value("gamma", 0.0);
  return p;
}

MediumSpec parse_medium(const json& j, const std::string& origin) {
  if (!j.is_object()) throw ConfigError(origin + ": medium must be an object");
  reject_unknown(j, {"epsilon", "mu", "electric_poles", "magnetic_poles"},
                 "medium", origin);
  MediumSpec m;
  m.epsilon = j.value("epsilon", 1.0);
  m.mu = j.value("mu", 1.0);
  if (j.contains("electric_poles"))
    for (const auto& p : j.at("electric_poles"))
      m.electric_poles.push_back(parse_pole(p, "electric_poles", origin));
  if (j.contains("magnetic_poles"))
    for (const auto& p : j.at("magnetic_poles"))
      m.magnetic_poles.push_back(parse_pole(p, "magnetic_poles", origin));
  return m;
}

}  // namespace

RunConfigFile parse_run_config_text(const std::string& text,
                                    const std::string& origin) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(origin + ": " + e.what());
  }
  if (!j.is_object())
    throw ConfigError(origin + ": top level must be an object");
  reject_unknown(j,
                 {"mode", "m", "q", "cfl", "k", "t_final", "grid", "medium",
                  "regime", "dissipation", "init", "output", "error_every",
                  "energy_every", "nordsieck_degree"},
                 "config", origin);
  for (const char* key : {"m", "k", "t_final", "grid", "regime"})
    if (!j.contains(key))
      throw ConfigError(origin + ": missing required key \"" +
                        std::string(key) + "\"");

  RunConfigFile cfg;
  SolverConfig& s = cfg.solver;
  const std::string mode = j.value("mode", std::string("tm2d"));
  if (mode == "tm2d") {
    s.mode = SystemMode::tm2d;
    s.dim = 2;
  } else if (mode == "1d") {
    s.mode = SystemMode::full3d;
    s.dim = 1;
  } else {
    throw ConfigError(origin + ": mode must be \"tm2d\" or \"1d\"");
  }
  try {
    s.m = j.at("m").get<int>();
    s.q = j.value("q", 0);
    s.cfl = j.value("cfl", 0.9);
    s.k = j.at("k").get<double>();
    s.t_final = j.at("t_final").get<double>();
    s.dissipation = j.value("dissipation", false);
    s.error_every = j.value("error_every", 1);
    s.energy_every = j.value("energy_every", 10);
    s.nordsieck_degree = j.value("nordsieck_degree", 6);
    if (j.contains("medium")) s.medium = parse_medium(j.at("medium"), origin);
    s.regime = regime_from_string(j.at("regime").get<std::string>());
    const std::string init = j.value("init", std::string("exact"));
    if (init == "exact")
      s.init = InitMethod::exact_solution;
    else if (init == "self_start")
      s.init = InitMethod::self_start;
    else if (init == "zero")
      s.init = InitMethod::zero;
    else
      throw ConfigError(origin +
                        ": init must be \"exact\", \"self_start\" or \"zero\"");
    const json& grid = j.at("grid");
    if (grid.is_number_integer()) {
      cfg.grids.push_back(grid.get<int>());
    } else if (grid.is_array()) {
      for (const auto& g : grid) cfg.grids.push_back(g.get<int>());
    } else {
      throw ConfigError(origin + ": grid must be an integer or a list");
    }
    cfg.output_dir = j.value("output", std::string("."));
  } catch (const json::exception& e) {
    throw ConfigError(origin + ": " + e.what());
  }
  if (cfg.grids.empty()) throw ConfigError(origin + ": empty grid list");
  for (int n : cfg.grids)
    if (n < 2) throw ConfigError(origin + ": grid sizes must be >= 2");
  s.n_grid = {cfg.grids[0], cfg.grids[0], cfg.grids[0]};
  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(origin + ": " + e.what());
  }
  return cfg;
}

RunConfigFile parse_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path + ": cannot open config file");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_run_config_text(text, path);
}

}  // namespace hermax
