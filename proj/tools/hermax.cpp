#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hermax/csv.hpp"
#include "hermax/kernels.hpp"
#include "hermax/run_config.hpp"
#include "hermax/stepper.hpp"

namespace fs = std::filesystem;
using namespace hermax;

namespace {

std::string output_dir(const RunConfigFile& cfg) {
  if (const char* env = std::getenv("HERMAX_OUTPUT_DIR"); env && *env)
    return env;
  return cfg.output_dir;
}

std::vector<std::string> timeseries_header() {
  return {"step",  "time",  "rel_l2_error", "edef_accumulated",
          "egenn", "egenh", "hb_energy_V",  "hb_energy_W"};
}

std::vector<std::string> sample_row(const RunSample& s) {
  std::vector<std::string> r(8);
  r[0] = std::to_string(s.step);
  r[1] = csv_double(s.time);
  r[2] = csv_double(s.rel_l2);
  r[3] = csv_double(s.edef);
  r[4] = s.has_egen ? csv_double(s.egenn) : "";
  r[5] = s.has_egen ? csv_double(s.egenh) : "";
  r[6] = s.has_energy ? csv_double(s.energy_v) : "";
  r[7] = s.has_energy ? csv_double(s.energy_w) : "";
  return r;
}

int run_solve(const std::string& config_path, int threads) {
  RunConfigFile cfg = parse_run_config(config_path);
  cfg.solver.threads = threads;
  cfg.solver.n_grid = {cfg.grids[0], cfg.grids[0], cfg.grids[0]};
  const fs::path dir = output_dir(cfg);
  fs::create_directories(dir);
  CsvWriter csv((dir / "timeseries.csv").string(), timeseries_header());
  const RunReport rep = run(cfg.solver, [&](const RunSample& s) {
    csv.row(sample_row(s));
  });
  csv.flush();
  if (rep.aborted) {
    std::cerr << "hermax: instability detected at step " << rep.abort_step
              << "\n";
    return 2;
  }
  std::cout << "steps=" << rep.n_steps << " dt=" << csv_double(rep.dt)
            << " max_rel_l2=" << csv_double(rep.max_rel_l2)
            << " edef=" << csv_double(rep.edef_final) << "\n";
  return 0;
}

int run_sweep(const std::string& config_path, int threads) {
  RunConfigFile cfg = parse_run_config(config_path);
  cfg.solver.threads = threads;
  if (cfg.grids.size() < 3) {
    std::cerr << "hermax: sweep requires at least 3 grids\n";
    return 1;
  }
  const fs::path dir = output_dir(cfg);
  fs::create_directories(dir);
  CsvWriter conv((dir / "convergence.csv").string(),
                 {"n_grid", "dof_per_wavelength", "error"});
  std::vector<std::pair<double, double>> points;
  for (int ng : cfg.grids) {
    SolverConfig sc = cfg.solver;
    sc.n_grid = {ng, ng, ng};
    const fs::path ts =
        dir / ("timeseries_N" + std::to_string(ng) + ".csv");
    CsvWriter csv(ts.string(), timeseries_header());
    const RunReport rep =
        run(sc, [&](const RunSample& s) { csv.row(sample_row(s)); });
    csv.flush();
    if (rep.aborted) {
      std::cerr << "hermax: instability at N_G=" << ng << ", step "
                << rep.abort_step << "; sweep aborted (partial results kept)\n";
      return 2;
    }
    const double dofl = ng * (sc.m + 1) / sc.k;
    conv.row({std::to_string(ng), csv_double(dofl),
              csv_double(rep.edef_final)});
    conv.flush();
    points.emplace_back(dofl, rep.edef_final);
    std::cout << "N_G=" << ng << " dof/lambda=" << csv_double(dofl)
              << " error=" << csv_double(rep.edef_final) << "\n";
  }
  std::ostringstream summary;
  try {
    const double rate = fit_rate(points);
    summary << "grids: " << points.size() << "\n";
    summary << "fitted rate: " << csv_double(rate) << "\n";
  } catch (const std::exception& e) {
    summary << "fit failed: " << e.what() << "\n";
  }
  std::ofstream sf(dir / "summary.txt");
  sf << summary.str();
  std::cout << summary.str();
  return 0;
}

int run_rates(const std::string& csv_path) {
  std::ifstream in(csv_path);
  if (!in) {
    std::cerr << "hermax: cannot open " << csv_path << "\n";
    return 1;
  }
  std::string line;
  if (!std::getline(in, line)) {
    std::cerr << "hermax: empty file\n";
    return 1;
  }
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      while (!cell.empty() && (cell.back() == '\r' || cell.back() == '\n'))
        cell.pop_back();
      out.push_back(cell);
    }
    return out;
  };
  const auto header = split(line);
  int dof_col = -1, err_col = -1;
  for (int i = 0; i < int(header.size()); ++i) {
    if (header[i] == "dof_per_wavelength") dof_col = i;
    if (header[i] == "error") err_col = i;
  }
  if (dof_col < 0 || err_col < 0) {
    std::cerr << "hermax: need columns dof_per_wavelength and error\n";
    return 1;
  }
  std::vector<std::pair<double, double>> points;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    const auto cells = split(line);
    if (int(cells.size()) <= std::max(dof_col, err_col)) continue;
    points.emplace_back(std::stod(cells[dof_col]), std::stod(cells[err_col]));
  }
  try {
    std::cout << "fitted rate: " << csv_double(fit_rate(points)) << "\n";
  } catch (const std::exception& e) {
    std::cerr << "hermax: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Energy-conserving Hermite solver for dispersive Maxwell "
               "systems on periodic grids"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "cap worker threads")
      ->check(CLI::PositiveNumber);

  std::string solve_cfg, sweep_cfg, rates_csv;
  auto* solve = app.add_subcommand("solve", "run a single configuration");
  solve->add_option("config", solve_cfg, "JSON run config")->required();
  auto* sweep = app.add_subcommand("sweep", "run a grid sweep and fit rates");
  sweep->add_option("config", sweep_cfg, "JSON run config with a grid list")
      ->required();
  auto* rates = app.add_subcommand("rates", "fit a rate to a convergence.csv");
  rates->add_option("csv", rates_csv, "convergence csv path")->required();

  CLI11_PARSE(app, argc, argv);
  try {
    if (solve->parsed()) return run_solve(solve_cfg, threads);
    if (sweep->parsed()) return run_sweep(sweep_cfg, threads);
    if (rates->parsed()) return run_rates(rates_csv);
  } catch (const ConfigError& e) {
    std::cerr << "hermax: config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "hermax: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
