#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "hermax/stepper.hpp"

// External run description: a JSON document, schema-validated before any
// allocation; unknown keys are rejected by name.

namespace hermax {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfigFile {
  SolverConfig solver;
  std::vector<int> grids;  // one entry for solve, >= 3 for sweep
  std::string output_dir = ".";
};

RunConfigFile parse_run_config_text(const std::string& text,
                                    const std::string& origin = "<config>");
RunConfigFile parse_run_config(const std::string& path);

}  // namespace hermax
