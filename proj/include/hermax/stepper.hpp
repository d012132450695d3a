#pragma once

#include <array>
#include <functional>
#include <vector>

#include "hermax/diagnostics.hpp"
#include "hermax/dissipation.hpp"
#include "hermax/grid.hpp"
#include "hermax/hb_interp.hpp"
#include "hermax/media.hpp"
#include "hermax/tensor_poly.hpp"

// Staggered Hermite evolution: interpolate the opposite-grid data, run the
// cell-local time-derivative recursion to order q, sum the centered Taylor
// series (odd powers of dt/2 only) and add the extracted DOFs at the
// staggered node.  V lives on the primal grid at integer time levels, W on
// the dual grid at half-integer levels.

namespace hermax {

enum class InitMethod { exact_solution, self_start, zero };

int default_q(int m);  // m+2 for m <= 6, m+3 beyond

struct SolverConfig {
  SystemMode mode = SystemMode::tm2d;
  int dim = 2;
  int m = 3;
  int q = 0;  // 0 selects default_q(m)
  double cfl = 0.9;
  double k = 10.0;
  double t_final = 5.0;
  std::array<int, 3> n_grid{40, 40, 1};
  MediumSpec medium;
  Regime regime = Regime::dielectric;
  bool dissipation = false;
  InitMethod init = InitMethod::exact_solution;
  int error_every = 1;    // 0 disables error sampling
  int energy_every = 10;  // 0 disables energy sampling
  int threads = 1;
  int nordsieck_degree = 6;

  int effective_q() const { return q > 0 ? q : default_q(m); }
  double dt(const SymmetrizedSystem& sys) const;
  void validate() const;  // throws std::invalid_argument
  bool cfl_exceeds_bound() const { return cfl >= 1.0; }
};

// One half-step of the field from its staggered source; dt may be negative
// (the conservative increment is odd in dt, so a -dt step reverses a +dt
// step exactly).  increment_out, when given, receives the added DOFs.
// diss_own is the Nordsieck state attached to the updated field (predicted
// terms), diss_source the state attached to the source field (interpolated
// terms); both may be null.
void half_step(HermiteField& field, const HermiteField& source,
               const SymmetrizedSystem& sys, const HBOperator& op, int q,
               double dt, int threads = 1,
               HermiteField* increment_out = nullptr,
               const DissipationState* diss_own = nullptr,
               const DissipationState* diss_source = nullptr);

// Startup: one-sided Taylor step of length dt/2 for W built from the
// interpolated V data and W's own nodal polynomial, all powers retained up
// to order q; damping handled by the exact derivative chains.
HermiteField self_start(const HermiteField& v0, const HermiteField& w0,
                        const SymmetrizedSystem& sys, const HBOperator& op,
                        int q, double dt);

// Cell-local recursion on explicit polynomials (the unit the tests probe).
// source_polys are the interpolated opposite-field components (degree 2m+1
// containers); returns the Taylor increment per destination component.
// stages_out, when given, receives the stage polynomials V^1..V^q.
std::vector<TensorPoly> cell_increment(
    const SymmetrizedSystem& sys, bool v_from_w,
    const std::vector<TensorPoly>& source_polys,
    const std::array<double, 3>& dx, int q, double dt,
    std::vector<std::vector<TensorPoly>>* stages_out = nullptr);

RunReport run(const SolverConfig& config);
RunReport run(const SolverConfig& config,
              const std::function<void(const RunSample&)>& on_sample);

}  // namespace hermax
