#pragma once

#include <vector>

#include "hermax/diagnostics.hpp"
#include "hermax/grid.hpp"
#include "hermax/media.hpp"
#include "hermax/nordsieck.hpp"

// Predictor-corrector treatment of the damping terms.  For each damped
// component u (Gamma entry gamma != 0) of a field we track the antiderivative
// D with dD/dt = -gamma * u as a Nordsieck array per node and per spatial
// DOF.  The evolution recursions consume time derivatives of D: predicted
// at the half-step midpoint for the field being updated, and at the anchor
// time (one slot) for the interpolated opposite-field terms.  Only
// derivative slots enter the update, so the integration constant is inert.

namespace hermax {

class DissipationState {
 public:
  DissipationState() = default;
  // Attached to the field whose slots/gammas are given; h is the full step
  // the state advances by per half-step of that field.
  DissipationState(const Grid& grid, int m, std::vector<int> slots,
                   std::vector<double> gammas, int p, double h);

  bool empty() const { return slots_.empty(); }
  int p() const { return p_; }
  double h() const { return h_; }
  int m() const { return m_; }
  const std::vector<int>& slots() const { return slots_; }
  std::size_t block_size() const { return block_; }

  // slot-j scaled-derivative block of (node, damped-component index)
  double* slot_block(std::size_t node, int dcomp, int j);
  const double* slot_block(std::size_t node, int dcomp, int j) const;

  // out (block) = d^r/dt^r of the represented polynomial at offset s*h
  void derivative_block(std::size_t node, int dcomp, int r, double s,
                        double* out) const;

  // shift all arrays by one step and correct the slope slot against the
  // newly computed field (delta = -h*gamma*u_new - zhat_1)
  void advance_and_correct(const HermiteField& new_field);

  // startup from analytic time derivatives of the exact solution
  void init_exact(const SymmetrizedSystem& sys, char which,
                  const ExactSolution& sol, double t0);
  // zero-padded startup: slope slot from the initial field, rest zero
  void init_general(const HermiteField& field0);

 private:
  Grid grid_{};
  int m_ = 0;
  int p_ = 6;
  double h_ = 0.0;
  std::vector<int> slots_;
  std::vector<double> gammas_;
  std::size_t block_ = 1;
  std::vector<double> data_;  // [node][dcomp][slot 0..p][dof]
  std::vector<double> lvec_;
};

}  // namespace hermax
