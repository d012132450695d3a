#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "hermax/grid.hpp"
#include "hermax/hb_interp.hpp"
#include "hermax/media.hpp"

// Everything measured: the HB semi-inner product and seminorm energies, the
// discrete conserved quantities of the staggered scheme, closed-form exact
// solutions for the four test regimes, the accumulated L2 error metric and
// the least-squares convergence-rate fit.

namespace hermax {

struct Quadrature {
  std::vector<double> nodes;    // on [-1/2, 1/2]
  std::vector<double> weights;
};
Quadrature gauss_legendre_half(int n);

// <f,g>_m = integral over the torus of the product of the mixed derivatives
// of order m+1 in every direction, summed over components; computed cell by
// cell with Gauss-Legendre quadrature that is exact for the polynomial
// integrands.
double hb_inner(const PiecewiseField& f, const PiecewiseField& g, int m);
double hb_seminorm_sq(const PiecewiseField& f, int m);

// |I_m field|_m^2 of the piecewise interpolant of the nodal data.
double hb_energy(const HermiteField& field, const HBOperator& op);

// a*f + b*g on matching nodal layouts.
HermiteField field_lin_comb(double a, const HermiteField& f, double b,
                            const HermiteField& g);

// Discrete conserved quantities of the staggered evolution, evaluated after
// a completed full step.  V is at t_{n+1}, W at t_{n+3/2}; v_inc and w_inc
// are the increments added by the last V and W half-steps.
//   egenn(t_{n+1})  = |V|^2 + 1/4 |W + W_prev|^2 - 1/4 |w_inc|^2
//   egenh(t_{n+1/2})= |W_prev|^2 + 1/4 |V + V_prev|^2 - 1/4 |v_inc|^2
// with W_prev = W - w_inc and V_prev = V - v_inc reconstructed exactly.
struct ConservedPair {
  double egenn = 0.0;
  double egenh = 0.0;
};
ConservedPair conserved_quantities(const HermiteField& v,
                                   const HermiteField& w,
                                   const HermiteField& v_inc,
                                   const HermiteField& w_inc,
                                   const HBOperator& op);

enum class Regime {
  dielectric,
  lorentz_resonant,
  lorentz_highfreq,
  sellmeier_highfreq
};
Regime regime_from_string(const std::string& s);
std::string regime_to_string(Regime r);

// One state component of an exact solution:
//   u(x,t) = Re[amp * e^{z t}] * prod_a sin(k x_a + phase[a])
// Spatial and temporal derivatives are closed-form (trig phase shifts and
// powers of z).
struct TrigMode {
  bool active = false;
  std::complex<double> amp{0.0, 0.0};
  std::array<double, 3> phase{0.0, 0.0, 0.0};
};

class ExactSolution {
 public:
  // Validates regime/medium compatibility and self-checks the PDE residual
  // at random space-time samples; throws on failure.
  static ExactSolution make(Regime regime, double k, const MediumSpec& medium,
                            int dim);

  Regime regime() const { return regime_; }
  int dim() const { return dim_; }
  double wavenumber() const { return k_; }
  std::complex<double> z() const { return z_; }
  const MediumSpec& medium() const { return medium_; }

  // Physical component by slot name ("Ex", "Hz", "K1x", ...); inactive
  // components evaluate to zero.
  const TrigMode& mode(const std::string& name) const;
  // D^alpha (d/dt)^r u at (x, t)
  double eval(const TrigMode& mode, const std::array<int, 3>& alpha,
              int t_deriv, const double* x, double t) const;
  double eval(const std::string& name, const std::array<int, 3>& alpha,
              int t_deriv, const double* x, double t) const;

  // Max over time of the L2 norm of Hz on the torus (the relative scale of
  // the error metric).
  double hz_l2_scale() const;

  // Max relative residual of the first-order system at n random space-time
  // samples.
  double pde_residual(int n_samples, unsigned seed) const;

 private:
  Regime regime_ = Regime::dielectric;
  int dim_ = 2;
  double k_ = 1.0;
  std::complex<double> z_{0.0, 0.0};
  MediumSpec medium_;
  std::vector<std::pair<std::string, TrigMode>> modes_;
};

// Scaled Taylor DOFs of the exact solution written into a nodal field;
// which = 'v' or 'w' selects the slot list of the system.
void fill_exact_field(HermiteField& field, const SymmetrizedSystem& sys,
                      char which, const ExactSolution& sol, double t);

// Accumulated error metric: at every sample the Hz interpolant is evaluated
// on a 2m x 2m uniform submesh per cell and compared with the exact
// solution in a uniformly weighted discrete L2 sum;
//   E^2 = (4 sqrt(N_T))^{-1} sum_j ||Hz_num(t_j) - Hz(t_j)||^2.
class ErrorAccumulator {
 public:
  ErrorAccumulator(const SymmetrizedSystem& sys, const ExactSolution& sol,
                   int m, const Grid& w_grid);

  void sample(const HermiteField& w_field, const HBOperator& op, double t);
  // relative error without accumulating into the metric
  double measure(const HermiteField& w_field, const HBOperator& op,
                 double t) const;

  long n_samples() const { return n_; }
  double last_rel_l2() const { return last_rel_; }
  double max_rel_l2() const { return max_rel_; }
  double edef() const;  // accumulated E; 0 before the first sample

 private:
  const ExactSolution* sol_;
  int m_;
  double norm_sq(const HermiteField& w_field, const HBOperator& op,
                 double t) const;

  int hz_slot_;
  double inv_sqrt_mu_;
  int pts_per_dir_;
  Grid cell_centers_;
  std::vector<double> eval_mat_;   // pts x (2m+2)
  std::vector<double> offsets_;    // sample offsets in cell coordinates
  double weight_ = 1.0;            // uniform ell2 weight per sample point
  double sum_sq_ = 0.0;
  long n_ = 0;
  double last_rel_ = 0.0;
  double max_rel_ = 0.0;
};

// Least-squares slope of log(error) vs log(dof_per_wavelength),
// sign-normalized so a decaying error reports a positive rate.
double fit_rate(const std::vector<std::pair<double, double>>& points);

struct RunSample {
  long step = 0;
  double time = 0.0;
  double rel_l2 = 0.0;
  double edef = 0.0;
  bool has_energy = false;
  bool has_egen = false;
  double egenn = 0.0;
  double egenh = 0.0;
  double energy_v = 0.0;
  double energy_w = 0.0;
};

struct RunReport {
  std::vector<RunSample> samples;
  long n_steps = 0;
  double dt = 0.0;
  double edef_final = 0.0;
  double max_rel_l2 = 0.0;
  bool aborted = false;
  long abort_step = -1;
};

}  // namespace hermax
