#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

// Media definitions and the symmetrized first-order form
//
//   dV/dt =  sum_k A_k dW/dx_k + M W - Gamma_V V
//   dW/dt =  sum_k A_k^T dV/dx_k - M^T V - Gamma_W W
//
// obtained by rescaling E, H and the auxiliary Lorentz fields K_j, L_j,
// R_j, S_j.  Spatial derivatives act only on the E and H slots, so the
// characteristic speeds are c = (eps*mu)^{-1/2} and 0 regardless of the
// number of poles.

namespace hermax {

struct LorentzPole {
  double omega = 0.0;      // pole strength omega_j
  double resonance = 0.0;  // resonance Omega_j
  double gamma = 0.0;      // damping gamma_j
};

struct MediumSpec {
  double epsilon = 1.0;
  double mu = 1.0;
  std::vector<LorentzPole> electric_poles;
  std::vector<LorentzPole> magnetic_poles;

  double wave_speed() const { return 1.0 / std::sqrt(epsilon * mu); }
  bool is_dielectric() const {
    return electric_poles.empty() && magnetic_poles.empty();
  }
  bool is_sellmeier() const;  // all gamma == 0
  double max_gamma() const;
  void validate() const;  // throws std::invalid_argument
};

enum class SystemMode { full3d, tm2d };

struct MatrixEntry {
  int row = 0;
  int col = 0;
  double value = 0.0;
};

// Named state slots; scale maps the physical field to the symmetrized slot
// (slot value = scale * physical value).
struct SlotInfo {
  std::string name;
  double scale = 1.0;
};

struct SymmetrizedSystem {
  int dim = 2;
  int n_v = 0;
  int n_w = 0;
  std::array<std::vector<MatrixEntry>, 3> curl;  // A_k, n_v x n_w
  std::vector<MatrixEntry> coupling;             // M, n_v x n_w
  std::vector<double> gamma_v;                   // diagonal, length n_v
  std::vector<double> gamma_w;                   // diagonal, length n_w
  std::vector<SlotInfo> v_slots;
  std::vector<SlotInfo> w_slots;
  double wave_speed = 1.0;

  int v_slot(const std::string& name) const;  // -1 if absent
  int w_slot(const std::string& name) const;
  bool has_damping() const;
  std::vector<int> damped_v_slots() const;
  std::vector<int> damped_w_slots() const;
};

SymmetrizedSystem assemble_system(const MediumSpec& medium, int dim,
                                  SystemMode mode);

// The TM plane-wave dispersion quartic for a single electric Lorentz pole,
//   z^4 + g z^3 + (2k^2 + omega^2 + Omega^2) z^2 + 2k^2 g z + 2k^2 Omega^2,
// whose roots come in the two pairs z = -theta +- i*omega.
struct DispersionRoot {
  double theta = 0.0;
  double omega = 0.0;
};
struct DispersionRoots {
  DispersionRoot resonant;   // smaller |omega|
  DispersionRoot highfreq;   // larger |omega|
};

DispersionRoots dispersion_quartic_roots(const MediumSpec& medium, double k);

}  // namespace hermax
