#include "hermax/media.hpp"

#include <algorithm>
#include <complex>
#include <stdexcept>

namespace hermax {

bool MediumSpec::is_sellmeier() const { return max_gamma() == 0.0; }

double MediumSpec::max_gamma() const {
  double g = 0.0;
  for (const auto& p : electric_poles) g = std::max(g, p.gamma);
  for (const auto& p : magnetic_poles) g = std::max(g, p.gamma);
  return g;
}

void MediumSpec::validate() const {
  if (!(epsilon > 0.0)) throw std::invalid_argument("medium: epsilon <= 0");
  if (!(mu > 0.0)) throw std::invalid_argument("medium: mu <= 0");
  for (const auto& p : electric_poles)
    if (p.omega < 0.0 || p.resonance < 0.0 || p.gamma < 0.0)
      throw std::invalid_argument("medium: negative electric pole parameter");
  for (const auto& p : magnetic_poles)
    if (p.omega < 0.0 || p.resonance < 0.0 || p.gamma < 0.0)
      throw std::invalid_argument("medium: negative magnetic pole parameter");
}

int SymmetrizedSystem::v_slot(const std::string& name) const {
  for (int i = 0; i < int(v_slots.size()); ++i)
    if (v_slots[i].name == name) return i;
  return -1;
}

int SymmetrizedSystem::w_slot(const std::string& name) const {
  for (int i = 0; i < int(w_slots.size()); ++i)
    if (w_slots[i].name == name) return i;
  return -1;
}

bool SymmetrizedSystem::has_damping() const {
  return !damped_v_slots().empty() || !damped_w_slots().empty();
}

std::vector<int> SymmetrizedSystem::damped_v_slots() const {
  std::vector<int> r;
  for (int i = 0; i < n_v; ++i)
    if (gamma_v[i] != 0.0) r.push_back(i);
  return r;
}

std::vector<int> SymmetrizedSystem::damped_w_slots() const {
  std::vector<int> r;
  for (int i = 0; i < n_w; ++i)
    if (gamma_w[i] != 0.0) r.push_back(i);
  return r;
}

namespace {

std::string pole_name(const char* base, int j, const char* comp) {
  return std::string(base) + std::to_string(j + 1) + comp;
}

SymmetrizedSystem assemble_tm2d(const MediumSpec& med) {
  SymmetrizedSystem sys;
  sys.dim = 2;
  sys.wave_speed = med.wave_speed();
  const double se = std::sqrt(med.epsilon);
  const double sm = std::sqrt(med.mu);
  const double c = sys.wave_speed;

  // V = (Ex, Ey, {Lx_j, Ly_j}, {R_j});  W = (Hz, {S_j}, {Kx_j, Ky_j})
  sys.v_slots.push_back({"Ex", se});
  sys.v_slots.push_back({"Ey", se});
  for (int j = 0; j < int(med.electric_poles.size()); ++j) {
    const auto& p = med.electric_poles[j];
    sys.v_slots.push_back({pole_name("L", j, "x"), se * p.omega * p.resonance});
    sys.v_slots.push_back({pole_name("L", j, "y"), se * p.omega * p.resonance});
  }
  for (int j = 0; j < int(med.magnetic_poles.size()); ++j)
    sys.v_slots.push_back({pole_name("R", j, ""),
                           sm * med.magnetic_poles[j].omega});
  sys.w_slots.push_back({"Hz", sm});
  for (int j = 0; j < int(med.magnetic_poles.size()); ++j) {
    const auto& p = med.magnetic_poles[j];
    sys.w_slots.push_back({pole_name("S", j, ""), sm * p.omega * p.resonance});
  }
  for (int j = 0; j < int(med.electric_poles.size()); ++j) {
    const auto& p = med.electric_poles[j];
    sys.w_slots.push_back({pole_name("K", j, "x"), se * p.omega});
    sys.w_slots.push_back({pole_name("K", j, "y"), se * p.omega});
  }
  sys.n_v = int(sys.v_slots.size());
  sys.n_w = int(sys.w_slots.size());
  sys.gamma_v.assign(sys.n_v, 0.0);
  sys.gamma_w.assign(sys.n_w, 0.0);

  const int ex = 0, ey = 1, hz = 0;
  // dEx/dt = c dHz/dy ... ; dEy/dt = -c dHz/dx ...
  sys.curl[0].push_back({ey, hz, -c});
  sys.curl[1].push_back({ex, hz, c});

  for (int j = 0; j < int(med.electric_poles.size()); ++j) {
    const auto& p = med.electric_poles[j];
    const int lx = sys.v_slot(pole_name("L", j, "x"));
    const int ly = lx + 1;
    const int kx = sys.w_slot(pole_name("K", j, "x"));
    const int ky = kx + 1;
    sys.coupling.push_back({ex, kx, -p.omega});
    sys.coupling.push_back({ey, ky, -p.omega});
    sys.coupling.push_back({lx, kx, p.resonance});
    sys.coupling.push_back({ly, ky, p.resonance});
    sys.gamma_w[kx] = p.gamma;
    sys.gamma_w[ky] = p.gamma;
  }
  for (int j = 0; j < int(med.magnetic_poles.size()); ++j) {
    const auto& p = med.magnetic_poles[j];
    const int r = sys.v_slot(pole_name("R", j, ""));
    const int s = sys.w_slot(pole_name("S", j, ""));
    sys.coupling.push_back({r, hz, p.omega});
    sys.coupling.push_back({r, s, -p.resonance});
    sys.gamma_v[r] = p.gamma;
  }
  return sys;
}

SymmetrizedSystem assemble_full3d(const MediumSpec& med, int dim) {
  SymmetrizedSystem sys;
  sys.dim = dim;
  sys.wave_speed = med.wave_speed();
  const double se = std::sqrt(med.epsilon);
  const double sm = std::sqrt(med.mu);
  const double c = sys.wave_speed;
  const char* xyz[3] = {"x", "y", "z"};

  for (int i = 0; i < 3; ++i)
    sys.v_slots.push_back({std::string("E") + xyz[i], se});
  for (int j = 0; j < int(med.electric_poles.size()); ++j) {
    const auto& p = med.electric_poles[j];
    for (int i = 0; i < 3; ++i)
      sys.v_slots.push_back(
          {pole_name("L", j, xyz[i]), se * p.omega * p.resonance});
  }
  for (int j = 0; j < int(med.magnetic_poles.size()); ++j) {
    const auto& p = med.magnetic_poles[j];
    for (int i = 0; i < 3; ++i)
      sys.v_slots.push_back({pole_name("R", j, xyz[i]), sm * p.omega});
  }
  for (int i = 0; i < 3; ++i)
    sys.w_slots.push_back({std::string("H") + xyz[i], sm});
  for (int j = 0; j < int(med.magnetic_poles.size()); ++j) {
    const auto& p = med.magnetic_poles[j];
    for (int i = 0; i < 3; ++i)
      sys.w_slots.push_back(
          {pole_name("S", j, xyz[i]), sm * p.omega * p.resonance});
  }
  for (int j = 0; j < int(med.electric_poles.size()); ++j) {
    const auto& p = med.electric_poles[j];
    for (int i = 0; i < 3; ++i)
      sys.w_slots.push_back({pole_name("K", j, xyz[i]), se * p.omega});
  }
  sys.n_v = int(sys.v_slots.size());
  sys.n_w = int(sys.w_slots.size());
  sys.gamma_v.assign(sys.n_v, 0.0);
  sys.gamma_w.assign(sys.n_w, 0.0);

  // (curl U)_i = eps_{ikl} d_k U_l  ->  A_k(E_i, H_l) = c * eps_{ikl}
  for (int k = 0; k < dim; ++k)
    for (int i = 0; i < 3; ++i)
      for (int l = 0; l < 3; ++l) {
        const int e = (i == k || k == l || i == l)
                          ? 0
                          : (((k - i + 3) % 3 == 1) ? 1 : -1);
        if (e != 0) sys.curl[k].push_back({i, l, c * e});
      }

  for (int j = 0; j < int(med.electric_poles.size()); ++j) {
    const auto& p = med.electric_poles[j];
    const int l0 = sys.v_slot(pole_name("L", j, "x"));
    const int k0 = sys.w_slot(pole_name("K", j, "x"));
    for (int i = 0; i < 3; ++i) {
      sys.coupling.push_back({i, k0 + i, -p.omega});
      sys.coupling.push_back({l0 + i, k0 + i, p.resonance});
      sys.gamma_w[k0 + i] = p.gamma;
    }
  }
  for (int j = 0; j < int(med.magnetic_poles.size()); ++j) {
    const auto& p = med.magnetic_poles[j];
    const int r0 = sys.v_slot(pole_name("R", j, "x"));
    const int s0 = sys.w_slot(pole_name("S", j, "x"));
    for (int i = 0; i < 3; ++i) {
      sys.coupling.push_back({r0 + i, i, p.omega});
      sys.coupling.push_back({r0 + i, s0 + i, -p.resonance});
      sys.gamma_v[r0 + i] = p.gamma;
    }
  }
  return sys;
}

}  // namespace

SymmetrizedSystem assemble_system(const MediumSpec& medium, int dim,
                                  SystemMode mode) {
  medium.validate();
  if (dim < 1 || dim > 3) throw std::invalid_argument("assemble_system: dim");
  if (mode == SystemMode::tm2d) {
    if (dim != 2)
      throw std::invalid_argument("assemble_system: tm2d requires dim == 2");
    return assemble_tm2d(medium);
  }
  return assemble_full3d(medium, dim);
}

DispersionRoots dispersion_quartic_roots(const MediumSpec& medium, double k) {
  if (medium.electric_poles.size() != 1 || !medium.magnetic_poles.empty())
    throw std::invalid_argument(
        "dispersion_quartic_roots: exactly one electric pole required");
  if (!(k > 0.0)) throw std::invalid_argument("dispersion_quartic_roots: k");
  const double g = medium.electric_poles[0].gamma;
  const double w2 = medium.electric_poles[0].omega *
                    medium.electric_poles[0].omega;
  const double o2 = medium.electric_poles[0].resonance *
                    medium.electric_poles[0].resonance;
  const double k2 = 2.0 * k * k;
  // monic quartic coefficients c[0] + c[1] z + ... + z^4
  const double c0 = k2 * o2, c1 = k2 * g, c2 = k2 + w2 + o2, c3 = g;

  if (g == 0.0) {
    // biquadratic: z^2 = u with u^2 + c2 u + c0 = 0, both u real negative;
    // the small-|u| root via the product form to avoid cancellation
    const double disc = std::sqrt(c2 * c2 - 4.0 * c0);
    const double u_big = (-c2 - disc) / 2.0;
    const double u_small = c0 / u_big;
    DispersionRoots out;
    out.resonant = {0.0, std::sqrt(-u_small)};
    out.highfreq = {0.0, std::sqrt(-u_big)};
    return out;
  }

  using cplx = std::complex<double>;
  auto p = [&](cplx z) { return (((z + c3) * z + c2) * z + c1) * z + c0; };
  auto dp = [&](cplx z) {
    return ((4.0 * z + 3.0 * c3) * z + 2.0 * c2) * z + c1;
  };

  // Durand-Kerner from spread complex starts, then Newton polish
  std::array<cplx, 4> z;
  const double r0 = std::pow(std::max(c0, 1.0), 0.25);
  for (int i = 0; i < 4; ++i)
    z[i] = r0 * std::polar(1.0, 0.9 + 1.7 * i);
  for (int it = 0; it < 200; ++it) {
    double change = 0.0;
    for (int i = 0; i < 4; ++i) {
      cplx d = 1.0;
      for (int j = 0; j < 4; ++j)
        if (j != i) d *= z[i] - z[j];
      const cplx step = p(z[i]) / d;
      z[i] -= step;
      change = std::max(change, std::abs(step));
    }
    if (change < 1e-15 * (1.0 + std::abs(z[0]))) break;
  }
  for (int i = 0; i < 4; ++i)
    for (int it = 0; it < 4; ++it) z[i] -= p(z[i]) / dp(z[i]);

  // residual guard; never silent
  double scale = c0 + 1.0;
  for (int i = 0; i < 4; ++i) {
    const double az = std::abs(z[i]);
    const double s = c0 + c1 * az + c2 * az * az + c3 * az * az * az +
                     az * az * az * az;
    if (std::abs(p(z[i])) > 1e-12 * std::max(s, scale))
      throw std::runtime_error("dispersion_quartic_roots: no convergence");
  }

  std::vector<cplx> upper;
  for (int i = 0; i < 4; ++i)
    if (z[i].imag() > 0.0) upper.push_back(z[i]);
  if (upper.size() != 2)
    throw std::runtime_error("dispersion_quartic_roots: unexpected root layout");
  std::sort(upper.begin(), upper.end(),
            [](cplx a, cplx b) { return std::abs(a.imag()) < std::abs(b.imag()); });
  DispersionRoots out;
  out.resonant = {-upper[0].real(), upper[0].imag()};
  out.highfreq = {-upper[1].real(), upper[1].imag()};
  return out;
}

}  // namespace hermax
