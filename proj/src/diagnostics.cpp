#include "hermax/diagnostics.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "hermax/kernels.hpp"

namespace hermax {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

Quadrature gauss_legendre_half(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre_half: n < 1");
  Quadrature q;
  q.nodes.resize(n);
  q.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    // Newton on P_n with the Chebyshev-like initial guess
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      if (n == 1) p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      const double pn = (n == 1) ? x : p1;
      const double pm = (n == 1) ? 1.0 : p0;
      dp = n * (x * pn - pm) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    q.nodes[n - 1 - i] = x / 2.0;
    q.weights[n - 1 - i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  return q;
}

namespace {

// Per-cell machinery for <f,g>_m: differentiate m+1 times per direction,
// evaluate the leading (m+1)^d block at Gauss-Legendre points, weighted dot.
struct HbInnerPlan {
  int m, dim;
  PolyShape full;    // (2m+2) per direction
  PolyShape lead;    // (m+1) per direction
  std::vector<double> eval_mat;  // (m+1) x (m+1): point p, monomial j
  std::vector<double> weights;   // tensor weights, (m+1)^dim
  std::array<double, 3> dx{1.0, 1.0, 1.0};
  double cell_volume = 1.0;

  HbInnerPlan(int m_, const Grid& cells) : m(m_), dim(cells.dim) {
    full = PolyShape{dim, 2 * m + 2};
    lead = PolyShape{dim, m + 1};
    const int np = m + 1;
    const Quadrature q = gauss_legendre_half(np);
    eval_mat.assign(std::size_t(np) * np, 0.0);
    for (int p = 0; p < np; ++p) {
      double pw = 1.0;
      for (int j = 0; j < np; ++j) {
        eval_mat[std::size_t(p) * np + j] = pw;
        pw *= q.nodes[p];
      }
    }
    weights.assign(lead.size(), 1.0);
    for (std::size_t idx = 0; idx < lead.size(); ++idx) {
      std::size_t rem = idx;
      for (int a = 0; a < dim; ++a) {
        weights[idx] *= q.weights[rem % np];
        rem /= np;
      }
    }
    cell_volume = 1.0;
    for (int a = 0; a < dim; ++a) {
      dx[a] = cells.dx(a);
      cell_volume *= dx[a];
    }
  }

  // full-shape coeffs -> values of the (m+1)-fold mixed derivative at the
  // quadrature points (written into vals, (m+1)^dim)
  void derivative_values(const double* coeffs, double* work, double* vals,
                         double* scratch) const {
    const std::size_t fs = full.size();
    std::copy(coeffs, coeffs + fs, work);
    for (int a = 0; a < dim; ++a)
      for (int r = 0; r <= m; ++r) poly_diff(full, work, work, a, dx[a]);
    poly_extract_dofs(full, work, m, vals);
    // contract each axis with eval_mat
    const std::size_t np = std::size_t(m + 1);
    std::size_t total = lead.size();
    double* cur = vals;
    double* alt = scratch;
    for (int a = 0; a < dim; ++a) {
      std::size_t stride = 1;
      for (int i = 0; i < a; ++i) stride *= np;
      kernels::contract_axis(total / (stride * np), np, np, stride,
                             eval_mat.data(), cur, alt);
      std::swap(cur, alt);
    }
    if (cur != vals) std::copy(cur, cur + total, vals);
  }
};

}  // namespace

double hb_inner(const PiecewiseField& f, const PiecewiseField& g, int m) {
  if (!f.centers.same_extents(g.centers) || f.n_comp != g.n_comp ||
      f.shape != g.shape)
    throw std::invalid_argument("hb_inner: field layout mismatch");
  if (f.shape.n != 2 * m + 2)
    throw std::invalid_argument("hb_inner: degree/m mismatch");
  const HbInnerPlan plan(m, f.centers);
  const bool same = &f == &g;
  std::vector<double> work(plan.full.size()), scratch(plan.lead.size());
  std::vector<double> vf(plan.lead.size()), vg(plan.lead.size());
  double total = 0.0;
  const std::size_t n_cells = f.centers.n_nodes();
  for (std::size_t cidx = 0; cidx < n_cells; ++cidx) {
    for (int comp = 0; comp < f.n_comp; ++comp) {
      plan.derivative_values(f.cell(cidx, comp), work.data(), vf.data(),
                             scratch.data());
      if (same) {
        total += kernels::wdot(vf.size(), plan.weights.data(), vf.data(),
                               vf.data());
      } else {
        plan.derivative_values(g.cell(cidx, comp), work.data(), vg.data(),
                               scratch.data());
        total += kernels::wdot(vf.size(), plan.weights.data(), vf.data(),
                               vg.data());
      }
    }
  }
  return total * plan.cell_volume;
}

double hb_seminorm_sq(const PiecewiseField& f, int m) {
  return hb_inner(f, f, m);
}

double hb_energy(const HermiteField& field, const HBOperator& op) {
  const PiecewiseField p = hb_project_field(field, op);
  return hb_seminorm_sq(p, op.m());
}

HermiteField field_lin_comb(double a, const HermiteField& f, double b,
                            const HermiteField& g) {
  if (!f.grid().same_extents(g.grid()) || f.grid().dual != g.grid().dual ||
      f.m() != g.m() || f.n_comp() != g.n_comp())
    throw std::invalid_argument("field_lin_comb: layout mismatch");
  HermiteField r = f;
  kernels::scale(r.raw().size(), a, f.raw().data(), r.raw().data());
  kernels::axpy(r.raw().size(), b, g.raw().data(), r.raw().data());
  return r;
}

ConservedPair conserved_quantities(const HermiteField& v,
                                   const HermiteField& w,
                                   const HermiteField& v_inc,
                                   const HermiteField& w_inc,
                                   const HBOperator& op) {
  ConservedPair out;
  const HermiteField w_sum = field_lin_comb(2.0, w, -1.0, w_inc);
  out.egenn = hb_energy(v, op) + 0.25 * hb_energy(w_sum, op) -
              0.25 * hb_energy(w_inc, op);
  const HermiteField w_prev = field_lin_comb(1.0, w, -1.0, w_inc);
  const HermiteField v_sum = field_lin_comb(2.0, v, -1.0, v_inc);
  out.egenh = hb_energy(w_prev, op) + 0.25 * hb_energy(v_sum, op) -
              0.25 * hb_energy(v_inc, op);
  return out;
}

Regime regime_from_string(const std::string& s) {
  if (s == "dielectric") return Regime::dielectric;
  if (s == "lorentz_resonant") return Regime::lorentz_resonant;
  if (s == "lorentz_highfreq") return Regime::lorentz_highfreq;
  if (s == "sellmeier_highfreq") return Regime::sellmeier_highfreq;
  throw std::invalid_argument("unknown regime: " + s);
}

std::string regime_to_string(Regime r) {
  switch (r) {
    case Regime::dielectric: return "dielectric";
    case Regime::lorentz_resonant: return "lorentz_resonant";
    case Regime::lorentz_highfreq: return "lorentz_highfreq";
    case Regime::sellmeier_highfreq: return "sellmeier_highfreq";
  }
  return "?";
}

namespace {
const TrigMode kZeroMode{};
}

const TrigMode& ExactSolution::mode(const std::string& name) const {
  for (const auto& [n, m] : modes_)
    if (n == name) return m;
  return kZeroMode;
}

double ExactSolution::eval(const TrigMode& mode,
                           const std::array<int, 3>& alpha, int t_deriv,
                           const double* x, double t) const {
  if (!mode.active) return 0.0;
  double spatial = 1.0;
  int total = 0;
  for (int a = 0; a < dim_; ++a) {
    spatial *= std::sin(k_ * x[a] + mode.phase[a] + alpha[a] * kPi / 2.0);
    total += alpha[a];
  }
  const std::complex<double> zt = z_ * t;
  std::complex<double> amp = mode.amp * std::exp(zt);
  for (int r = 0; r < t_deriv; ++r) amp *= z_;
  double kpow = 1.0;
  for (int r = 0; r < total; ++r) kpow *= k_;
  return kpow * spatial * amp.real();
}

double ExactSolution::eval(const std::string& name,
                           const std::array<int, 3>& alpha, int t_deriv,
                           const double* x, double t) const {
  return eval(mode(name), alpha, t_deriv, x, t);
}

double ExactSolution::hz_l2_scale() const {
  // ||sin(k x)||_{L2(-pi,pi)} = sqrt(pi) per active direction, peak time
  // factor ~1 (the value the error tables normalize by)
  return std::pow(std::sqrt(kPi), dim_);
}

ExactSolution ExactSolution::make(Regime regime, double k,
                                  const MediumSpec& medium, int dim) {
  medium.validate();
  if (dim != 1 && dim != 2)
    throw std::invalid_argument("ExactSolution: dim must be 1 or 2");
  if (!(k > 0.0) || std::abs(k - std::round(k)) > 1e-12)
    throw std::invalid_argument(
        "ExactSolution: k must be a positive integer (periodic torus)");
  ExactSolution sol;
  sol.regime_ = regime;
  sol.k_ = k;
  sol.dim_ = dim;
  sol.medium_ = medium;
  const std::complex<double> i1(0.0, 1.0);
  const double half = kPi / 2.0;

  if (regime == Regime::dielectric) {
    if (!medium.is_dielectric())
      throw std::invalid_argument("dielectric regime requires a pole-free medium");
    const double c = medium.wave_speed();
    if (dim == 2) {
      const double omega = std::sqrt(2.0) * k * c;
      sol.z_ = i1 * omega;
      const double a = k / (medium.epsilon * omega);
      sol.modes_.push_back({"Ex", {true, {-a, 0.0}, {0.0, half, 0.0}}});
      sol.modes_.push_back({"Ey", {true, {a, 0.0}, {half, 0.0, 0.0}}});
      sol.modes_.push_back({"Hz", {true, -i1, {0.0, 0.0, 0.0}}});
    } else {
      const double omega = k * c;
      sol.z_ = i1 * omega;
      const double a = k / (medium.epsilon * omega);
      sol.modes_.push_back({"Ey", {true, {a, 0.0}, {half, 0.0, 0.0}}});
      sol.modes_.push_back({"Hz", {true, -i1, {0.0, 0.0, 0.0}}});
    }
  } else {
    if (dim != 2)
      throw std::invalid_argument("Lorentz regimes are 2D TM solutions");
    if (medium.electric_poles.size() != 1 || !medium.magnetic_poles.empty())
      throw std::invalid_argument(
          "Lorentz regimes require exactly one electric pole");
    if (medium.epsilon != 1.0 || medium.mu != 1.0)
      throw std::invalid_argument("Lorentz regimes require epsilon = mu = 1");
    const auto& pole = medium.electric_poles[0];
    if (regime == Regime::sellmeier_highfreq && pole.gamma != 0.0)
      throw std::invalid_argument("sellmeier regime requires gamma = 0");
    const DispersionRoots roots = dispersion_quartic_roots(medium, k);
    const DispersionRoot root =
        (regime == Regime::lorentz_resonant) ? roots.resonant : roots.highfreq;
    const std::complex<double> z(-root.theta, root.omega);
    sol.z_ = z;
    const double we2 = pole.omega * pole.omega;
    const std::complex<double> a_ex = i1 * z / (2.0 * k);
    const std::complex<double> a_k =
        -i1 * (2.0 * k * k + z * z) / (2.0 * k * we2);
    sol.modes_.push_back({"Ex", {true, a_ex, {0.0, half, 0.0}}});
    sol.modes_.push_back({"Ey", {true, -a_ex, {half, 0.0, 0.0}}});
    sol.modes_.push_back({"Hz", {true, -i1, {0.0, 0.0, 0.0}}});
    sol.modes_.push_back({"K1x", {true, a_k, {0.0, half, 0.0}}});
    sol.modes_.push_back({"K1y", {true, -a_k, {half, 0.0, 0.0}}});
    sol.modes_.push_back({"L1x", {true, a_k / z, {0.0, half, 0.0}}});
    sol.modes_.push_back({"L1y", {true, -a_k / z, {half, 0.0, 0.0}}});
  }

  const double res = sol.pde_residual(20, 0xce11u);
  if (!(res <= 1e-10))
    throw std::runtime_error("ExactSolution: PDE residual self-check failed");
  return sol;
}

double ExactSolution::pde_residual(int n_samples, unsigned seed) const {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> ux(-kPi, kPi);
  std::uniform_real_distribution<double> ut(0.0, 2.0);
  const std::array<int, 3> v0{0, 0, 0};
  std::array<int, 3> dx1{1, 0, 0}, dy1{0, 1, 0};
  double worst = 0.0;
  auto rel = [&](double r, double s) {
    const double d = std::max(s, 1e-30);
    return std::abs(r) / d;
  };
  for (int s = 0; s < n_samples; ++s) {
    double x[3] = {ux(rng), dim_ > 1 ? ux(rng) : 0.0, 0.0};
    const double t = ut(rng);
    const double eps = medium_.epsilon, mu = medium_.mu;

    if (dim_ == 2) {
      const double hz_y = eval("Hz", dy1, 0, x, t);
      const double hz_x = eval("Hz", dx1, 0, x, t);
      const double ex_y = eval("Ex", dy1, 0, x, t);
      const double ey_x = eval("Ey", dx1, 0, x, t);
      double sum_kx = 0.0, sum_ky = 0.0;
      for (int j = 0; j < int(medium_.electric_poles.size()); ++j) {
        const double w2 = medium_.electric_poles[j].omega *
                          medium_.electric_poles[j].omega;
        const std::string id = std::to_string(j + 1);
        sum_kx += w2 * eval("K" + id + "x", v0, 0, x, t);
        sum_ky += w2 * eval("K" + id + "y", v0, 0, x, t);
      }
      // dE/dt = (1/eps) curl H - sum omega^2 K
      {
        const double r = eval("Ex", v0, 1, x, t) - hz_y / eps + sum_kx;
        worst = std::max(
            worst, rel(r, std::abs(hz_y / eps) + std::abs(sum_kx) +
                              std::abs(eval("Ex", v0, 1, x, t)) + 1e-3));
      }
      {
        const double r = eval("Ey", v0, 1, x, t) + hz_x / eps + sum_ky;
        worst = std::max(
            worst, rel(r, std::abs(hz_x / eps) + std::abs(sum_ky) +
                              std::abs(eval("Ey", v0, 1, x, t)) + 1e-3));
      }
      // dHz/dt = (1/mu)(dEx/dy - dEy/dx)   (no magnetic poles in regimes)
      {
        const double r = eval("Hz", v0, 1, x, t) - (ex_y - ey_x) / mu;
        worst = std::max(worst,
                         rel(r, std::abs((ex_y - ey_x) / mu) +
                                    std::abs(eval("Hz", v0, 1, x, t)) + 1e-3));
      }
      // pole ODEs
      for (int j = 0; j < int(medium_.electric_poles.size()); ++j) {
        const auto& p = medium_.electric_poles[j];
        const std::string id = std::to_string(j + 1);
        for (const char* comp : {"x", "y"}) {
          const std::string kc = "K" + id + comp;
          const std::string lc = "L" + id + comp;
          const std::string ec = std::string("E") + comp;
          const double kv = eval(kc, v0, 0, x, t);
          const double lv = eval(lc, v0, 0, x, t);
          const double ev = eval(ec, v0, 0, x, t);
          const double r1 = eval(kc, v0, 1, x, t) + p.gamma * kv +
                            p.resonance * p.resonance * lv - ev;
          worst = std::max(
              worst,
              rel(r1, std::abs(ev) + p.resonance * p.resonance * std::abs(lv) +
                          std::abs(eval(kc, v0, 1, x, t)) + 1e-3));
          const double r2 = eval(lc, v0, 1, x, t) - kv;
          worst = std::max(worst, rel(r2, std::abs(kv) + 1e-3));
        }
      }
    } else {
      // 1D reduction: dEy/dt = -(1/eps) dHz/dx, dHz/dt = -(1/mu) dEy/dx
      const double hz_x = eval("Hz", dx1, 0, x, t);
      const double ey_x = eval("Ey", dx1, 0, x, t);
      const double r1 = eval("Ey", v0, 1, x, t) + hz_x / medium_.epsilon;
      const double r2 = eval("Hz", v0, 1, x, t) + ey_x / medium_.mu;
      worst = std::max(worst, rel(r1, std::abs(hz_x / medium_.epsilon) + 1e-3));
      worst = std::max(worst, rel(r2, std::abs(ey_x / medium_.mu) + 1e-3));
    }
  }
  return worst;
}

void fill_exact_field(HermiteField& field, const SymmetrizedSystem& sys,
                      char which, const ExactSolution& sol, double t) {
  const auto& slots = (which == 'v') ? sys.v_slots : sys.w_slots;
  if (int(slots.size()) != field.n_comp())
    throw std::invalid_argument("fill_exact_field: component count mismatch");
  const Grid& g = field.grid();
  const int m = field.m();
  const int dim = g.dim;
  const PolyShape lead{dim, m + 1};
  // dx^{|alpha|}/alpha! factors
  std::vector<double> factor(lead.size(), 1.0);
  for (std::size_t idx = 0; idx < lead.size(); ++idx) {
    std::size_t rem = idx;
    for (int a = 0; a < dim; ++a) {
      const int al = int(rem % std::size_t(m + 1));
      rem /= std::size_t(m + 1);
      double f = 1.0;
      for (int r = 1; r <= al; ++r) f *= g.dx(a) / r;
      factor[idx] *= f;
    }
  }
  field.set_time(t);
  const std::size_t n_nodes = g.n_nodes();
  for (std::size_t node = 0; node < n_nodes; ++node) {
    const auto ic = g.node_coords(node);
    double x[3] = {0.0, 0.0, 0.0};
    for (int a = 0; a < dim; ++a) x[a] = g.coord(a, ic[a]);
    for (int comp = 0; comp < field.n_comp(); ++comp) {
      const TrigMode& mode = sol.mode(slots[comp].name);
      double* blk = field.block(node, comp);
      if (!mode.active) {
        std::fill(blk, blk + field.block_size(), 0.0);
        continue;
      }
      for (std::size_t idx = 0; idx < lead.size(); ++idx) {
        std::size_t rem = idx;
        std::array<int, 3> alpha{0, 0, 0};
        for (int a = 0; a < dim; ++a) {
          alpha[a] = int(rem % std::size_t(m + 1));
          rem /= std::size_t(m + 1);
        }
        blk[idx] =
            slots[comp].scale * factor[idx] * sol.eval(mode, alpha, 0, x, t);
      }
    }
  }
}

ErrorAccumulator::ErrorAccumulator(const SymmetrizedSystem& sys,
                                   const ExactSolution& sol, int m,
                                   const Grid& w_grid)
    : sol_(&sol), m_(m) {
  hz_slot_ = sys.w_slot("Hz");
  if (hz_slot_ < 0) throw std::invalid_argument("ErrorAccumulator: no Hz slot");
  inv_sqrt_mu_ = 1.0 / sys.w_slots[hz_slot_].scale;
  pts_per_dir_ = std::max(1, 2 * m);
  cell_centers_ = w_grid.opposite();
  const int n_in = 2 * m + 2;
  eval_mat_.assign(std::size_t(pts_per_dir_) * n_in, 0.0);
  offsets_.resize(pts_per_dir_);
  weight_ = 1.0;
  for (int a = 0; a < w_grid.dim; ++a)
    weight_ *= w_grid.dx(a) / pts_per_dir_;
  for (int p = 0; p < pts_per_dir_; ++p) {
    offsets_[p] = -0.5 + (p + 0.5) / pts_per_dir_;
    double pw = 1.0;
    for (int j = 0; j < n_in; ++j) {
      eval_mat_[std::size_t(p) * n_in + j] = pw;
      pw *= offsets_[p];
    }
  }
}

void ErrorAccumulator::sample(const HermiteField& w_field,
                              const HBOperator& op, double t) {
  const double nsq = norm_sq(w_field, op, t);
  sum_sq_ += nsq;
  ++n_;
  last_rel_ = std::sqrt(nsq) / sol_->hz_l2_scale();
  max_rel_ = std::max(max_rel_, last_rel_);
}

double ErrorAccumulator::measure(const HermiteField& w_field,
                                 const HBOperator& op, double t) const {
  return std::sqrt(norm_sq(w_field, op, t)) / sol_->hz_l2_scale();
}

double ErrorAccumulator::norm_sq(const HermiteField& w_field,
                                 const HBOperator& op, double t) const {
  const Grid& g = w_field.grid();
  const int dim = g.dim;
  const unsigned n_corners = 1u << dim;
  const std::size_t n_in = std::size_t(2 * m_ + 2);
  const std::size_t stack_size = PolyShape{dim, int(n_in)}.size();
  std::size_t n_pts = 1;
  for (int a = 0; a < dim; ++a) n_pts *= std::size_t(pts_per_dir_);
  std::vector<double> stack(stack_size), scratch(stack_size);
  std::vector<double> vals(stack_size), exact(n_pts);
  std::array<const double*, 8> corners{};
  const TrigMode& hz_mode = sol_->mode("Hz");

  double cell_sum = 0.0;
  const std::size_t n_cells = cell_centers_.n_nodes();
  for (std::size_t cidx = 0; cidx < n_cells; ++cidx) {
    const auto cc = cell_centers_.node_coords(cidx);
    for (unsigned b = 0; b < n_corners; ++b)
      corners[b] =
          w_field.block(cell_corner_node(g, cc, b), hz_slot_);
    gather_cell_stack(dim, m_, corners.data(), stack.data());
    op.apply(dim, stack.data(), scratch.data());
    // evaluate on the submesh: contract each axis with eval_mat
    double* cur = stack.data();
    double* alt = scratch.data();
    std::size_t lens[3] = {n_in, n_in, n_in};
    for (int a = 0; a < dim; ++a) {
      std::size_t stride = 1;
      for (int i = 0; i < a; ++i) stride *= lens[i];
      std::size_t outer = 1;
      for (int i = a + 1; i < dim; ++i) outer *= lens[i];
      kernels::contract_axis(outer, n_in, std::size_t(pts_per_dir_), stride,
                             eval_mat_.data(), cur, alt);
      lens[a] = std::size_t(pts_per_dir_);
      std::swap(cur, alt);
    }
    kernels::scale(n_pts, inv_sqrt_mu_, cur, vals.data());
    // exact Hz at the sample points
    double center[3] = {0.0, 0.0, 0.0};
    for (int a = 0; a < dim; ++a) center[a] = cell_centers_.coord(a, cc[a]);
    const std::array<int, 3> v0{0, 0, 0};
    for (std::size_t p = 0; p < n_pts; ++p) {
      std::size_t rem = p;
      double x[3] = {0.0, 0.0, 0.0};
      for (int a = 0; a < dim; ++a) {
        x[a] = center[a] + offsets_[rem % std::size_t(pts_per_dir_)] * g.dx(a);
        rem /= std::size_t(pts_per_dir_);
      }
      exact[p] = sol_->eval(hz_mode, v0, 0, x, t);
    }
    cell_sum += kernels::sqdiff_sum(n_pts, vals.data(), exact.data());
  }
  return cell_sum * weight_;
}

double ErrorAccumulator::edef() const {
  if (n_ == 0) return 0.0;
  return std::sqrt(sum_sq_ / (4.0 * std::sqrt(double(n_))));
}

double fit_rate(const std::vector<std::pair<double, double>>& points) {
  if (points.size() < 3)
    throw std::invalid_argument("fit_rate: need at least 3 points");
  double sx = 0.0, sy = 0.0;
  for (const auto& [d, e] : points) {
    if (!(d > 0.0) || !(e > 0.0))
      throw std::invalid_argument("fit_rate: points must be positive");
    sx += std::log(d);
    sy += std::log(e);
  }
  const double mx = sx / points.size();
  const double my = sy / points.size();
  double sxx = 0.0, sxy = 0.0;
  for (const auto& [d, e] : points) {
    const double dx = std::log(d) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(e) - my);
  }
  if (sxx <= 0.0)
    throw std::invalid_argument("fit_rate: degenerate abscissas");
  return -sxy / sxx;
}

}  // namespace hermax
