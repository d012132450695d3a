#include "hermax/stepper.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <stdexcept>
#include <thread>

#include "hermax/kernels.hpp"

namespace hermax {

int default_q(int m) { return m <= 6 ? m + 2 : m + 3; }

double SolverConfig::dt(const SymmetrizedSystem& sys) const {
  Grid g;
  g.dim = dim;
  g.n = n_grid;
  return cfl * g.min_dx() / sys.wave_speed;
}

void SolverConfig::validate() const {
  if (dim < 1 || dim > 3) throw std::invalid_argument("config: dim");
  if (mode == SystemMode::tm2d && dim != 2)
    throw std::invalid_argument("config: tm2d requires dim == 2");
  if (m < 0 || m > 12) throw std::invalid_argument("config: m out of range");
  if (q < 0) throw std::invalid_argument("config: q must be >= 1 when set");
  if (!(cfl > 0.0)) throw std::invalid_argument("config: cfl must be > 0");
  for (int a = 0; a < dim; ++a)
    if (n_grid[a] < 2) throw std::invalid_argument("config: grid size < 2");
  if (t_final < 0.0) throw std::invalid_argument("config: t_final < 0");
  if (error_every < 0 || energy_every < 0)
    throw std::invalid_argument("config: negative cadence");
  if (threads < 1) throw std::invalid_argument("config: threads < 1");
  if (nordsieck_degree < 1)
    throw std::invalid_argument("config: nordsieck degree < 1");
  medium.validate();
  if (medium.max_gamma() > 0.0 && !dissipation)
    throw std::invalid_argument(
        "config: damped medium requires dissipation: true");
}

namespace {

void parallel_for(std::size_t n, int threads,
                  const std::function<void(std::size_t, std::size_t)>& fn) {
  if (threads <= 1 || n < 2 * std::size_t(threads)) {
    fn(0, n);
    return;
  }
  const std::size_t chunk = (n + threads - 1) / std::size_t(threads);
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    const std::size_t b = t * chunk;
    if (b >= n) break;
    const std::size_t e = std::min(n, b + chunk);
    pool.emplace_back(fn, b, e);
  }
  for (auto& th : pool) th.join();
}

struct ColUse {
  int col;
  std::vector<std::pair<int, double>> rows;
};

// Either (sum_k A_k d_k + M): W -> V, or (sum_k A_k^T d_k - M^T): V -> W,
// grouped by source column so each derivative is formed once.
struct GroupedOp {
  int n_src = 0, n_dst = 0;
  std::array<std::vector<ColUse>, 3> curl;
  std::vector<ColUse> alg;
};

void add_entry(std::vector<ColUse>& list, int col, int row, double val) {
  for (auto& cu : list)
    if (cu.col == col) {
      cu.rows.emplace_back(row, val);
      return;
    }
  list.push_back({col, {{row, val}}});
}

GroupedOp make_op(const SymmetrizedSystem& sys, bool to_v) {
  GroupedOp op;
  op.n_src = to_v ? sys.n_w : sys.n_v;
  op.n_dst = to_v ? sys.n_v : sys.n_w;
  for (int k = 0; k < sys.dim; ++k)
    for (const auto& e : sys.curl[k]) {
      if (to_v)
        add_entry(op.curl[k], e.col, e.row, e.value);
      else
        add_entry(op.curl[k], e.row, e.col, e.value);
    }
  for (const auto& e : sys.coupling) {
    if (to_v)
      add_entry(op.alg, e.col, e.row, e.value);
    else
      add_entry(op.alg, e.row, e.col, -e.value);
  }
  return op;
}

struct Workspace {
  PolyShape shape{2, 2};
  std::size_t psize = 0;
  std::size_t block = 0;
  std::array<double, 3> dx{1.0, 1.0, 1.0};
  std::vector<double> interp, gather, scratch, cur, mid, nxt, deriv, acc, blk;
  std::vector<double> diss_polys;

  void init(int dim, int m, int n_src, int n_dst,
            const std::array<double, 3>& dxs, std::size_t n_diss_polys) {
    shape = PolyShape{dim, 2 * m + 2};
    psize = shape.size();
    block = 1;
    for (int a = 0; a < dim; ++a) block *= std::size_t(m + 1);
    dx = dxs;
    interp.resize(std::size_t(n_src) * psize);
    gather.resize(psize);
    scratch.resize(psize);
    cur.resize(std::size_t(n_dst) * psize);
    mid.resize(std::size_t(n_src) * psize);
    nxt.resize(std::size_t(n_dst) * psize);
    deriv.resize(psize);
    acc.resize(std::size_t(n_dst) * psize);
    blk.resize(block);
    diss_polys.resize(n_diss_polys * psize);
  }
};

void apply_grouped(const GroupedOp& op, Workspace& ws, const double* src,
                   double* dst) {
  std::memset(dst, 0, std::size_t(op.n_dst) * ws.psize * sizeof(double));
  for (int k = 0; k < ws.shape.dim; ++k)
    for (const auto& cu : op.curl[k]) {
      poly_diff(ws.shape, src + std::size_t(cu.col) * ws.psize,
                ws.deriv.data(), k, ws.dx[k]);
      for (const auto& [row, val] : cu.rows)
        kernels::axpy(ws.psize, val, ws.deriv.data(),
                      dst + std::size_t(row) * ws.psize);
    }
  for (const auto& cu : op.alg)
    for (const auto& [row, val] : cu.rows)
      kernels::axpy(ws.psize, val, src + std::size_t(cu.col) * ws.psize,
                    dst + std::size_t(row) * ws.psize);
}

void add_leading_block(PolyShape s, double* coeffs, int m, const double* blk) {
  const int nm = m + 1;
  if (s.dim == 1) {
    for (int i = 0; i < nm; ++i) coeffs[i] += blk[i];
    return;
  }
  const PolyShape sub{s.dim - 1, s.n};
  const std::size_t out_block = sub.size();
  std::size_t in_block = 1;
  for (int i = 0; i < s.dim - 1; ++i) in_block *= std::size_t(nm);
  for (int j = 0; j < nm; ++j)
    add_leading_block(sub, coeffs + std::size_t(j) * out_block, m,
                      blk + std::size_t(j) * in_block);
}

// Per-half-step dissipation context: which orders of the interpolated
// opposite-field antiderivatives are needed, and the own-field predicted
// terms.
struct DissContext {
  const DissipationState* own = nullptr;
  const DissipationState* source = nullptr;
  std::vector<int> src_orders;  // even orders 2l-2 <= p actually used
  bool any() const {
    return (own && !own->empty()) || (source && !source->empty());
  }
};

// The staggered Taylor increment for one cell.  interp holds the source
// interpolants; the result lands in ws.acc.  Stage l >= 2 evaluates
// fwd( bwd(stage_{l-1}) + d^{2l-2} D_src ) + d^{2l-1} D_own(predicted),
// the time-derivative orders of the dissipative corrections as displayed.
void cell_increment_core(const GroupedOp& fwd, const GroupedOp& bwd,
                         Workspace& ws, int q, double dt,
                         const DissContext* diss, std::size_t node,
                         std::vector<std::vector<TensorPoly>>* stages_out) {
  const std::size_t psize = ws.psize;
  const bool own_terms = diss && diss->own && !diss->own->empty();
  const bool src_terms = diss && diss->source && !diss->source->empty();

  apply_grouped(fwd, ws, ws.interp.data(), ws.cur.data());
  if (own_terms) {
    const auto& slots = diss->own->slots();
    for (int d = 0; d < int(slots.size()); ++d) {
      diss->own->derivative_block(node, d, 1, 0.5, ws.blk.data());
      add_leading_block(ws.shape, ws.cur.data() + std::size_t(slots[d]) * psize,
                        diss->own->m(), ws.blk.data());
    }
  }
  double coef = dt;  // 2 (dt/2)^{2l-1} / (2l-1)!
  kernels::scale(std::size_t(fwd.n_dst) * psize, coef, ws.cur.data(),
                 ws.acc.data());
  if (stages_out) {
    std::vector<TensorPoly> st;
    for (int c = 0; c < fwd.n_dst; ++c) {
      TensorPoly p(ws.shape.dim, ws.shape.n - 1);
      std::memcpy(p.data(), ws.cur.data() + std::size_t(c) * psize,
                  psize * sizeof(double));
      st.push_back(std::move(p));
    }
    stages_out->push_back(std::move(st));
  }

  for (int l = 2; l <= q; ++l) {
    apply_grouped(bwd, ws, ws.cur.data(), ws.mid.data());
    if (src_terms) {
      const int r = 2 * l - 2;
      const auto& slots = diss->source->slots();
      for (std::size_t oi = 0; oi < diss->src_orders.size(); ++oi) {
        if (diss->src_orders[oi] != r) continue;
        for (int d = 0; d < int(slots.size()); ++d)
          kernels::axpy(psize, 1.0,
                        ws.diss_polys.data() +
                            (oi * slots.size() + std::size_t(d)) * psize,
                        ws.mid.data() + std::size_t(slots[d]) * psize);
      }
    }
    apply_grouped(fwd, ws, ws.mid.data(), ws.nxt.data());
    if (own_terms) {
      const int r = 2 * l - 1;
      if (r <= diss->own->p()) {
        const auto& slots = diss->own->slots();
        for (int d = 0; d < int(slots.size()); ++d) {
          diss->own->derivative_block(node, d, r, 0.5, ws.blk.data());
          add_leading_block(ws.shape,
                            ws.nxt.data() + std::size_t(slots[d]) * psize,
                            diss->own->m(), ws.blk.data());
        }
      }
    }
    coef *= (dt / 2.0) * (dt / 2.0) / ((2.0 * l - 1.0) * (2.0 * l - 2.0));
    kernels::axpy(std::size_t(fwd.n_dst) * psize, coef, ws.nxt.data(),
                  ws.acc.data());
    std::swap(ws.cur, ws.nxt);
    if (stages_out) {
      std::vector<TensorPoly> st;
      for (int c = 0; c < fwd.n_dst; ++c) {
        TensorPoly p(ws.shape.dim, ws.shape.n - 1);
        std::memcpy(p.data(), ws.cur.data() + std::size_t(c) * psize,
                    psize * sizeof(double));
        st.push_back(std::move(p));
      }
      stages_out->push_back(std::move(st));
    }
  }
}

bool field_finite(const HermiteField& f) {
  double s = 0.0;
  for (double v : f.raw()) s += v;
  return std::isfinite(s);
}

}  // namespace

void half_step(HermiteField& field, const HermiteField& source,
               const SymmetrizedSystem& sys, const HBOperator& op, int q,
               double dt, int threads, HermiteField* increment_out,
               const DissipationState* diss_own,
               const DissipationState* diss_source) {
  if (field.grid().dual == source.grid().dual ||
      !field.grid().same_extents(source.grid()))
    throw std::invalid_argument("half_step: grids must be dual to each other");
  if (field.m() != source.m() || field.m() != op.m())
    throw std::invalid_argument("half_step: m mismatch");
  const bool to_v = !field.grid().dual;
  const int n_dst = to_v ? sys.n_v : sys.n_w;
  const int n_src = to_v ? sys.n_w : sys.n_v;
  if (field.n_comp() != n_dst || source.n_comp() != n_src)
    throw std::invalid_argument("half_step: component-count mismatch");
  const double tol = 1e-9 * std::max(1.0, std::abs(dt));
  if (std::abs(source.time() - (field.time() + dt / 2.0)) > tol)
    throw std::invalid_argument("half_step: time-level mismatch");
  if (q < 1) throw std::invalid_argument("half_step: q < 1");

  const GroupedOp fwd = make_op(sys, to_v);
  const GroupedOp bwd = make_op(sys, !to_v);
  const Grid centers = field.grid();
  const Grid srcg = source.grid();
  const int dim = centers.dim;
  const int m = field.m();
  const unsigned n_corners = 1u << dim;
  std::array<double, 3> dxs{1.0, 1.0, 1.0};
  for (int a = 0; a < dim; ++a) dxs[a] = centers.dx(a);

  DissContext diss;
  diss.own = diss_own;
  diss.source = diss_source;
  std::size_t n_diss_polys = 0;
  if (diss_source && !diss_source->empty()) {
    for (int r = 2; r <= std::min(2 * q - 2, diss_source->p()); r += 2)
      diss.src_orders.push_back(r);
    n_diss_polys = diss.src_orders.size() * diss_source->slots().size();
  }
  const DissContext* diss_ptr = diss.any() ? &diss : nullptr;

  auto work = [&](std::size_t begin, std::size_t end) {
    Workspace ws;
    ws.init(dim, m, n_src, n_dst, dxs, n_diss_polys);
    std::array<const double*, 8> corners{};
    std::array<std::size_t, 8> cnodes{};
    for (std::size_t node = begin; node < end; ++node) {
      const auto cc = centers.node_coords(node);
      for (unsigned b = 0; b < n_corners; ++b)
        cnodes[b] = cell_corner_node(srcg, cc, b);
      for (int comp = 0; comp < n_src; ++comp) {
        for (unsigned b = 0; b < n_corners; ++b)
          corners[b] = source.block(cnodes[b], comp);
        double* dst = ws.interp.data() + std::size_t(comp) * ws.psize;
        gather_cell_stack(dim, m, corners.data(), dst);
        op.apply(dim, dst, ws.scratch.data());
      }
      if (n_diss_polys > 0) {
        const auto& slots = diss_source->slots();
        for (std::size_t oi = 0; oi < diss.src_orders.size(); ++oi) {
          const int r = diss.src_orders[oi];
          // d^r at the anchor time is the single slot r, scaled by r!/h^r
          double fact = 1.0;
          for (int i = 2; i <= r; ++i) fact *= i;
          double hpow = 1.0;
          for (int i = 0; i < r; ++i) hpow *= diss_source->h();
          for (int d = 0; d < int(slots.size()); ++d) {
            for (unsigned b = 0; b < n_corners; ++b)
              corners[b] = diss_source->slot_block(cnodes[b], d, r);
            double* dst = ws.diss_polys.data() +
                          (oi * slots.size() + std::size_t(d)) * ws.psize;
            gather_cell_stack(dim, m, corners.data(), dst);
            op.apply(dim, dst, ws.scratch.data());
            kernels::scale(ws.psize, fact / hpow, dst, dst);
          }
        }
      }
      cell_increment_core(fwd, bwd, ws, q, dt, diss_ptr, node, nullptr);
      for (int comp = 0; comp < n_dst; ++comp) {
        poly_extract_dofs(ws.shape, ws.acc.data() + std::size_t(comp) * ws.psize,
                          m, ws.blk.data());
        kernels::axpy(ws.block, 1.0, ws.blk.data(), field.block(node, comp));
        if (increment_out)
          std::memcpy(increment_out->block(node, comp), ws.blk.data(),
                      ws.block * sizeof(double));
      }
    }
  };
  parallel_for(centers.n_nodes(), threads, work);
  field.set_time(field.time() + dt);
  if (increment_out) increment_out->set_time(field.time());
}

std::vector<TensorPoly> cell_increment(
    const SymmetrizedSystem& sys, bool v_from_w,
    const std::vector<TensorPoly>& source_polys,
    const std::array<double, 3>& dx, int q, double dt,
    std::vector<std::vector<TensorPoly>>* stages_out) {
  const int n_src = v_from_w ? sys.n_w : sys.n_v;
  const int n_dst = v_from_w ? sys.n_v : sys.n_w;
  if (int(source_polys.size()) != n_src)
    throw std::invalid_argument("cell_increment: component-count mismatch");
  const PolyShape shape = source_polys[0].shape();
  if (shape.n % 2 != 0)
    throw std::invalid_argument("cell_increment: container must be 2m+2 wide");
  const int m = shape.n / 2 - 1;
  Workspace ws;
  ws.init(shape.dim, m, n_src, n_dst, dx, 0);
  for (int c = 0; c < n_src; ++c) {
    if (source_polys[c].shape() != shape)
      throw std::invalid_argument("cell_increment: shape mismatch");
    std::memcpy(ws.interp.data() + std::size_t(c) * ws.psize,
                source_polys[c].data(), ws.psize * sizeof(double));
  }
  const GroupedOp fwd = make_op(sys, v_from_w);
  const GroupedOp bwd = make_op(sys, !v_from_w);
  cell_increment_core(fwd, bwd, ws, q, dt, nullptr, 0, stages_out);
  std::vector<TensorPoly> out;
  for (int c = 0; c < n_dst; ++c) {
    TensorPoly p(shape.dim, shape.n - 1);
    std::memcpy(p.data(), ws.acc.data() + std::size_t(c) * ws.psize,
                ws.psize * sizeof(double));
    out.push_back(std::move(p));
  }
  return out;
}

HermiteField self_start(const HermiteField& v0, const HermiteField& w0,
                        const SymmetrizedSystem& sys, const HBOperator& op,
                        int q, double dt) {
  if (v0.grid().dual || !w0.grid().dual)
    throw std::invalid_argument("self_start: v0 must be primal, w0 dual");
  if (std::abs(v0.time() - w0.time()) > 1e-12)
    throw std::invalid_argument("self_start: v0/w0 time mismatch");
  const int dim = v0.grid().dim;
  const int m = v0.m();
  const unsigned n_corners = 1u << dim;
  HermiteField w = w0;
  w.set_time(w0.time() + dt / 2.0);

  const GroupedOp to_w = make_op(sys, false);
  const GroupedOp to_v = make_op(sys, true);
  std::array<double, 3> dxs{1.0, 1.0, 1.0};
  for (int a = 0; a < dim; ++a) dxs[a] = v0.grid().dx(a);

  Workspace ws;
  ws.init(dim, m, sys.n_v, sys.n_w, dxs, 0);
  const std::size_t psize = ws.psize;
  std::vector<double> s_cur(std::size_t(sys.n_v) * psize);
  std::vector<double> s_nxt(std::size_t(sys.n_v) * psize);
  std::vector<double> t_cur(std::size_t(sys.n_w) * psize);
  std::vector<double> t_nxt(std::size_t(sys.n_w) * psize);
  std::vector<double> acc(std::size_t(sys.n_w) * psize);
  std::array<const double*, 8> corners{};

  const Grid centers = w0.grid();
  const std::size_t n_nodes = centers.n_nodes();
  for (std::size_t node = 0; node < n_nodes; ++node) {
    const auto cc = centers.node_coords(node);
    for (int comp = 0; comp < sys.n_v; ++comp) {
      for (unsigned b = 0; b < n_corners; ++b)
        corners[b] = v0.block(cell_corner_node(v0.grid(), cc, b), comp);
      double* dst = s_cur.data() + std::size_t(comp) * psize;
      gather_cell_stack(dim, m, corners.data(), dst);
      op.apply(dim, dst, ws.scratch.data());
    }
    std::memset(t_cur.data(), 0, t_cur.size() * sizeof(double));
    for (int comp = 0; comp < sys.n_w; ++comp)
      poly_embed_dofs(ws.shape, t_cur.data() + std::size_t(comp) * psize, m,
                      w0.block(node, comp));
    std::memset(acc.data(), 0, acc.size() * sizeof(double));
    double coef = 1.0;  // (dt/2)^r / r!
    for (int r = 1; r <= q; ++r) {
      apply_grouped(to_w, ws, s_cur.data(), t_nxt.data());
      for (int c = 0; c < sys.n_w; ++c)
        if (sys.gamma_w[c] != 0.0)
          kernels::axpy(psize, -sys.gamma_w[c],
                        t_cur.data() + std::size_t(c) * psize,
                        t_nxt.data() + std::size_t(c) * psize);
      apply_grouped(to_v, ws, t_cur.data(), s_nxt.data());
      for (int c = 0; c < sys.n_v; ++c)
        if (sys.gamma_v[c] != 0.0)
          kernels::axpy(psize, -sys.gamma_v[c],
                        s_cur.data() + std::size_t(c) * psize,
                        s_nxt.data() + std::size_t(c) * psize);
      coef *= (dt / 2.0) / r;
      kernels::axpy(acc.size(), coef, t_nxt.data(), acc.data());
      std::swap(s_cur, s_nxt);
      std::swap(t_cur, t_nxt);
    }
    for (int comp = 0; comp < sys.n_w; ++comp) {
      poly_extract_dofs(ws.shape, acc.data() + std::size_t(comp) * psize, m,
                        ws.blk.data());
      kernels::axpy(ws.block, 1.0, ws.blk.data(), w.block(node, comp));
    }
  }
  return w;
}

RunReport run(const SolverConfig& config) {
  return run(config, std::function<void(const RunSample&)>());
}

RunReport run(const SolverConfig& config,
              const std::function<void(const RunSample&)>& on_sample) {
  config.validate();
  if (config.cfl_exceeds_bound())
    std::fprintf(stderr,
                 "hermax: warning: cfl = %g violates c*dt < dx\n", config.cfl);
  const SymmetrizedSystem sys =
      assemble_system(config.medium, config.dim, config.mode);
  const HBOperator op(config.m);
  const int q = config.effective_q();
  const ExactSolution sol = ExactSolution::make(
      config.regime, config.k, config.medium, config.dim == 1 ? 1 : 2);

  Grid primal;
  primal.dim = config.dim;
  primal.n = config.n_grid;
  primal.dual = false;
  Grid dual = primal;
  dual.dual = true;

  const double dt = config.dt(sys);
  const long n_steps =
      config.t_final <= 0.0
          ? 0
          : std::max<long>(1, long(std::ceil(config.t_final / dt - 1e-9)));

  HermiteField v(primal, config.m, sys.n_v, 0.0);
  HermiteField w(dual, config.m, sys.n_w, dt / 2.0);
  if (config.init == InitMethod::exact_solution) {
    fill_exact_field(v, sys, 'v', sol, 0.0);
    fill_exact_field(w, sys, 'w', sol, dt / 2.0);
  } else if (config.init == InitMethod::self_start) {
    fill_exact_field(v, sys, 'v', sol, 0.0);
    HermiteField w0(dual, config.m, sys.n_w, 0.0);
    fill_exact_field(w0, sys, 'w', sol, 0.0);
    w = self_start(v, w0, sys, op, q, dt);
  }

  DissipationState dv, dw;
  const bool diss = config.dissipation && sys.has_damping();
  if (diss) {
    const auto vs = sys.damped_v_slots();
    const auto wsl = sys.damped_w_slots();
    std::vector<double> gv, gw;
    for (int s : vs) gv.push_back(sys.gamma_v[s]);
    for (int s : wsl) gw.push_back(sys.gamma_w[s]);
    dv = DissipationState(primal, config.m, vs, gv, config.nordsieck_degree,
                          dt);
    dw = DissipationState(dual, config.m, wsl, gw, config.nordsieck_degree,
                          dt);
    if (config.init == InitMethod::exact_solution) {
      dv.init_exact(sys, 'v', sol, 0.0);
      dw.init_exact(sys, 'w', sol, dt / 2.0);
    } else {
      dv.init_general(v);
      dw.init_general(w);
    }
  }

  HermiteField v_inc(primal, config.m, sys.n_v, 0.0);
  HermiteField w_inc(dual, config.m, sys.n_w, 0.0);
  ErrorAccumulator err(sys, sol, config.m, dual);

  RunReport rep;
  rep.dt = dt;
  rep.n_steps = n_steps;
  auto push = [&](const RunSample& s) {
    rep.samples.push_back(s);
    if (on_sample) on_sample(s);
  };

  {
    RunSample s0;
    s0.step = 0;
    s0.time = 0.0;
    if (config.error_every > 0)
      s0.rel_l2 = err.measure(w, op, w.time());
    if (config.energy_every > 0) {
      s0.has_energy = true;
      s0.energy_v = hb_energy(v, op);
      s0.energy_w = hb_energy(w, op);
    }
    push(s0);
  }

  for (long n = 1; n <= n_steps; ++n) {
    half_step(v, w, sys, op, q, dt, config.threads, &v_inc,
              diss ? &dv : nullptr, diss ? &dw : nullptr);
    if (diss) dv.advance_and_correct(v);
    half_step(w, v, sys, op, q, dt, config.threads, &w_inc,
              diss ? &dw : nullptr, diss ? &dv : nullptr);
    if (diss) dw.advance_and_correct(w);

    if (!field_finite(v) || !field_finite(w)) {
      rep.aborted = true;
      rep.abort_step = n;
      break;
    }

    RunSample s;
    s.step = n;
    s.time = n * dt;
    if (config.error_every > 0 &&
        (n % config.error_every == 0 || n == n_steps)) {
      err.sample(w, op, w.time());
      s.rel_l2 = err.last_rel_l2();
      s.edef = err.edef();
    }
    if (config.energy_every > 0 &&
        (n % config.energy_every == 0 || n == n_steps || n == 1)) {
      s.has_energy = true;
      s.energy_v = hb_energy(v, op);
      s.energy_w = hb_energy(w, op);
      const ConservedPair cp = conserved_quantities(v, w, v_inc, w_inc, op);
      s.has_egen = true;
      s.egenn = cp.egenn;
      s.egenh = cp.egenh;
    }
    push(s);
  }
  rep.edef_final = err.edef();
  rep.max_rel_l2 = err.max_rel_l2();
  return rep;
}

}  // namespace hermax
