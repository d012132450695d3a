#include "hermax/hb_interp.hpp"

#include <cstring>
#include <stdexcept>

#include "hermax/kernels.hpp"

namespace hermax {

namespace {

// Interpolant coefficients (about xi = 0) from stacked 1D data
// [left c_0..c_m, right c_0..c_m].  Confluent divided differences: with
// unit node spacing the scaled Taylor coefficients are exactly the
// repeated-node divided differences f[xi,...,xi] = f^(k)(xi)/k!.
void newton_1d(int m, const double* data, double* coeffs) {
  const int n = 2 * m + 2;
  std::vector<double> nodes(n);
  for (int i = 0; i <= m; ++i) nodes[i] = -0.5;
  for (int i = m + 1; i < n; ++i) nodes[i] = 0.5;

  // table[j] holds column j of the divided-difference table (length n-j);
  // column 0 is the node value c_0 of the owning block
  std::vector<double> col(n), next(n);
  for (int i = 0; i < n; ++i) col[i] = data[i <= m ? 0 : m + 1];
  std::vector<double> newton(n);
  newton[0] = col[0];
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i + j < n; ++i) {
      const double hx = nodes[i + j] - nodes[i];
      if (hx == 0.0) {
        // entirely inside one confluent block: c_j of that node
        next[i] = data[(i <= m ? 0 : m + 1) + j];
      } else {
        next[i] = (col[i + 1] - col[i]) / hx;
      }
    }
    col.swap(next);
    newton[j] = col[0];
  }

  // expand sum_j newton[j] * prod_{i<j} (xi - nodes[i]) about xi = 0
  for (int i = 0; i < n; ++i) coeffs[i] = 0.0;
  coeffs[0] = newton[n - 1];
  int deg = 0;
  for (int j = n - 2; j >= 0; --j) {
    // multiply by (xi - nodes[j]) then add newton[j]
    for (int k = deg + 1; k > 0; --k)
      coeffs[k] = coeffs[k - 1] - nodes[j] * coeffs[k];
    coeffs[0] = -nodes[j] * coeffs[0] + newton[j];
    ++deg;
  }
}

}  // namespace

HBOperator::HBOperator(int m) : m_(m) {
  if (m < 0) throw std::invalid_argument("HBOperator: m must be >= 0");
  if (m > 12) throw std::invalid_argument("HBOperator: m > 12 rejected");
  const int n = rows();
  mat_.assign(std::size_t(n) * n, 0.0);
  std::vector<double> e(n, 0.0), col(n);
  for (int i = 0; i < n; ++i) {
    e[i] = 1.0;
    newton_1d(m, e.data(), col.data());
    e[i] = 0.0;
    for (int k = 0; k < n; ++k) mat_[std::size_t(k) * n + i] = col[k];
  }
}

void HBOperator::apply(int dim, double* data, double* scratch) const {
  const std::size_t n = std::size_t(rows());
  std::size_t total = 1;
  for (int a = 0; a < dim; ++a) total *= n;
  double* cur = data;
  double* alt = scratch;
  for (int a = 0; a < dim; ++a) {
    std::size_t stride = 1;
    for (int i = 0; i < a; ++i) stride *= n;
    kernels::contract_axis(total / (stride * n), n, n, stride, mat_.data(),
                           cur, alt);
    std::swap(cur, alt);
  }
  if (cur != data) std::memcpy(data, cur, total * sizeof(double));
}

HBOperator build_hb_operator(int m) { return HBOperator(m); }

void gather_cell_stack(int dim, int m, const double* const* corners,
                       double* stacked) {
  const int nb = m + 1;
  const int ns = 2 * m + 2;
  const unsigned n_corners = 1u << dim;
  for (unsigned c = 0; c < n_corners; ++c) {
    const double* blk = corners[c];
    if (dim == 1) {
      std::memcpy(stacked + ((c & 1u) ? nb : 0), blk, nb * sizeof(double));
    } else if (dim == 2) {
      const int o1 = (c & 1u) ? nb : 0;
      const int o2 = (c & 2u) ? nb : 0;
      for (int j = 0; j < nb; ++j)
        std::memcpy(stacked + (o2 + j) * ns + o1, blk + j * nb,
                    nb * sizeof(double));
    } else {
      const int o1 = (c & 1u) ? nb : 0;
      const int o2 = (c & 2u) ? nb : 0;
      const int o3 = (c & 4u) ? nb : 0;
      for (int k = 0; k < nb; ++k)
        for (int j = 0; j < nb; ++j)
          std::memcpy(stacked + ((o3 + k) * ns + o2 + j) * ns + o1,
                      blk + (k * nb + j) * nb, nb * sizeof(double));
    }
  }
}

TensorPoly interpolate_cell(const HBOperator& op, int dim,
                            const double* const* corners) {
  TensorPoly p(dim, 2 * op.m() + 1);
  std::vector<double> scratch(p.size());
  gather_cell_stack(dim, op.m(), corners, p.data());
  op.apply(dim, p.data(), scratch.data());
  return p;
}

std::size_t cell_corner_node(const Grid& data_grid,
                             const std::array<int, 3>& center, unsigned bits) {
  std::array<int, 3> idx = center;
  const int base = data_grid.dual ? -1 : 0;
  for (int a = 0; a < data_grid.dim; ++a)
    idx[a] += base + int((bits >> a) & 1u);
  return data_grid.node_index(idx);
}

PiecewiseField hb_project_field(const HermiteField& field,
                                const HBOperator& op) {
  if (op.m() != field.m())
    throw std::invalid_argument("hb_project_field: operator/field m mismatch");
  const Grid& g = field.grid();
  const Grid centers = g.opposite();
  const int dim = g.dim;
  const unsigned n_corners = 1u << dim;
  PiecewiseField out(centers, field.n_comp(), PolyShape{dim, 2 * op.m() + 2});
  std::vector<double> scratch(out.shape.size());
  std::vector<const double*> corners(n_corners);
  const std::size_t n_cells = centers.n_nodes();
  for (std::size_t cidx = 0; cidx < n_cells; ++cidx) {
    const auto cc = centers.node_coords(cidx);
    std::array<std::size_t, 8> nodes{};
    for (unsigned b = 0; b < n_corners; ++b)
      nodes[b] = cell_corner_node(g, cc, b);
    for (int comp = 0; comp < field.n_comp(); ++comp) {
      for (unsigned b = 0; b < n_corners; ++b)
        corners[b] = field.block(nodes[b], comp);
      double* dst = out.cell(cidx, comp);
      gather_cell_stack(dim, op.m(), corners.data(), dst);
      op.apply(dim, dst, scratch.data());
    }
  }
  return out;
}

}  // namespace hermax
