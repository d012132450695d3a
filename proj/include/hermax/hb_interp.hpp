#pragma once

#include <vector>

#include "hermax/grid.hpp"
#include "hermax/tensor_poly.hpp"

// Hermite-Birkhoff projection I_m: per cell, the unique tensor-product
// polynomial of degree 2m+1 per direction matching the (m+1)^d scaled
// Taylor coefficients stored at the 2^d surrounding nodes.

namespace hermax {

class HBOperator {
 public:
  // Two-point confluent Hermite interpolation with m+1 conditions at
  // xi = -1/2 and xi = +1/2, assembled by Newton divided differences with
  // repeated nodes and expanded to centered monomials.  The matrix is
  // dx-independent because node data are already dx-scaled.
  explicit HBOperator(int m);

  int m() const { return m_; }
  int rows() const { return 2 * m_ + 2; }
  // (2m+2) x (2m+2), row-major; maps stacked 1D data
  // [left c_0..c_m, right c_0..c_m] to centered coefficients a_0..a_{2m+1}.
  const double* matrix1d() const { return mat_.data(); }

  // In-place tensor application: data holds the stacked corner tensor of
  // size (2m+2)^dim (see gather_cell_stack) and is replaced by the
  // interpolant coefficients.  scratch must have the same size.
  void apply(int dim, double* data, double* scratch) const;

 private:
  int m_;
  std::vector<double> mat_;
};

HBOperator build_hb_operator(int m);

// Stacks 2^dim corner blocks of (m+1)^dim coefficients into the
// (2m+2)^dim tensor consumed by HBOperator::apply.  corners[c] is the block
// of the corner whose bit b of c selects the high side along axis b; along
// each axis indices 0..m hold the low-side data, m+1..2m+1 the high side.
void gather_cell_stack(int dim, int m, const double* const* corners,
                       double* stacked);

// corners as in gather_cell_stack.
TensorPoly interpolate_cell(const HBOperator& op, int dim,
                            const double* const* corners);

// One interpolant per cell of the staggered grid, corners gathered with
// periodic wraparound; cell centers are the nodes of the opposite grid.
PiecewiseField hb_project_field(const HermiteField& field,
                                const HBOperator& op);

// Corner node (flat index) of the cell centered at opposite-grid node
// `center`, for corner bits `bits`.
std::size_t cell_corner_node(const Grid& data_grid,
                             const std::array<int, 3>& center, unsigned bits);

}  // namespace hermax
