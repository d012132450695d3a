#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "hermax/tensor_poly.hpp"

// Periodic Cartesian grids on (-pi, pi)^d and the nodal Hermite data living
// on them.  The primal grid has nodes at -pi + j*dx, the dual grid at
// -pi + (j+1/2)*dx; V data sits on the primal grid at integer time levels,
// W data on the dual grid at half-integer levels.

namespace hermax {

inline constexpr double kDomainLo = -3.14159265358979323846;
inline constexpr double kDomainLen = 2.0 * 3.14159265358979323846;

struct Grid {
  int dim = 2;
  std::array<int, 3> n{1, 1, 1};  // nodes per direction
  bool dual = false;

  double dx(int axis) const { return kDomainLen / n[axis]; }
  double min_dx() const {
    double d = dx(0);
    for (int a = 1; a < dim; ++a) d = d < dx(a) ? d : dx(a);
    return d;
  }
  std::size_t n_nodes() const {
    std::size_t s = 1;
    for (int a = 0; a < dim; ++a) s *= std::size_t(n[a]);
    return s;
  }
  double coord(int axis, int idx) const {
    return kDomainLo + (idx + (dual ? 0.5 : 0.0)) * dx(axis);
  }
  int wrap(int axis, int idx) const {
    const int m = n[axis];
    idx %= m;
    return idx < 0 ? idx + m : idx;
  }
  std::size_t node_index(const std::array<int, 3>& idx) const {
    std::size_t r = std::size_t(wrap(dim - 1, idx[dim - 1]));
    for (int a = dim - 2; a >= 0; --a)
      r = r * std::size_t(n[a]) + std::size_t(wrap(a, idx[a]));
    return r;
  }
  std::array<int, 3> node_coords(std::size_t flat) const {
    std::array<int, 3> idx{0, 0, 0};
    for (int a = 0; a < dim; ++a) {
      idx[a] = int(flat % std::size_t(n[a]));
      flat /= std::size_t(n[a]);
    }
    return idx;
  }
  Grid opposite() const {
    Grid g = *this;
    g.dual = !dual;
    return g;
  }
  bool same_extents(const Grid& o) const { return dim == o.dim && n == o.n; }
};

// Nodal storage: per node, per state component, a block of (m+1)^dim scaled
// Taylor coefficients (dx^{|alpha|}/alpha! D^alpha u), direction 1 fastest.
class HermiteField {
 public:
  HermiteField() = default;
  HermiteField(const Grid& grid, int m, int n_comp, double time = 0.0)
      : grid_(grid), m_(m), n_comp_(n_comp), time_(time) {
    block_ = 1;
    for (int a = 0; a < grid.dim; ++a) block_ *= std::size_t(m + 1);
    data_.assign(grid.n_nodes() * std::size_t(n_comp) * block_, 0.0);
  }

  const Grid& grid() const { return grid_; }
  int m() const { return m_; }
  int n_comp() const { return n_comp_; }
  std::size_t block_size() const { return block_; }
  double time() const { return time_; }
  void set_time(double t) { time_ = t; }

  double* block(std::size_t node, int comp) {
    return data_.data() + (node * std::size_t(n_comp_) + comp) * block_;
  }
  const double* block(std::size_t node, int comp) const {
    return data_.data() + (node * std::size_t(n_comp_) + comp) * block_;
  }
  std::vector<double>& raw() { return data_; }
  const std::vector<double>& raw() const { return data_; }

 private:
  Grid grid_{};
  int m_ = 0;
  int n_comp_ = 0;
  double time_ = 0.0;
  std::size_t block_ = 1;
  std::vector<double> data_;
};

// A piecewise tensor-polynomial field: one polynomial per cell, cells
// indexed by their center node (which lives on the grid opposite to the
// data the polynomials came from).
struct PiecewiseField {
  Grid centers;  // grid of cell centers
  int n_comp = 0;
  PolyShape shape;
  std::vector<double> coeffs;  // [cell][comp][shape.size()]

  PiecewiseField() = default;
  PiecewiseField(const Grid& c, int nc, PolyShape s)
      : centers(c), n_comp(nc), shape(s),
        coeffs(c.n_nodes() * std::size_t(nc) * s.size(), 0.0) {}

  double* cell(std::size_t cell_idx, int comp) {
    return coeffs.data() +
           (cell_idx * std::size_t(n_comp) + comp) * shape.size();
  }
  const double* cell(std::size_t cell_idx, int comp) const {
    return coeffs.data() +
           (cell_idx * std::size_t(n_comp) + comp) * shape.size();
  }
};

}  // namespace hermax
