#pragma once

#include <cstddef>
#include <vector>

// Dense tensor-product polynomials on a single cell in scaled local
// coordinates xi in [-1/2, 1/2]^d, xi_i = (x_i - x_center,i) / dx_i.
//
//   p(xi) = sum_beta a_beta xi_1^{beta_1} ... xi_d^{beta_d},
//   0 <= beta_i <= degree.
//
// Coefficients are stored dense, row-major with direction 1 fastest:
// index = beta_1 + n*beta_2 + n^2*beta_3, n = degree+1.  With this
// convention the coefficient a_alpha of a field's cell polynomial equals
// the scaled nodal degree of freedom (dx^{|alpha|}/alpha!) D^alpha f at the
// cell center, so extracting node data is a leading-block copy.

namespace hermax {

struct PolyShape {
  int dim = 1;  // 1, 2 or 3
  int n = 1;    // coefficients per direction, degree + 1

  std::size_t size() const {
    std::size_t s = 1;
    for (int i = 0; i < dim; ++i) s *= std::size_t(n);
    return s;
  }
  std::size_t stride(int axis) const {
    std::size_t s = 1;
    for (int i = 0; i < axis; ++i) s *= std::size_t(n);
    return s;
  }
  bool operator==(const PolyShape&) const = default;
};

// d/dx_axis of the cell polynomial in physical units; the degree container
// is unchanged (top row along the axis becomes zero).  src == dst allowed.
void poly_diff(PolyShape s, const double* src, double* dst, int axis,
               double dx);

// Horner evaluation at xi (array of s.dim coordinates).
double poly_eval(PolyShape s, const double* coeffs, const double* xi);

// Leading (m+1)^dim coefficient block a_alpha, 0 <= alpha_i <= m; by the
// centering convention these are the scaled Taylor DOFs at the cell center.
void poly_extract_dofs(PolyShape s, const double* coeffs, int m, double* out);
// Inverse scatter of a (m+1)^dim block into the leading corner; the rest of
// dst is left untouched.
void poly_embed_dofs(PolyShape s, double* coeffs, int m, const double* in);

// Value-semantic wrapper used by tests and non-hot paths.
class TensorPoly {
 public:
  TensorPoly() = default;
  TensorPoly(int dim, int degree)
      : shape_{dim, degree + 1}, coeffs_(shape_.size(), 0.0) {}

  int dim() const { return shape_.dim; }
  int degree() const { return shape_.n - 1; }
  PolyShape shape() const { return shape_; }
  std::size_t size() const { return coeffs_.size(); }
  double* data() { return coeffs_.data(); }
  const double* data() const { return coeffs_.data(); }
  double& operator[](std::size_t i) { return coeffs_[i]; }
  double operator[](std::size_t i) const { return coeffs_[i]; }

 private:
  PolyShape shape_{1, 1};
  std::vector<double> coeffs_{0.0};
};

TensorPoly poly_diff(const TensorPoly& p, int axis, double dx);
// alpha*p + q, shapes must match
TensorPoly poly_axpy(double alpha, const TensorPoly& p, const TensorPoly& q);
double poly_eval(const TensorPoly& p, const double* xi);
std::vector<double> poly_extract_dofs(const TensorPoly& p, int m);

}  // namespace hermax
