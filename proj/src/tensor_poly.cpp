#include "hermax/tensor_poly.hpp"

#include <stdexcept>

#include "hermax/kernels.hpp"

namespace hermax {

void poly_diff(PolyShape s, const double* src, double* dst, int axis,
               double dx) {
  if (axis < 0 || axis >= s.dim) throw std::invalid_argument("poly_diff: axis");
  if (!(dx > 0.0) && !(dx < 0.0))
    throw std::invalid_argument("poly_diff: dx must be nonzero");
  const std::size_t stride = s.stride(axis);
  const std::size_t n_outer = s.size() / (stride * std::size_t(s.n));
  kernels::diff_axis(n_outer, std::size_t(s.n), stride, 1.0 / dx, src, dst);
}

double poly_eval(PolyShape s, const double* coeffs, const double* xi) {
  if (s.dim == 1) {
    double r = 0.0;
    for (int j = s.n - 1; j >= 0; --j) r = r * xi[0] + coeffs[j];
    return r;
  }
  const PolyShape sub{s.dim - 1, s.n};
  const std::size_t block = sub.size();
  const double t = xi[s.dim - 1];
  double r = 0.0;
  for (int j = s.n - 1; j >= 0; --j)
    r = r * t + poly_eval(sub, coeffs + std::size_t(j) * block, xi);
  return r;
}

void poly_extract_dofs(PolyShape s, const double* coeffs, int m, double* out) {
  if (m < 0 || m >= s.n)
    throw std::invalid_argument("poly_extract_dofs: m exceeds degree");
  const int nm = m + 1;
  if (s.dim == 1) {
    for (int i = 0; i < nm; ++i) out[i] = coeffs[i];
    return;
  }
  const PolyShape sub{s.dim - 1, s.n};
  const std::size_t in_block = sub.size();
  std::size_t out_block = 1;
  for (int i = 0; i < s.dim - 1; ++i) out_block *= std::size_t(nm);
  for (int j = 0; j < nm; ++j)
    poly_extract_dofs(sub, coeffs + std::size_t(j) * in_block, m,
                      out + std::size_t(j) * out_block);
}

void poly_embed_dofs(PolyShape s, double* coeffs, int m, const double* in) {
  if (m < 0 || m >= s.n)
    throw std::invalid_argument("poly_embed_dofs: m exceeds degree");
  const int nm = m + 1;
  if (s.dim == 1) {
    for (int i = 0; i < nm; ++i) coeffs[i] = in[i];
    return;
  }
  const PolyShape sub{s.dim - 1, s.n};
  const std::size_t out_block = sub.size();
  std::size_t in_block = 1;
  for (int i = 0; i < s.dim - 1; ++i) in_block *= std::size_t(nm);
  for (int j = 0; j < nm; ++j)
    poly_embed_dofs(sub, coeffs + std::size_t(j) * out_block, m,
                    in + std::size_t(j) * in_block);
}

TensorPoly poly_diff(const TensorPoly& p, int axis, double dx) {
  TensorPoly q(p.dim(), p.degree());
  poly_diff(p.shape(), p.data(), q.data(), axis, dx);
  return q;
}

TensorPoly poly_axpy(double alpha, const TensorPoly& p, const TensorPoly& q) {
  if (p.shape() != q.shape())
    throw std::invalid_argument("poly_axpy: shape mismatch");
  TensorPoly r = q;
  kernels::axpy(r.size(), alpha, p.data(), r.data());
  return r;
}

double poly_eval(const TensorPoly& p, const double* xi) {
  return poly_eval(p.shape(), p.data(), xi);
}

std::vector<double> poly_extract_dofs(const TensorPoly& p, int m) {
  std::size_t n = 1;
  for (int i = 0; i < p.dim(); ++i) n *= std::size_t(m + 1);
  std::vector<double> out(n);
  poly_extract_dofs(p.shape(), p.data(), m, out.data());
  return out;
}

}  // namespace hermax
