#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "hermax/hb_interp.hpp"
#include "hermax/tensor_poly.hpp"

// Shared helpers for the unit and acceptance suites.

namespace testutil {

inline std::mt19937& rng() {
  static std::mt19937 gen(0x5eed1234u);
  return gen;
}

inline double uniform(double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(rng());
}

inline hermax::TensorPoly random_poly(int dim, int degree, double scale = 1.0,
                                      unsigned seed = 0) {
  hermax::TensorPoly p(dim, degree);
  std::mt19937 gen(seed ? seed : rng()());
  std::uniform_real_distribution<double> d(-scale, scale);
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = d(gen);
  return p;
}

// Scaled Taylor DOFs (m+1)^dim of a cell polynomial about the corner
// selected by bits (bit a set = high side along axis a).  With unit cell
// width in xi the DOFs are D^alpha p(corner)/alpha!.
inline std::vector<double> corner_dofs(const hermax::TensorPoly& p, int m,
                                       unsigned bits) {
  const int dim = p.dim();
  std::size_t n = 1;
  for (int a = 0; a < dim; ++a) n *= std::size_t(m + 1);
  std::vector<double> out(n);
  double corner[3];
  for (int a = 0; a < dim; ++a) corner[a] = (bits >> a & 1u) ? 0.5 : -0.5;
  for (std::size_t idx = 0; idx < n; ++idx) {
    std::size_t rem = idx;
    hermax::TensorPoly d = p;
    double fact = 1.0;
    for (int a = 0; a < dim; ++a) {
      const int al = int(rem % std::size_t(m + 1));
      rem /= std::size_t(m + 1);
      for (int r = 0; r < al; ++r) d = hermax::poly_diff(d, a, 1.0);
      for (int r = 2; r <= al; ++r) fact *= r;
    }
    out[idx] = hermax::poly_eval(d, corner) / fact;
  }
  return out;
}

// All 2^dim corner DOF blocks of a cell polynomial.
inline std::vector<std::vector<double>> all_corner_dofs(
    const hermax::TensorPoly& p, int m) {
  const unsigned n = 1u << p.dim();
  std::vector<std::vector<double>> out(n);
  for (unsigned b = 0; b < n; ++b) out[b] = corner_dofs(p, m, b);
  return out;
}

inline double max_abs_diff(const double* a, const double* b, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double max_abs(const double* a, std::size_t n) {
  double m = 0.0;
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, std::abs(a[i]));
  return m;
}

}  // namespace testutil
