#if defined(__aarch64__)

#include <arm_neon.h>

#include <cstddef>
#include <cstring>

// NEON variants; baseline on aarch64, no runtime gate needed.

namespace hermax::kernels::neon {

static inline double hsum(float64x2_t v) { return vaddvq_f64(v); }

void axpy(std::size_t n, double a, const double* x, double* y) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    float64x2_t vy = vld1q_f64(y + i);
    vy = vfmaq_f64(vy, va, vld1q_f64(x + i));
    vst1q_f64(y + i, vy);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale(std::size_t n, double a, const double* x, double* y) {
  const float64x2_t va = vdupq_n_f64(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(y + i, vmulq_f64(va, vld1q_f64(x + i)));
  for (; i < n; ++i) y[i] = a * x[i];
}

double dot(std::size_t n, const double* x, const double* y) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    acc = vfmaq_f64(acc, vld1q_f64(x + i), vld1q_f64(y + i));
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

double wdot(std::size_t n, const double* w, const double* x, const double* y) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t xy = vmulq_f64(vld1q_f64(x + i), vld1q_f64(y + i));
    acc = vfmaq_f64(acc, vld1q_f64(w + i), xy);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += w[i] * x[i] * y[i];
  return s;
}

double sqdiff_sum(std::size_t n, const double* x, const double* y) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t d = vsubq_f64(vld1q_f64(x + i), vld1q_f64(y + i));
    acc = vfmaq_f64(acc, d, d);
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    const double d = x[i] - y[i];
    s += d * d;
  }
  return s;
}

void diff_axis(std::size_t n_outer, std::size_t len, std::size_t stride,
               double inv_dx, const double* src, double* dst) {
  const std::size_t block = len * stride;
  for (std::size_t o = 0; o < n_outer; ++o) {
    const double* s = src + o * block;
    double* d = dst + o * block;
    for (std::size_t j = 0; j + 1 < len; ++j) {
      const double w = double(j + 1) * inv_dx;
      const double* sj = s + (j + 1) * stride;
      double* dj = d + j * stride;
      if (stride == 1) {
        dj[0] = w * sj[0];
        continue;
      }
      const float64x2_t vw = vdupq_n_f64(w);
      std::size_t i = 0;
      for (; i + 2 <= stride; i += 2)
        vst1q_f64(dj + i, vmulq_f64(vw, vld1q_f64(sj + i)));
      for (; i < stride; ++i) dj[i] = w * sj[i];
    }
    std::memset(d + (len - 1) * stride, 0, stride * sizeof(double));
  }
}

void contract_axis(std::size_t n_outer, std::size_t len_in,
                   std::size_t len_out, std::size_t stride, const double* mat,
                   const double* src, double* dst) {
  if (stride == 1) {
    for (std::size_t o = 0; o < n_outer; ++o) {
      const double* s = src + o * len_in;
      double* d = dst + o * len_out;
      for (std::size_t k = 0; k < len_out; ++k)
        d[k] = dot(len_in, mat + k * len_in, s);
    }
    return;
  }
  for (std::size_t o = 0; o < n_outer; ++o) {
    const double* s = src + o * len_in * stride;
    double* d = dst + o * len_out * stride;
    for (std::size_t k = 0; k < len_out; ++k) {
      const double* row = mat + k * len_in;
      double* dk = d + k * stride;
      scale(stride, row[0], s, dk);
      for (std::size_t j = 1; j < len_in; ++j)
        axpy(stride, row[j], s + j * stride, dk);
    }
  }
}

}  // namespace hermax::kernels::neon

#endif  // aarch64
