#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <cstddef>
#include <cstring>

// AVX2+FMA variants.  Compiled with per-function target attributes so the
// translation unit builds with baseline flags; supported() gates use at
// runtime.

#define HERMAX_AVX2 __attribute__((target("avx2,fma")))

namespace hermax::kernels::avx2 {

bool supported() {
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

HERMAX_AVX2
static inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

HERMAX_AVX2
void axpy(std::size_t n, double a, const double* x, double* y) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y + i);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), vy);
    _mm256_storeu_pd(y + i, vy);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

HERMAX_AVX2
void scale(std::size_t n, double a, const double* x, double* y) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(y + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) y[i] = a * x[i];
}

HERMAX_AVX2
double dot(std::size_t n, const double* x, const double* y) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
  double s = hsum(acc);
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

HERMAX_AVX2
double wdot(std::size_t n, const double* w, const double* x, const double* y) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d xy =
        _mm256_mul_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(w + i), xy, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += w[i] * x[i] * y[i];
  return s;
}

HERMAX_AVX2
double sqdiff_sum(std::size_t n, const double* x, const double* y) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d =
        _mm256_sub_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    acc = _mm256_fmadd_pd(d, d, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    const double d = x[i] - y[i];
    s += d * d;
  }
  return s;
}

HERMAX_AVX2
void diff_axis(std::size_t n_outer, std::size_t len, std::size_t stride,
               double inv_dx, const double* src, double* dst) {
  const std::size_t block = len * stride;
  if (stride == 1) {
    // contiguous rows, position-dependent weight
    for (std::size_t o = 0; o < n_outer; ++o) {
      const double* s = src + o * block;
      double* d = dst + o * block;
      std::size_t j = 0;
      const __m256d vdx = _mm256_set1_pd(inv_dx);
      __m256d ramp = _mm256_set_pd(4.0, 3.0, 2.0, 1.0);
      const __m256d four = _mm256_set1_pd(4.0);
      for (; j + 4 < len; j += 4) {
        const __m256d w = _mm256_mul_pd(ramp, vdx);
        _mm256_storeu_pd(d + j, _mm256_mul_pd(w, _mm256_loadu_pd(s + j + 1)));
        ramp = _mm256_add_pd(ramp, four);
      }
      for (; j + 1 < len; ++j) d[j] = double(j + 1) * inv_dx * s[j + 1];
      d[len - 1] = 0.0;
    }
    return;
  }
  for (std::size_t o = 0; o < n_outer; ++o) {
    const double* s = src + o * block;
    double* d = dst + o * block;
    for (std::size_t j = 0; j + 1 < len; ++j) {
      const double w = double(j + 1) * inv_dx;
      const __m256d vw = _mm256_set1_pd(w);
      const double* sj = s + (j + 1) * stride;
      double* dj = d + j * stride;
      std::size_t i = 0;
      for (; i + 4 <= stride; i += 4)
        _mm256_storeu_pd(dj + i, _mm256_mul_pd(vw, _mm256_loadu_pd(sj + i)));
      for (; i < stride; ++i) dj[i] = w * sj[i];
    }
    std::memset(d + (len - 1) * stride, 0, stride * sizeof(double));
  }
}

HERMAX_AVX2
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

}  // namespace hermax::kernels::avx2

#endif  // x86-64
