#include "hermax/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace hermax::kernels {

namespace scalar {

void axpy(std::size_t n, double a, const double* __restrict__ x,
          double* __restrict__ y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale(std::size_t n, double a, const double* __restrict__ x,
           double* __restrict__ y) {
  for (std::size_t i = 0; i < n; ++i) y[i] = a * x[i];
}

double dot(std::size_t n, const double* x, const double* y) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

double wdot(std::size_t n, const double* w, const double* x, const double* y) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += w[i] * x[i] * y[i];
  return s;
}

double sqdiff_sum(std::size_t n, const double* x, const double* y) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
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
      for (std::size_t i = 0; i < stride; ++i) dj[i] = w * sj[i];
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

}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define HERMAX_HAVE_AVX2_BACKEND 1
namespace avx2 {
bool supported();
void axpy(std::size_t, double, const double*, double*);
void scale(std::size_t, double, const double*, double*);
double dot(std::size_t, const double*, const double*);
double wdot(std::size_t, const double*, const double*, const double*);
double sqdiff_sum(std::size_t, const double*, const double*);
void diff_axis(std::size_t, std::size_t, std::size_t, double, const double*,
               double*);
void contract_axis(std::size_t, std::size_t, std::size_t, std::size_t,
                   const double*, const double*, double*);
}  // namespace avx2
#endif

#if defined(__aarch64__)
#define HERMAX_HAVE_NEON_BACKEND 1
namespace neon {
void axpy(std::size_t, double, const double*, double*);
void scale(std::size_t, double, const double*, double*);
double dot(std::size_t, const double*, const double*);
double wdot(std::size_t, const double*, const double*, const double*);
double sqdiff_sum(std::size_t, const double*, const double*);
void diff_axis(std::size_t, std::size_t, std::size_t, double, const double*,
               double*);
void contract_axis(std::size_t, std::size_t, std::size_t, std::size_t,
                   const double*, const double*, double*);
}  // namespace neon
#endif

AxpyFn axpy = scalar::axpy;
ScaleFn scale = scalar::scale;
DotFn dot = scalar::dot;
WdotFn wdot = scalar::wdot;
SqdiffSumFn sqdiff_sum = scalar::sqdiff_sum;
DiffAxisFn diff_axis = scalar::diff_axis;
ContractAxisFn contract_axis = scalar::contract_axis;

namespace {

const char* g_backend = "scalar";

void use_scalar() {
  axpy = scalar::axpy;
  scale = scalar::scale;
  dot = scalar::dot;
  wdot = scalar::wdot;
  sqdiff_sum = scalar::sqdiff_sum;
  diff_axis = scalar::diff_axis;
  contract_axis = scalar::contract_axis;
  g_backend = "scalar";
}

bool use_avx2() {
#if HERMAX_HAVE_AVX2_BACKEND
  if (!avx2::supported()) return false;
  axpy = avx2::axpy;
  scale = avx2::scale;
  dot = avx2::dot;
  wdot = avx2::wdot;
  sqdiff_sum = avx2::sqdiff_sum;
  diff_axis = avx2::diff_axis;
  contract_axis = avx2::contract_axis;
  g_backend = "avx2";
  return true;
#else
  return false;
#endif
}

bool use_neon() {
#if HERMAX_HAVE_NEON_BACKEND
  axpy = neon::axpy;
  scale = neon::scale;
  dot = neon::dot;
  wdot = neon::wdot;
  sqdiff_sum = neon::sqdiff_sum;
  diff_axis = neon::diff_axis;
  contract_axis = neon::contract_axis;
  g_backend = "neon";
  return true;
#else
  return false;
#endif
}

bool pick_auto() {
  if (use_avx2()) return true;
  if (use_neon()) return true;
  use_scalar();
  return true;
}

const bool g_init = [] {
  const char* env = std::getenv("HERMAX_KERNELS");
  if (env && *env) {
    if (std::strcmp(env, "scalar") == 0) {
      use_scalar();
      return true;
    }
    if (std::strcmp(env, "avx2") == 0 && use_avx2()) return true;
    if (std::strcmp(env, "neon") == 0 && use_neon()) return true;
  }
  return pick_auto();
}();

}  // namespace

bool select_backend(const std::string& name) {
  (void)g_init;
  if (name == "scalar") {
    use_scalar();
    return true;
  }
  if (name == "avx2") return use_avx2();
  if (name == "neon") return use_neon();
  if (name == "auto") return pick_auto();
  return false;
}

const char* active_backend() { return g_backend; }

}  // namespace hermax::kernels
