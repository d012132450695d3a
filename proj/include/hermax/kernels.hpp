#pragma once

#include <cstddef>
#include <string>

// Data-parallel inner loops shared by the polynomial algebra, the
// Hermite-Birkhoff contractions and the diagnostics quadratures.
// A scalar reference implementation always exists; AVX2 (x86-64) and NEON
// (aarch64) variants are selected once at startup.  The active backend can
// be forced with the environment variable HERMAX_KERNELS=scalar|avx2|neon
// or programmatically with select_backend().  Switching backends while
// other threads run kernels is not supported.

namespace hermax::kernels {

// y[i] += a * x[i]
using AxpyFn = void (*)(std::size_t n, double a, const double* x, double* y);
// y[i] = a * x[i]
using ScaleFn = void (*)(std::size_t n, double a, const double* x, double* y);
// sum_i x[i] * y[i]
using DotFn = double (*)(std::size_t n, const double* x, const double* y);
// sum_i w[i] * x[i] * y[i]
using WdotFn = double (*)(std::size_t n, const double* w, const double* x,
                          const double* y);
// sum_i (x[i] - y[i])^2
using SqdiffSumFn = double (*)(std::size_t n, const double* x, const double* y);
// src viewed as [n_outer][len][stride]; derivative along the middle axis:
//   dst[o][j][s] = (j+1) * inv_dx * src[o][j+1][s],  j < len-1
//   dst[o][len-1][s] = 0
// dst == src is allowed (slabs are processed in ascending j).
using DiffAxisFn = void (*)(std::size_t n_outer, std::size_t len,
                            std::size_t stride, double inv_dx,
                            const double* src, double* dst);
// src viewed as [n_outer][len_in][stride], dst as [n_outer][len_out][stride],
// mat row-major len_out x len_in:
//   dst[o][k][s] = sum_j mat[k*len_in+j] * src[o][j][s]
// dst must not alias src.
using ContractAxisFn = void (*)(std::size_t n_outer, std::size_t len_in,
                                std::size_t len_out, std::size_t stride,
                                const double* mat, const double* src,
                                double* dst);

extern AxpyFn axpy;
extern ScaleFn scale;
extern DotFn dot;
extern WdotFn wdot;
extern SqdiffSumFn sqdiff_sum;
extern DiffAxisFn diff_axis;
extern ContractAxisFn contract_axis;

// Reference kernels; the dispatched pointers above must agree with these to
// rounding differences only (equivalence-tested).
namespace scalar {
void axpy(std::size_t n, double a, const double* x, double* y);
void scale(std::size_t n, double a, const double* x, double* y);
double dot(std::size_t n, const double* x, const double* y);
double wdot(std::size_t n, const double* w, const double* x, const double* y);
double sqdiff_sum(std::size_t n, const double* x, const double* y);
void diff_axis(std::size_t n_outer, std::size_t len, std::size_t stride,
               double inv_dx, const double* src, double* dst);
void contract_axis(std::size_t n_outer, std::size_t len_in,
                   std::size_t len_out, std::size_t stride, const double* mat,
                   const double* src, double* dst);
}  // namespace scalar

// "scalar", "avx2", "neon" or "auto".  Returns false (and leaves the
// current backend in place) if the request is unknown or unsupported.
bool select_backend(const std::string& name);
const char* active_backend();

}  // namespace hermax::kernels
