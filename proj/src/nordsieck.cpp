#include "hermax/nordsieck.hpp"

#include <stdexcept>

namespace hermax {

std::vector<double> nordsieck_corrector_vector(int p) {
  if (p < 1) throw std::invalid_argument("nordsieck_corrector_vector: p < 1");
  // c'(s) = prod_{j=1}^{p-1} (s + j) / (p-1)!
  std::vector<double> dc(p, 0.0);  // degree p-1
  dc[0] = 1.0;
  int deg = 0;
  double fact = 1.0;
  for (int j = 1; j <= p - 1; ++j) {
    for (int i = deg + 1; i > 0; --i) dc[i] = dc[i - 1] + j * dc[i];
    dc[0] *= j;
    ++deg;
    fact *= j;
  }
  for (int i = 0; i <= deg; ++i) dc[i] /= fact;
  // integrate; constant from c(-1) = 0
  std::vector<double> l(p + 1, 0.0);
  for (int i = 0; i <= deg; ++i) l[i + 1] = dc[i] / (i + 1);
  double at_m1 = 0.0, sign = -1.0;
  for (int i = 1; i <= p; ++i) {
    at_m1 += l[i] * sign;
    sign = -sign;
  }
  l[0] = -at_m1;
  return l;
}

void nordsieck_shift(double* z, int p, double s) {
  for (int i = 0; i < p; ++i)
    for (int j = p - 1; j >= i; --j) z[j] += s * z[j + 1];
}

void nordsieck_predict(const double* z, int p, double s, double* zhat) {
  for (int i = 0; i <= p; ++i) zhat[i] = z[i];
  nordsieck_shift(zhat, p, s);
}

double nordsieck_derivative(const double* z, int p, int r, double s,
                            double h) {
  if (r > p) return 0.0;
  // binomials C(j, r) built incrementally, powers of s by Horner-like loop
  double sum = 0.0;
  double binom = 1.0;  // C(r, r)
  double spow = 1.0;
  for (int j = r; j <= p; ++j) {
    sum += binom * spow * z[j];
    binom = binom * (j + 1) / (j + 1 - r);
    spow *= s;
  }
  double fact = 1.0;
  for (int i = 2; i <= r; ++i) fact *= i;
  double hpow = 1.0;
  for (int i = 0; i < r; ++i) hpow *= h;
  return sum * fact / hpow;
}

}  // namespace hermax
