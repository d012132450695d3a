#pragma once

#include <vector>

// Nordsieck representation of a temporal polynomial of degree p: the array
// z_j = h^j y^(j)(t)/j!, j = 0..p.  Prediction is a Taylor shift; a single
// Adams-type correction re-anchors the slope slot to the new right-hand
// side.

namespace hermax {

// Correction vector l (z += l * delta, delta = h*f_new - zhat_1).  Derived
// from the degree-p polynomial c(s), s = (t - t_new)/h, with
//   c'(s) = prod_{j=1}^{p-1} (s + j) / (p-1)!,   c(-1) = 0,
// so one correction leaves the p-1 previous slope samples and the previous
// value invariant (the implicit-Adams choice); l_1 = 1.
std::vector<double> nordsieck_corrector_vector(int p);

// In-place Taylor shift by s steps (t -> t + s*h).
void nordsieck_shift(double* z, int p, double s);

// Out-of-place shift.
void nordsieck_predict(const double* z, int p, double s, double* zhat);

// d^r/dt^r of the represented polynomial at offset s*h from the array's
// anchor time: (r!/h^r) * sum_{j>=r} C(j,r) z_j s^{j-r}.
double nordsieck_derivative(const double* z, int p, int r, double s, double h);

}  // namespace hermax
