#include <doctest.h>

#include <cmath>

#include "hermax/tensor_poly.hpp"
#include "test_util.hpp"

using namespace hermax;

TEST_CASE("poly_diff basics") {
  // p(xi) = xi^2, dx = 0.5 -> 4 xi
  TensorPoly p(1, 2);
  p[2] = 1.0;
  const TensorPoly q = poly_diff(p, 0, 0.5);
  CHECK(q[0] == doctest::Approx(0.0));
  CHECK(q[1] == doctest::Approx(4.0));
  CHECK(q[2] == doctest::Approx(0.0));

  TensorPoly c(2, 3);
  c[0] = 7.0;
  const TensorPoly dc = poly_diff(c, 1, 0.25);
  for (std::size_t i = 0; i < dc.size(); ++i) CHECK(dc[i] == 0.0);

  CHECK_THROWS(poly_diff(p, 1, 0.5));
}

TEST_CASE("poly_diff matches a centered finite-difference oracle") {
  const TensorPoly p = testutil::random_poly(1, 7, 1.0, 99);
  const double dx = 0.3;
  const TensorPoly q = poly_diff(p, 0, dx);
  // five-point stencil in xi; d/dx = (1/dx) d/dxi
  for (double xi : {-0.31, -0.12, 0.05, 0.27, 0.4}) {
    const double h = 1e-3;
    auto f = [&](double s) { return poly_eval(p, &s); };
    const double fd =
        (-f(xi + 2 * h) + 8 * f(xi + h) - 8 * f(xi - h) + f(xi - 2 * h)) /
        (12 * h) / dx;
    const double ex = poly_eval(q, &xi);
    CHECK(std::abs(fd - ex) < 1e-8 * std::max(1.0, std::abs(ex)));
  }
}

TEST_CASE("poly_axpy") {
  const TensorPoly p = testutil::random_poly(2, 3, 1.0, 5);
  const TensorPoly q = testutil::random_poly(2, 3, 1.0, 6);
  const TensorPoly r0 = poly_axpy(0.0, p, q);
  for (std::size_t i = 0; i < q.size(); ++i) CHECK(r0[i] == q[i]);
  TensorPoly zero(2, 3);
  const TensorPoly r1 = poly_axpy(1.0, p, zero);
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(r1[i] == p[i]);
  const TensorPoly r2 = poly_axpy(2.0, q, q);
  for (std::size_t i = 0; i < q.size(); ++i)
    CHECK(r2[i] == doctest::Approx(3.0 * q[i]));
  CHECK_THROWS(poly_axpy(1.0, p, testutil::random_poly(1, 3)));
}

TEST_CASE("poly_eval basics and naive-sum oracle") {
  TensorPoly p(1, 1);
  p[0] = 1.0;
  p[1] = 1.0;
  double xi = 0.5;
  CHECK(poly_eval(p, &xi) == doctest::Approx(1.5));

  TensorPoly pp(2, 1);
  pp[3] = 1.0;  // xi1 * xi2
  double x2[2] = {0.5, 0.5};
  CHECK(poly_eval(pp, x2) == doctest::Approx(0.25));

  const TensorPoly r = testutil::random_poly(3, 4, 1.0, 17);
  double x3[3] = {0.3, -0.41, 0.25};
  double naive = 0.0;
  const int n = r.degree() + 1;
  for (int k = 0; k < n; ++k)
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i)
        naive += r[std::size_t((k * n + j) * n + i)] * std::pow(x3[0], i) *
                 std::pow(x3[1], j) * std::pow(x3[2], k);
  const double horner = poly_eval(r, x3);
  CHECK(std::abs(naive - horner) <= 1e-13 * std::max(1.0, std::abs(naive)));
}

TEST_CASE("poly_extract_dofs") {
  TensorPoly p(1, 3);
  p[0] = 1;
  p[1] = 2;
  p[2] = 3;
  p[3] = 4;
  const auto b1 = poly_extract_dofs(p, 1);
  CHECK(b1 == std::vector<double>{1, 2});
  const auto ball = poly_extract_dofs(p, 3);
  CHECK(ball == std::vector<double>{1, 2, 3, 4});
  CHECK_THROWS(poly_extract_dofs(p, 4));

  // p built from f(x) = exp(x) truncated: a_k = dx^k/k! f^(k)(x_c)
  const double dx = 0.4, xc = 0.3;
  TensorPoly e(1, 7);
  double fac = 1.0;
  for (int k = 0; k <= 7; ++k) {
    if (k > 0) fac *= k;
    double dxp = 1.0;
    for (int i = 0; i < k; ++i) dxp *= dx;
    e[std::size_t(k)] = dxp / fac * std::exp(xc);
  }
  const auto blk = poly_extract_dofs(e, 3);
  fac = 1.0;
  for (int k = 0; k <= 3; ++k) {
    if (k > 0) fac *= k;
    double dxp = 1.0;
    for (int i = 0; i < k; ++i) dxp *= dx;
    CHECK(std::abs(blk[std::size_t(k)] - dxp / fac * std::exp(xc)) < 1e-12);
  }
}

TEST_CASE("tensor polynomial invariants") {
  const int dim = 2, deg = 4;
  const TensorPoly p = testutil::random_poly(dim, deg, 1.0, 23);

  // degree+1 derivatives annihilate
  TensorPoly d = p;
  for (int r = 0; r <= deg; ++r) d = poly_diff(d, 0, 0.7);
  for (std::size_t i = 0; i < d.size(); ++i) CHECK(d[i] == 0.0);

  // derivatives commute across axes
  const TensorPoly dxy = poly_diff(poly_diff(p, 0, 0.5), 1, 0.25);
  const TensorPoly dyx = poly_diff(poly_diff(p, 1, 0.25), 0, 0.5);
  for (std::size_t i = 0; i < dxy.size(); ++i)
    CHECK(dxy[i] == doctest::Approx(dyx[i]).epsilon(1e-14));

  // eval is linear in the coefficients
  const TensorPoly q = testutil::random_poly(dim, deg, 1.0, 24);
  const TensorPoly s = poly_axpy(1.3, p, q);
  double x[2] = {0.21, -0.47};
  CHECK(poly_eval(s, x) ==
        doctest::Approx(1.3 * poly_eval(p, x) + poly_eval(q, x))
            .epsilon(1e-13));

  // extract at full degree reproduces the polynomial
  const auto dofs = poly_extract_dofs(p, deg);
  TensorPoly rec(dim, deg);
  poly_embed_dofs(rec.shape(), rec.data(), deg, dofs.data());
  for (std::size_t i = 0; i < p.size(); ++i) CHECK(rec[i] == p[i]);
}
