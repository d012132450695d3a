#include <doctest.h>

#include <cmath>

#include "hermax/diagnostics.hpp"
#include "hermax/stepper.hpp"
#include "test_util.hpp"

using namespace hermax;

TEST_CASE("gauss_legendre_half integrates monomials exactly") {
  for (int n = 1; n <= 9; ++n) {
    const Quadrature q = gauss_legendre_half(n);
    for (int r = 0; r <= 2 * n - 1; ++r) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += q.weights[i] * std::pow(q.nodes[i], r);
      const double exact =
          (r % 2 == 0) ? 1.0 / ((r + 1) * std::pow(2.0, r)) : 0.0;
      CHECK(std::abs(s - exact) < 1e-14);
    }
  }
}

TEST_CASE("hb_inner annihilates low degree and matches the closed form") {
  const int m = 3;
  Grid cells;
  cells.dim = 1;
  cells.n = {4, 1, 1};
  cells.dual = true;  // placement irrelevant for the quadrature

  PiecewiseField f(cells, 1, PolyShape{1, 2 * m + 2});
  // degree <= m per direction: seminorm zero
  for (std::size_t c = 0; c < cells.n_nodes(); ++c)
    for (int j = 0; j <= m; ++j) f.cell(c, 0)[j] = testutil::uniform(-1, 1);
  CHECK(hb_seminorm_sq(f, m) == doctest::Approx(0.0));

  // f(xi) = xi^{m+1} in every cell: per cell ((m+1)!)^2 dx^{1-2(m+1)}
  PiecewiseField g(cells, 1, PolyShape{1, 2 * m + 2});
  for (std::size_t c = 0; c < cells.n_nodes(); ++c)
    g.cell(c, 0)[m + 1] = 1.0;
  double fact = 1.0;
  for (int r = 2; r <= m + 1; ++r) fact *= r;
  const double dx = cells.dx(0);
  const double expected =
      cells.n_nodes() * fact * fact * std::pow(dx, 1.0 - 2.0 * (m + 1));
  CHECK(hb_seminorm_sq(g, m) ==
        doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("hb_inner is symmetric and bilinear") {
  const int m = 2;
  Grid cells;
  cells.dim = 2;
  cells.n = {3, 3, 1};
  auto randpf = [&](unsigned seed) {
    PiecewiseField p(cells, 2, PolyShape{2, 2 * m + 2});
    std::mt19937 gen(seed);
    std::uniform_real_distribution<double> d(-1, 1);
    for (auto& c : p.coeffs) c = d(gen);
    return p;
  };
  const PiecewiseField a = randpf(1), b = randpf(2);
  CHECK(hb_inner(a, b, m) == doctest::Approx(hb_inner(b, a, m)));
  PiecewiseField ab = a;
  for (std::size_t i = 0; i < ab.coeffs.size(); ++i)
    ab.coeffs[i] = 2.0 * a.coeffs[i] + b.coeffs[i];
  CHECK(hb_inner(ab, ab, m) ==
        doctest::Approx(4 * hb_inner(a, a, m) + 4 * hb_inner(a, b, m) +
                        hb_inner(b, b, m))
            .epsilon(1e-12));
  CHECK(hb_seminorm_sq(a, m) >= 0.0);
}

TEST_CASE("exact solutions satisfy their PDE systems") {
  MediumSpec vac;
  vac.epsilon = 1.25;
  vac.mu = 0.8;
  const ExactSolution diel = ExactSolution::make(Regime::dielectric, 10, vac, 2);
  CHECK(diel.pde_residual(100, 123u) < 1e-10);

  MediumSpec lor;
  lor.electric_poles.push_back({std::sqrt(1.052 * M_PI), 1.0, 0.0107});
  const ExactSolution res =
      ExactSolution::make(Regime::lorentz_resonant, 40, lor, 2);
  CHECK(res.pde_residual(100, 17u) < 1e-10);
  const ExactSolution high =
      ExactSolution::make(Regime::lorentz_highfreq, 40, lor, 2);
  CHECK(high.pde_residual(100, 18u) < 1e-10);

  MediumSpec sell = lor;
  sell.electric_poles[0].gamma = 0.0;
  const ExactSolution s =
      ExactSolution::make(Regime::sellmeier_highfreq, 40, sell, 2);
  CHECK(s.pde_residual(100, 19u) < 1e-10);
  // gamma = 0: purely oscillatory
  CHECK(s.z().real() == 0.0);

  const ExactSolution d1 = ExactSolution::make(Regime::dielectric, 3, vac, 1);
  CHECK(d1.pde_residual(100, 20u) < 1e-10);

  // Hz vanishes identically at t = 0 (sin(omega t) factor)
  const std::array<int, 3> v0{0, 0, 0};
  for (double xv : {-2.0, 0.3, 1.7}) {
    double x[2] = {xv, 0.7 * xv};
    CHECK(std::abs(diel.eval("Hz", v0, 0, x, 0.0)) < 1e-15);
  }

  CHECK_THROWS(ExactSolution::make(Regime::lorentz_resonant, 10, vac, 2));
  CHECK_THROWS(ExactSolution::make(Regime::dielectric, 2.5, vac, 2));
  CHECK_THROWS(ExactSolution::make(Regime::sellmeier_highfreq, 10, lor, 2));
}

TEST_CASE("fit_rate") {
  std::vector<std::pair<double, double>> pts;
  for (double d : {10.0, 15.0, 20.0, 30.0}) pts.emplace_back(d, 7.3 * std::pow(d, -8.0));
  CHECK(fit_rate(pts) == doctest::Approx(8.0).epsilon(1e-12));
  // invariant under uniform scaling of the errors
  auto scaled = pts;
  for (auto& p : scaled) p.second *= 1234.5;
  CHECK(fit_rate(scaled) == doctest::Approx(fit_rate(pts)).epsilon(1e-12));
  CHECK_THROWS(fit_rate({{10, 1}, {10, 2}, {10, 3}}));
  CHECK_THROWS(fit_rate({{10, 1}, {20, 2}}));
}

TEST_CASE("error metric arithmetic with a constant offset") {
  // numeric == exact + delta at every sample: E^2 accumulates
  // (4 sqrt(N_T))^{-1} * N_T * (N_samples * w * delta^2)
  MediumSpec med;
  const int m = 2, ng = 8;
  const SymmetrizedSystem sys = assemble_system(med, 2, SystemMode::tm2d);
  const ExactSolution sol = ExactSolution::make(Regime::dielectric, 2, med, 2);
  Grid dual;
  dual.dim = 2;
  dual.n = {ng, ng, 1};
  dual.dual = true;
  const HBOperator op(m);
  // at t = 0 the exact Hz vanishes identically, so after adding a constant
  // the sampled difference is exactly delta everywhere
  HermiteField w(dual, m, sys.n_w, 0.0);
  fill_exact_field(w, sys, 'w', sol, 0.0);
  const double delta = 1e-3;
  for (std::size_t node = 0; node < dual.n_nodes(); ++node)
    w.block(node, sys.w_slot("Hz"))[0] += delta;  // mu = 1
  ErrorAccumulator acc(sys, sol, m, dual);
  const long n_t = 3;
  for (long j = 1; j <= n_t; ++j) acc.sample(w, op, 0.0);
  const double n_samples = double(ng * ng) * (2 * m) * (2 * m);
  const double wgt = (dual.dx(0) / (2 * m)) * (dual.dx(1) / (2 * m));
  const double expect =
      std::sqrt(n_t * n_samples * wgt * delta * delta / (4.0 * std::sqrt(double(n_t))));
  CHECK(acc.edef() == doctest::Approx(expect).epsilon(1e-9));
  CHECK(acc.max_rel_l2() ==
        doctest::Approx(std::sqrt(n_samples * wgt) * delta / sol.hz_l2_scale())
            .epsilon(1e-9));

  // numeric == exact -> zero
  HermiteField w2(dual, m, sys.n_w, 0.0);
  fill_exact_field(w2, sys, 'w', sol, 0.0);
  ErrorAccumulator acc2(sys, sol, m, dual);
  acc2.sample(w2, op, 0.0);
  CHECK(acc2.edef() < 1e-12);
}

TEST_CASE("conserved quantities of zero fields vanish") {
  MediumSpec med;
  const SymmetrizedSystem sys = assemble_system(med, 2, SystemMode::tm2d);
  Grid primal;
  primal.dim = 2;
  primal.n = {4, 4, 1};
  Grid dual = primal;
  dual.dual = true;
  const HBOperator op(2);
  HermiteField v(primal, 2, sys.n_v), w(dual, 2, sys.n_w), vi(primal, 2, sys.n_v),
      wi(dual, 2, sys.n_w);
  const ConservedPair cp = conserved_quantities(v, w, vi, wi, op);
  CHECK(cp.egenn == 0.0);
  CHECK(cp.egenh == 0.0);
}
