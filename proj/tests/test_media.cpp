#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "hermax/media.hpp"

using namespace hermax;

namespace {

MediumSpec paper_lorentz() {
  MediumSpec m;
  m.epsilon = 1.0;
  m.mu = 1.0;
  m.electric_poles.push_back({std::sqrt(1.052 * M_PI), 1.0, 0.0107});
  return m;
}

using cplx = std::complex<double>;

// |det| of the plane-wave symbol, normalized by the row scales; zero iff
// (z, k) satisfies the dispersion relation of the assembled system.
double symbol_residual(const SymmetrizedSystem& sys, double kx, double ky,
                       cplx z) {
  const int n = sys.n_v + sys.n_w;
  std::vector<cplx> a(std::size_t(n) * n, cplx(0.0));
  auto at = [&](int r, int c) -> cplx& { return a[std::size_t(r) * n + c]; };
  for (int i = 0; i < sys.n_v; ++i) at(i, i) = z + sys.gamma_v[i];
  for (int i = 0; i < sys.n_w; ++i)
    at(sys.n_v + i, sys.n_v + i) = z + sys.gamma_w[i];
  const cplx ikx(0.0, kx), iky(0.0, ky);
  for (const auto& e : sys.curl[0]) {
    at(e.row, sys.n_v + e.col) -= ikx * e.value;
    at(sys.n_v + e.col, e.row) -= ikx * e.value;
  }
  for (const auto& e : sys.curl[1]) {
    at(e.row, sys.n_v + e.col) -= iky * e.value;
    at(sys.n_v + e.col, e.row) -= iky * e.value;
  }
  for (const auto& e : sys.coupling) {
    at(e.row, sys.n_v + e.col) -= e.value;
    at(sys.n_v + e.col, e.row) += e.value;
  }
  // LU with partial pivoting; determinant scaled by row norms
  double scale = 1.0;
  for (int r = 0; r < n; ++r) {
    double rn = 0.0;
    for (int c = 0; c < n; ++c) rn = std::max(rn, std::abs(at(r, c)));
    scale *= rn;
  }
  cplx det(1.0);
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(at(r, col)) > std::abs(at(piv, col))) piv = r;
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(at(piv, c), at(col, c));
      det = -det;
    }
    det *= at(col, col);
    if (at(col, col) == cplx(0.0)) return 0.0;
    for (int r = col + 1; r < n; ++r) {
      const cplx f = at(r, col) / at(col, col);
      for (int c = col; c < n; ++c) at(r, c) -= f * at(col, c);
    }
  }
  return std::abs(det) / scale;
}

}  // namespace

TEST_CASE("dielectric tm2d structure") {
  MediumSpec med;
  med.epsilon = 1.25;
  med.mu = 0.8;
  const SymmetrizedSystem sys = assemble_system(med, 2, SystemMode::tm2d);
  CHECK(sys.n_v == 2);
  CHECK(sys.n_w == 1);
  CHECK(sys.coupling.empty());
  for (double g : sys.gamma_v) CHECK(g == 0.0);
  for (double g : sys.gamma_w) CHECK(g == 0.0);
  // eps = 5/4, mu = 4/5 -> c = 1 exactly
  CHECK(sys.wave_speed == doctest::Approx(1.0).epsilon(1e-15));
  // A1: Hz -> Ey with -c; A2: Hz -> Ex with +c
  REQUIRE(sys.curl[0].size() == 1);
  REQUIRE(sys.curl[1].size() == 1);
  CHECK(sys.curl[0][0].row == sys.v_slot("Ey"));
  CHECK(sys.curl[0][0].col == sys.w_slot("Hz"));
  CHECK(sys.curl[0][0].value == doctest::Approx(-1.0));
  CHECK(sys.curl[1][0].row == sys.v_slot("Ex"));
  CHECK(sys.curl[1][0].value == doctest::Approx(1.0));
}

TEST_CASE("single electric pole tm2d structure") {
  const MediumSpec med = paper_lorentz();
  const SymmetrizedSystem sys = assemble_system(med, 2, SystemMode::tm2d);
  CHECK(sys.n_v == 4);
  CHECK(sys.n_w == 3);
  const double w = med.electric_poles[0].omega;
  const double W = med.electric_poles[0].resonance;
  // M couples K<->E with omega and K<->L with Omega
  int found = 0;
  for (const auto& e : sys.coupling) {
    if (e.row == sys.v_slot("Ex") && e.col == sys.w_slot("K1x")) {
      CHECK(e.value == doctest::Approx(-w));
      ++found;
    }
    if (e.row == sys.v_slot("L1y") && e.col == sys.w_slot("K1y")) {
      CHECK(e.value == doctest::Approx(W));
      ++found;
    }
  }
  CHECK(found == 2);
  CHECK(sys.gamma_w[sys.w_slot("K1x")] == doctest::Approx(0.0107));
  CHECK(sys.gamma_w[sys.w_slot("K1y")] == doctest::Approx(0.0107));
  for (double g : sys.gamma_v) CHECK(g == 0.0);
  // spatial derivatives act only on E and H slots
  for (int k = 0; k < 2; ++k)
    for (const auto& e : sys.curl[k]) {
      CHECK(e.row < 2);
      CHECK(e.col == sys.w_slot("Hz"));
    }
}

TEST_CASE("magnetic poles occupy the R/S slots with damped R") {
  MediumSpec med;
  med.magnetic_poles.push_back({2.0, 3.0, 0.25});
  const SymmetrizedSystem sys = assemble_system(med, 2, SystemMode::tm2d);
  CHECK(sys.n_v == 3);
  CHECK(sys.n_w == 2);
  CHECK(sys.gamma_v[sys.v_slot("R1")] == doctest::Approx(0.25));
  for (double g : sys.gamma_w) CHECK(g == 0.0);
}

TEST_CASE("full3d curl encodes the Levi-Civita symbol") {
  MediumSpec med;
  const SymmetrizedSystem sys = assemble_system(med, 3, SystemMode::full3d);
  CHECK(sys.n_v == 3);
  CHECK(sys.n_w == 3);
  auto dense = [&](int k) {
    std::vector<double> a(9, 0.0);
    for (const auto& e : sys.curl[k]) a[std::size_t(e.row) * 3 + e.col] = e.value;
    return a;
  };
  auto eps = [](int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    return ((j - i + 3) % 3 == 1) ? 1 : -1;
  };
  for (int k = 0; k < 3; ++k) {
    const auto a = dense(k);
    for (int i = 0; i < 3; ++i)
      for (int l = 0; l < 3; ++l)
        CHECK(a[std::size_t(i) * 3 + l] == doctest::Approx(double(eps(i, k, l))));
  }
}

TEST_CASE("quartic roots reproduce the reference values") {
  MediumSpec med = paper_lorentz();
  const DispersionRoots r = dispersion_quartic_roots(med, 40.0);
  CHECK(std::abs(r.resonant.theta - 0.005344476784229) < 1e-12);
  CHECK(std::abs(r.resonant.omega - 0.999469550181686) < 1e-12);
  CHECK(std::abs(r.highfreq.theta - 0.000005523215771) < 1e-12);
  CHECK(std::abs(r.highfreq.omega - 56.597756028029032) < 1e-12);

  med.electric_poles[0].gamma = 0.0;
  const DispersionRoots s = dispersion_quartic_roots(med, 40.0);
  CHECK(s.resonant.theta == 0.0);
  CHECK(s.highfreq.theta == 0.0);
  CHECK(std::abs(s.resonant.omega - 0.999483839356918) < 1e-12);
  CHECK(std::abs(s.highfreq.omega - 56.597756029072784) < 1e-12);

  CHECK_THROWS(dispersion_quartic_roots(MediumSpec{}, 40.0));
}

TEST_CASE("assembled system satisfies the dispersion relation") {
  const MediumSpec med = paper_lorentz();
  const SymmetrizedSystem sys = assemble_system(med, 2, SystemMode::tm2d);
  const double k = 40.0;
  const DispersionRoots r = dispersion_quartic_roots(med, k);
  for (const auto& root : {r.resonant, r.highfreq}) {
    const cplx z(-root.theta, root.omega);
    CHECK(symbol_residual(sys, k, k, z) < 1e-10);
    // a detuned z must not satisfy it
    CHECK(symbol_residual(sys, k, k, z + cplx(0.0, 0.3)) > 1e-8);
  }
}

TEST_CASE("medium validation") {
  MediumSpec bad;
  bad.epsilon = -1.0;
  CHECK_THROWS(bad.validate());
  MediumSpec ok;
  ok.electric_poles.push_back({1.0, 1.0, 0.0});
  CHECK(ok.is_sellmeier());
  ok.electric_poles[0].gamma = 0.1;
  CHECK_FALSE(ok.is_sellmeier());
  CHECK_THROWS(assemble_system(ok, 1, SystemMode::tm2d));
}
