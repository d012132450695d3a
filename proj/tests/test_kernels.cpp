#include <doctest.h>

#include <random>
#include <vector>

#include "hermax/kernels.hpp"

// Every dispatched kernel must agree with the scalar reference on random
// shapes to rounding differences (the SIMD variants reassociate and fuse).

namespace {

std::vector<double> random_vec(std::size_t n, std::mt19937& gen) {
  std::uniform_real_distribution<double> d(-2.0, 2.0);
  std::vector<double> v(n);
  for (auto& x : v) x = d(gen);
  return v;
}

constexpr double kTol = 1e-12;

double rel(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

}  // namespace

TEST_CASE("kernel backends agree with the scalar reference") {
  using namespace hermax::kernels;
  INFO("active backend: ", active_backend());
  std::mt19937 gen(42);
  const std::size_t sizes[] = {1, 2, 3, 5, 8, 17, 64, 100, 513, 4096};

  for (std::size_t n : sizes) {
    auto x = random_vec(n, gen);
    auto y = random_vec(n, gen);
    auto w = random_vec(n, gen);

    auto y1 = y, y2 = y;
    axpy(n, 1.7, x.data(), y1.data());
    scalar::axpy(n, 1.7, x.data(), y2.data());
    for (std::size_t i = 0; i < n; ++i) CHECK(rel(y1[i], y2[i]) < kTol);

    scale(n, -0.3, x.data(), y1.data());
    scalar::scale(n, -0.3, x.data(), y2.data());
    for (std::size_t i = 0; i < n; ++i) CHECK(y1[i] == y2[i]);

    CHECK(rel(dot(n, x.data(), y.data()),
              scalar::dot(n, x.data(), y.data())) < kTol);
    CHECK(rel(wdot(n, w.data(), x.data(), y.data()),
              scalar::wdot(n, w.data(), x.data(), y.data())) < kTol);
    CHECK(rel(sqdiff_sum(n, x.data(), y.data()),
              scalar::sqdiff_sum(n, x.data(), y.data())) < kTol);
  }
}

TEST_CASE("diff_axis and contract_axis agree across backends") {
  using namespace hermax::kernels;
  std::mt19937 gen(7);
  struct Shape {
    std::size_t outer, len, stride;
  };
  const Shape shapes[] = {{1, 8, 1},  {8, 8, 1},   {1, 8, 8},
                          {4, 10, 1}, {10, 10, 10}, {3, 6, 36}};
  for (const auto& s : shapes) {
    const std::size_t n = s.outer * s.len * s.stride;
    auto src = random_vec(n, gen);
    std::vector<double> d1(n), d2(n);
    diff_axis(s.outer, s.len, s.stride, 3.1, src.data(), d1.data());
    scalar::diff_axis(s.outer, s.len, s.stride, 3.1, src.data(), d2.data());
    for (std::size_t i = 0; i < n; ++i) CHECK(rel(d1[i], d2[i]) < kTol);

    const std::size_t len_out = s.len - 2;
    auto mat = random_vec(len_out * s.len, gen);
    std::vector<double> c1(s.outer * len_out * s.stride);
    std::vector<double> c2(c1.size());
    contract_axis(s.outer, s.len, len_out, s.stride, mat.data(), src.data(),
                  c1.data());
    scalar::contract_axis(s.outer, s.len, len_out, s.stride, mat.data(),
                          src.data(), c2.data());
    for (std::size_t i = 0; i < c1.size(); ++i) CHECK(rel(c1[i], c2[i]) < kTol);
  }
}

TEST_CASE("diff_axis allows exact aliasing") {
  using namespace hermax::kernels;
  std::mt19937 gen(11);
  auto src = random_vec(6 * 8 * 4, gen);
  auto ref = src;
  std::vector<double> out(src.size());
  scalar::diff_axis(6, 8, 4, 2.0, ref.data(), out.data());
  diff_axis(6, 8, 4, 2.0, src.data(), src.data());
  for (std::size_t i = 0; i < src.size(); ++i) CHECK(rel(src[i], out[i]) < kTol);
}

TEST_CASE("backend selection") {
  using namespace hermax::kernels;
  const std::string before = active_backend();
  CHECK(select_backend("scalar"));
  CHECK(std::string(active_backend()) == "scalar");
  CHECK_FALSE(select_backend("not-a-backend"));
  CHECK(select_backend("auto"));
  // restore whatever the environment picked
  select_backend(before);
}
