#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "cmx/errors.hpp"
#include "cmx/geometry.hpp"

using namespace cmx;
using std::numbers::pi;

namespace {
double diff(const Real4x4x4& a, const Real4x4x4& b) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) m = std::max(m, std::abs(a[i][j][k] - b[i][j][k]));
  return m;
}
}  // namespace

TEST_CASE("space model") {
  const SpaceModel s3(SpaceKind::s3), h3(SpaceKind::h3);
  CHECK(s3.r(0.7) == doctest::Approx(std::sin(0.7)));
  CHECK(h3.r(0.7) == doctest::Approx(std::sinh(0.7)));
  CHECK(h3.cot_r(0.7) == doctest::Approx(1.0 / std::tanh(0.7)));
  CHECK_THROWS_AS(SpaceModel(SpaceKind::s3, 0.0), Error);
  CHECK_THROWS_AS(SpaceModel(SpaceKind::s3, -1.0), Error);
}

TEST_CASE("metric values") {
  const SpaceModel s3(SpaceKind::s3), h3(SpaceKind::h3);
  const Real4x4 g = metric(s3, {0.0, pi / 2, pi / 2, 1.0});
  const double expect[4] = {1, -1, -1, -1};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) CHECK(g[i][k] == doctest::Approx(i == k ? expect[i] : 0.0).epsilon(1e-15));
  CHECK(metric(s3, {0.0, pi / 4, pi / 2, 0.0})[2][2] == doctest::Approx(-0.5));
  const double chi = 1e-4;
  CHECK(metric(h3, {0.0, chi, pi / 2, 0.0})[2][2] / (-chi * chi) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("coordinate guard") {
  const SpaceModel s3(SpaceKind::s3), h3(SpaceKind::h3);
  CHECK_THROWS_AS(metric(s3, {0.0, 0.0, 1.0, 0.0}), Error);
  CHECK_THROWS_AS(tetrad(s3, {0.0, pi, 1.0, 0.0}), Error);
  CHECK_THROWS_AS(christoffel(h3, {0.0, 1.0, 0.0, 0.0}), Error);
  CHECK_NOTHROW(metric(h3, {0.0, 5.0, 1.0, 0.0}));
  try {
    check_coordinates(s3, {0.0, 1.0, pi, 0.0});
    FAIL("expected domain error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::domain);
  }
}

TEST_CASE("tetrad") {
  const SpaceModel s3(SpaceKind::s3);
  const Real4x4 e = tetrad(s3, {0.0, pi / 2, pi / 2, 0.0});
  const Real4 e1{0, 0, 1, 0};
  for (int k = 0; k < 4; ++k) CHECK(e[1][k] == doctest::Approx(e1[k]).epsilon(1e-15));
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> chi(0.1, 3.0), th(0.1, 3.0);
  for (SpaceKind kind : {SpaceKind::s3, SpaceKind::h3})
    for (int k = 0; k < 50; ++k)
      CHECK(tetrad_orthonormality_residual(SpaceModel(kind), {0.0, chi(rng), th(rng), 0.3}) <= 1e-14);
}

TEST_CASE("Christoffel and Ricci rotation coefficients against finite differences") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> chi(0.2, 2.9), th(0.2, 2.9), ph(0.0, 6.0);
  for (SpaceKind kind : {SpaceKind::s3, SpaceKind::h3}) {
    const SpaceModel model(kind);
    for (int k = 0; k < 20; ++k) {
      const Coordinates x{0.1, chi(rng), th(rng), ph(rng)};
      CHECK(diff(christoffel(model, x), christoffel_fd(model, x)) <= 1e-7);
      const Real4x4x4 g = ricci_rotation(model, x);
      CHECK(diff(g, ricci_rotation_fd(model, x)) <= 1e-7);
      CHECK(metric_compatibility_residual(model, x) <= 1e-6);
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
          for (int c = 0; c < 4; ++c) CHECK(g[a][b][c] == -g[b][a][c]);
    }
  }
}

TEST_CASE("selected closed-form coefficients") {
  const SpaceModel s3(SpaceKind::s3);
  const Coordinates x{0.0, 0.8, 1.1, 0.0};
  const Real4x4x4 G = christoffel(s3, x);
  CHECK(G[1][2][2] == doctest::Approx(-std::sin(0.8) * std::cos(0.8)));
  CHECK(G[2][1][2] == doctest::Approx(1.0 / std::tan(0.8)));
  const Real4x4x4 g = ricci_rotation(s3, x);
  CHECK(g[3][1][1] == doctest::Approx(1.0 / std::tan(0.8)));
  CHECK(g[1][3][1] == doctest::Approx(-1.0 / std::tan(0.8)));
  CHECK(g[1][2][2] == doctest::Approx(1.0 / (std::tan(1.1) * std::sin(0.8))));
}

TEST_CASE("matrix connection") {
  const SpaceModel s3(SpaceKind::s3);
  for (double theta : {pi / 2, pi / 3, 0.4}) {
    const double chi = 0.9;
    const auto A = connection(s3, {0.0, chi, theta, 0.2});
    CHECK(A[0].max_abs() == 0.0);
    CHECK(A[1].max_abs() == 0.0);
    CHECK(max_abs_diff(A[2], std::cos(chi) * lorentz_generator(3, 1)) <= 1e-15);
    const Matrix4C aphi =
        std::sin(theta) * std::cos(chi) * lorentz_generator(3, 2) + std::cos(theta) * lorentz_generator(1, 2);
    CHECK(max_abs_diff(A[3], aphi) <= 1e-15);
    const auto Ac = connection(s3, {0.0, chi, theta, 0.2}, Basis::cyclic);
    for (int mu = 0; mu < 4; ++mu) CHECK(max_abs_diff(Ac[mu], to_cyclic(A[mu])) <= 1e-15);
  }
  const SpaceModel h3(SpaceKind::h3);
  const auto A = connection(h3, {0.0, 1.2, pi / 2, 0.0});
  CHECK(max_abs_diff(A[2], std::cosh(1.2) * lorentz_generator(3, 1)) <= 1e-15);
}

TEST_CASE("curved alpha matrices") {
  const SpaceModel s3(SpaceKind::s3);
  const Coordinates x{0.0, 0.6, 1.0, 0.0};
  const auto a = alpha_curved(s3, x);
  CHECK(max_abs_diff(a[0], Matrix4C::identity()) == 0.0);
  CHECK(max_abs_diff(a[1], alpha(3)) == 0.0);
  CHECK(max_abs_diff(a[2], (1.0 / std::sin(0.6)) * alpha(1)) <= 1e-15);
  CHECK(max_abs_diff(a[3], (1.0 / (std::sin(0.6) * std::sin(1.0))) * alpha(2)) <= 1e-15);
}

TEST_CASE("connection near the origin reduces to constant generators") {
  const SpaceModel s3(SpaceKind::s3);
  const auto A = connection(s3, {0.0, 1e-5, 1.0, 0.0});
  CHECK(max_abs_diff(A[2], lorentz_generator(3, 1)) <= 1e-9);
  const auto B = connection(s3, {0.0, 1e-5, std::numbers::pi / 2, 0.0});
  CHECK(max_abs_diff(B[3], lorentz_generator(3, 2)) <= 1e-9);
}
