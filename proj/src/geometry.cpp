// SPDX-License-Identifier: Apache-2.0
#include "cmx/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cmx/errors.hpp"

namespace cmx {

namespace {

constexpr int T = 0, CHI = 1, TH = 2, PH = 3;
constexpr Real4 kEta{1.0, -1.0, -1.0, -1.0};

// Unchecked variants: the oracles evaluate a stencil step away from x.
Real4x4 tetrad_unchecked(const SpaceModel& m, const Coordinates& x) {
  const double r = m.r(x.chi);
  const double s = std::sin(x.theta);
  Real4x4 e{};
  e[0][T] = 1.0;
  e[3][CHI] = 1.0;
  e[1][TH] = 1.0 / r;
  e[2][PH] = 1.0 / (r * s);
  return e;
}

Real4x4 metric_unchecked(const SpaceModel& m, const Coordinates& x) {
  const double r = m.r(x.chi);
  const double s = std::sin(x.theta);
  Real4x4 g{};
  g[T][T] = 1.0;
  g[CHI][CHI] = -1.0;
  g[TH][TH] = -r * r;
  g[PH][PH] = -r * r * s * s;
  return g;
}

// Covariant tetrad e_(a)beta = e_(a)^alpha g_{alpha beta}.
Real4x4 lowered_tetrad(const SpaceModel& m, const Coordinates& x) {
  const Real4x4 e = tetrad_unchecked(m, x);
  const Real4x4 g = metric_unchecked(m, x);
  Real4x4 out{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int al = 0; al < 4; ++al) out[a][b] += e[a][al] * g[al][b];
  return out;
}

Coordinates shifted(Coordinates x, int i, double h) {
  x[i] += h;
  return x;
}

template <class F>
auto central(F&& f, const Coordinates& x, int i, double h) {
  // Richardson step on second-order central differences at h and 2h
  auto p1 = f(shifted(x, i, h));
  auto m1 = f(shifted(x, i, -h));
  auto p2 = f(shifted(x, i, 2 * h));
  auto m2 = f(shifted(x, i, -2 * h));
  using R = decltype(p1);
  R out{};
  for (std::size_t a = 0; a < out.size(); ++a)
    for (std::size_t b = 0; b < out[a].size(); ++b)
      out[a][b] = (8.0 * (p1[a][b] - m1[a][b]) - (p2[a][b] - m2[a][b])) / (12 * h);
  return out;
}

}  // namespace

SpaceModel::SpaceModel(SpaceKind k, double radius) : kind(k), rho(radius) {
  if (!(radius > 0.0) || !std::isfinite(radius))
    fail(ErrorCode::invalid_argument, "curvature radius must be positive");
}

double SpaceModel::r(double chi) const { return kind == SpaceKind::s3 ? std::sin(chi) : std::sinh(chi); }
double SpaceModel::dr(double chi) const { return kind == SpaceKind::s3 ? std::cos(chi) : std::cosh(chi); }
double SpaceModel::cot_r(double chi) const {
  return kind == SpaceKind::s3 ? 1.0 / std::tan(chi) : 1.0 / std::tanh(chi);
}

double Coordinates::operator[](int i) const {
  switch (i) {
    case 0: return t;
    case 1: return chi;
    case 2: return theta;
    default: return phi;
  }
}

double& Coordinates::operator[](int i) {
  switch (i) {
    case 0: return t;
    case 1: return chi;
    case 2: return theta;
    default: return phi;
  }
}

void check_coordinates(const SpaceModel& model, const Coordinates& x) {
  const bool finite = std::isfinite(x.t) && std::isfinite(x.chi) && std::isfinite(x.theta) &&
                      std::isfinite(x.phi);
  if (!finite) fail(ErrorCode::domain, "coordinates must be finite");
  if (model.kind == SpaceKind::s3) {
    if (x.chi <= 0.0 || x.chi >= std::numbers::pi || std::abs(std::sin(x.chi)) < kCoordinateGuard)
      fail(ErrorCode::domain, "S3 requires 0 < chi < pi away from the poles, got chi = " +
                                  std::to_string(x.chi));
  } else if (x.chi < kCoordinateGuard) {
    fail(ErrorCode::domain, "H3 requires chi > 0, got chi = " + std::to_string(x.chi));
  }
  if (x.theta <= 0.0 || x.theta >= std::numbers::pi || std::abs(std::sin(x.theta)) < kCoordinateGuard)
    fail(ErrorCode::domain, "theta must lie in (0, pi) away from the axis, got " + std::to_string(x.theta));
}

Real4x4 metric(const SpaceModel& model, const Coordinates& x) {
  check_coordinates(model, x);
  return metric_unchecked(model, x);
}

Real4x4 tetrad(const SpaceModel& model, const Coordinates& x) {
  check_coordinates(model, x);
  return tetrad_unchecked(model, x);
}

Real4x4x4 christoffel(const SpaceModel& model, const Coordinates& x) {
  check_coordinates(model, x);
  const double r = model.r(x.chi), dr = model.dr(x.chi);
  const double s = std::sin(x.theta), c = std::cos(x.theta);
  Real4x4x4 G{};
  G[CHI][PH][PH] = -r * dr * s * s;
  G[CHI][TH][TH] = -r * dr;
  G[TH][PH][PH] = -s * c;
  G[TH][TH][CHI] = G[TH][CHI][TH] = dr / r;
  G[PH][PH][TH] = G[PH][TH][PH] = c / s;
  G[PH][CHI][PH] = G[PH][PH][CHI] = dr / r;
  return G;
}

Real4x4x4 ricci_rotation(const SpaceModel& model, const Coordinates& x) {
  check_coordinates(model, x);
  const double r = model.r(x.chi);
  const double cot_chi = model.cot_r(x.chi);
  const double cot_th = std::cos(x.theta) / std::sin(x.theta);
  Real4x4x4 g{};
  // gamma_{ab1}
  g[1][3][1] = -cot_chi;
  g[3][1][1] = cot_chi;
  // gamma_{ab2}
  g[1][2][2] = cot_th / r;
  g[2][1][2] = -cot_th / r;
  g[2][3][2] = -cot_chi;
  g[3][2][2] = cot_chi;
  return g;
}

std::array<Matrix4C, 4> connection(const SpaceModel& model, const Coordinates& x, Basis basis) {
  const Real4x4x4 gam = ricci_rotation(model, x);
  const Real4x4 low = lowered_tetrad(model, x);
  std::array<Matrix4C, 4> A{};
  for (int mu = 0; mu < 4; ++mu)
    for (int c = 0; c < 4; ++c) {
      const double e_up_c = kEta[c] * low[c][mu];  // e^(c)_mu
      if (e_up_c == 0.0) continue;
      for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
          if (gam[a][b][c] == 0.0) continue;
          A[mu] += (0.5 * gam[a][b][c] * e_up_c) * lorentz_generator(a, b, basis);
        }
    }
  return A;
}

std::array<Matrix4C, 4> alpha_curved(const SpaceModel& model, const Coordinates& x, Basis basis) {
  const Real4x4 e = tetrad(model, x);
  std::array<Matrix4C, 4> out{};
  for (int c = 0; c < 4; ++c) {
    const Matrix4C ac = alpha(c, basis);
    for (int mu = 0; mu < 4; ++mu)
      if (e[c][mu] != 0.0) out[mu] += e[c][mu] * ac;
  }
  return out;
}

Real4x4x4 christoffel_fd(const SpaceModel& model, const Coordinates& x, double h) {
  check_coordinates(model, x);
  const Real4x4 g = metric_unchecked(model, x);
  std::array<Real4x4, 4> dg{};  // dg[d] = d_d g
  for (int d = 0; d < 4; ++d)
    dg[d] = central([&](const Coordinates& y) { return metric_unchecked(model, y); }, x, d, h);
  Real4 ginv{};  // metric is diagonal in these coordinates
  for (int i = 0; i < 4; ++i) ginv[i] = 1.0 / g[i][i];
  Real4x4x4 G{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        G[a][b][c] = 0.5 * ginv[a] * (dg[b][a][c] + dg[c][a][b] - dg[a][b][c]);
  return G;
}

Real4x4x4 ricci_rotation_fd(const SpaceModel& model, const Coordinates& x, double h) {
  check_coordinates(model, x);
  const Real4x4x4 G = christoffel_fd(model, x, h);
  const Real4x4 e = tetrad_unchecked(model, x);
  const Real4x4 low = lowered_tetrad(model, x);
  std::array<Real4x4, 4> de{};  // de[alpha][a][beta] = d_alpha e_(a)beta
  for (int al = 0; al < 4; ++al)
    de[al] = central([&](const Coordinates& y) { return lowered_tetrad(model, y); }, x, al, h);

  // nabla[a][beta][alpha] = e_(a)beta;alpha
  Real4x4x4 nabla{};
  for (int a = 0; a < 4; ++a)
    for (int be = 0; be < 4; ++be)
      for (int al = 0; al < 4; ++al) {
        double v = de[al][a][be];
        for (int l = 0; l < 4; ++l) v -= G[l][al][be] * low[a][l];
        nabla[a][be][al] = v;
      }

  Real4x4x4 out{};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        double v = 0.0;
        for (int be = 0; be < 4; ++be)
          for (int al = 0; al < 4; ++al) v += nabla[a][be][al] * e[b][be] * e[c][al];
        out[a][b][c] = -v;
      }
  return out;
}

double metric_compatibility_residual(const SpaceModel& model, const Coordinates& x, double h) {
  const Real4x4x4 G = christoffel(model, x);
  const Real4x4 g = metric_unchecked(model, x);
  double worst = 0.0;
  for (int c = 0; c < 4; ++c) {
    const Real4x4 dg = central([&](const Coordinates& y) { return metric_unchecked(model, y); }, x, c, h);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        double v = dg[a][b];
        for (int l = 0; l < 4; ++l) v -= G[l][c][a] * g[l][b] + G[l][c][b] * g[a][l];
        worst = std::max(worst, std::abs(v));
      }
  }
  return worst;
}

double tetrad_orthonormality_residual(const SpaceModel& model, const Coordinates& x) {
  const Real4x4 e = tetrad(model, x);
  const Real4x4 g = metric_unchecked(model, x);
  double worst = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double v = 0.0;
      for (int al = 0; al < 4; ++al)
        for (int be = 0; be < 4; ++be) v += e[a][al] * e[b][be] * g[al][be];
      worst = std::max(worst, std::abs(v - (a == b ? kEta[a] : 0.0)));
    }
  return worst;
}

}  // namespace cmx
