// SPDX-License-Identifier: Apache-2.0
#include "cmx/flat_check.hpp"

#include <cmath>

namespace cmx {

namespace {

constexpr cplx I{0.0, 1.0};

}  // namespace

FlatFieldJet PlaneWave::jet(const SpacetimePoint& x) const {
  const double ph = k_ * (x[3] - x[0]) + delta_;
  const double c = a_ * std::cos(ph), ds = -a_ * k_ * std::sin(ph);  // d(ph) derivative
  FlatFieldJet j;
  j.value.E = {c, 0.0, 0.0};
  j.value.cB = {0.0, c, 0.0};
  j.dE[0][0] = -ds;
  j.dE[3][0] = ds;
  j.dcB[0][1] = -ds;
  j.dcB[3][1] = ds;
  return j;
}

FlatFieldJet StandingWave::jet(const SpacetimePoint& x) const {
  const double kz = k_ * x[3], kt = k_ * x[0];
  FlatFieldJet j;
  j.value.E = {a_ * std::sin(kz) * std::cos(kt), 0.0, 0.0};
  j.value.cB = {0.0, -a_ * std::cos(kz) * std::sin(kt), 0.0};
  j.dE[0][0] = -a_ * k_ * std::sin(kz) * std::sin(kt);
  j.dE[3][0] = a_ * k_ * std::cos(kz) * std::cos(kt);
  j.dcB[0][1] = -a_ * k_ * std::cos(kz) * std::cos(kt);
  j.dcB[3][1] = a_ * k_ * std::sin(kz) * std::sin(kt);
  return j;
}

FlatFieldJet ChargedBall::jet(const SpacetimePoint& x) const {
  const Vec3 p{x[1], x[2], x[3]};
  const double r2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
  const double r = std::sqrt(r2);
  FlatFieldJet j;
  if (r < radius_) {
    j.value.charge = rho_;
    for (int i = 0; i < 3; ++i) {
      j.value.E[i] = rho_ * p[i] / 3.0;
      j.dE[i + 1][i] = rho_ / 3.0;
    }
  } else {
    const double q = rho_ * radius_ * radius_ * radius_ / 3.0;  // E = q x / r^3
    const double r3 = r2 * r, r5 = r3 * r2;
    for (int i = 0; i < 3; ++i) {
      j.value.E[i] = q * p[i] / r3;
      for (int k = 0; k < 3; ++k) j.dE[k + 1][i] = q * ((i == k ? 1.0 : 0.0) / r3 - 3.0 * p[i] * p[k] / r5);
    }
  }
  return j;
}

FlatFieldJet UniformCurrent::jet(const SpacetimePoint& x) const {
  FlatFieldJet j;
  j.value.current = {0.0, 0.0, j_};
  j.value.cB = {-0.5 * j_ * x[2], 0.5 * j_ * x[1], 0.0};
  j.dcB[2][0] = -0.5 * j_;
  j.dcB[1][1] = 0.5 * j_;
  return j;
}

std::vector<std::unique_ptr<AnalyticField>> analytic_field_library() {
  std::vector<std::unique_ptr<AnalyticField>> v;
  v.push_back(std::make_unique<PlaneWave>(1.3, 2.0, 0.4));
  v.push_back(std::make_unique<StandingWave>(0.8, 1.7));
  v.push_back(std::make_unique<ChargedBall>(2.0, 1.0));
  v.push_back(std::make_unique<UniformCurrent>(1.5));
  return v;
}

FlatFieldJet jet_fd(const std::function<FlatFieldSample(const SpacetimePoint&)>& field, const SpacetimePoint& x,
                    double h) {
  FlatFieldJet j;
  j.value = field(x);
  for (int mu = 0; mu < 4; ++mu) {
    auto at = [&](double k) {
      SpacetimePoint y = x;
      y[mu] += k * h;
      return field(y);
    };
    const FlatFieldSample m2 = at(-2), m1 = at(-1), p1 = at(1), p2 = at(2);
    for (int i = 0; i < 3; ++i) {
      j.dE[mu][i] = (m2.E[i] - 8.0 * m1.E[i] + 8.0 * p1.E[i] - p2.E[i]) / (12.0 * h);
      j.dcB[mu][i] = (m2.cB[i] - 8.0 * m1.cB[i] + 8.0 * p1.cB[i] - p2.cB[i]) / (12.0 * h);
    }
  }
  return j;
}

std::array<cplx, 4> matrix_residual(const FlatFieldJet& jet) {
  // d_mu Psi with Psi = (0, E + i cB)
  std::array<FieldVector, 4> d;
  for (int mu = 0; mu < 4; ++mu)
    for (int k = 0; k < 3; ++k) d[mu][k + 1] = cplx(jet.dE[mu][k], jet.dcB[mu][k]);
  FieldVector out = -I * d[0];
  for (int k = 1; k <= 3; ++k) out += alpha(k) * d[k];
  const auto& v = jet.value;
  const FieldVector J{{cplx(v.charge), I * v.current[0], I * v.current[1], I * v.current[2]}};
  out -= J;
  return out.c;
}

std::array<double, 8> classical_residual(const FlatFieldJet& jet) {
  const auto& E = jet.dE;
  const auto& B = jet.dcB;
  const auto& v = jet.value;
  // E[mu][k] = d_mu E^k with spatial mu = 1..3 and component k = 0..2 for E^1..E^3
  return {
      B[1][0] + B[2][1] + B[3][2],
      E[2][2] - E[3][1] + B[0][0],
      E[3][0] - E[1][2] + B[0][1],
      E[1][1] - E[2][0] + B[0][2],
      E[1][0] + E[2][1] + E[3][2] - v.charge,
      B[2][2] - B[3][1] - E[0][0] - v.current[0],
      B[3][0] - B[1][2] - E[0][1] - v.current[1],
      B[1][1] - B[2][0] - E[0][2] - v.current[2],
  };
}

std::array<double, 8> regroup(const std::array<cplx, 4>& m) {
  return {m[0].imag(), m[1].real(), m[2].real(), m[3].real(),
          m[0].real(), m[1].imag(), m[2].imag(), m[3].imag()};
}

}  // namespace cmx
