// SPDX-License-Identifier: Apache-2.0
//
// Flat-space equivalence between (-i d_0 + alpha^j d_j) Psi = J and the eight
// scalar Maxwell equations (epsilon_0 = c = 1), with J = (j0, i j1, i j2, i j3).
#pragma once

#include <array>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "cmx/matrix.hpp"

namespace cmx {

using Vec3 = std::array<double, 3>;
using SpacetimePoint = std::array<double, 4>;  // (t, x, y, z)

struct FlatFieldSample {
  Vec3 E{};
  Vec3 cB{};
  double charge = 0.0;  // charge density j^0
  Vec3 current{};       // j^1..j^3
};

/// Field values and first derivatives d_mu, mu = 0 (time), 1..3.
struct FlatFieldJet {
  FlatFieldSample value;
  std::array<Vec3, 4> dE{};
  std::array<Vec3, 4> dcB{};
};

class AnalyticField {
 public:
  virtual ~AnalyticField() = default;
  virtual std::string name() const = 0;
  virtual FlatFieldJet jet(const SpacetimePoint& x) const = 0;
  FlatFieldSample sample(const SpacetimePoint& x) const { return jet(x).value; }
};

/// E = A cos(k(z - t) + delta) x_hat, cB = A cos(k(z - t) + delta) y_hat.
class PlaneWave final : public AnalyticField {
 public:
  PlaneWave(double amplitude = 1.0, double k = 1.0, double phase = 0.0) : a_(amplitude), k_(k), delta_(phase) {}
  std::string name() const override { return "plane_wave"; }
  FlatFieldJet jet(const SpacetimePoint& x) const override;

 private:
  double a_, k_, delta_;
};

/// E = A sin(kz) cos(kt) x_hat, cB = -A cos(kz) sin(kt) y_hat.
class StandingWave final : public AnalyticField {
 public:
  StandingWave(double amplitude = 1.0, double k = 1.0) : a_(amplitude), k_(k) {}
  std::string name() const override { return "standing_wave"; }
  FlatFieldJet jet(const SpacetimePoint& x) const override;

 private:
  double a_, k_;
};

/// Static field of a uniformly charged ball centred at the origin: charge
/// density rho inside radius R, E = rho x/3 inside, rho R^3 x/(3|x|^3) outside.
/// Derivatives are not defined on the surface |x| = R.
class ChargedBall final : public AnalyticField {
 public:
  ChargedBall(double density = 1.0, double radius = 1.0) : rho_(density), radius_(radius) {}
  std::string name() const override { return "charged_ball"; }
  FlatFieldJet jet(const SpacetimePoint& x) const override;

 private:
  double rho_, radius_;
};

/// Magnetostatic field of a uniform current density J z_hat: cB = (J/2)(-y, x, 0).
class UniformCurrent final : public AnalyticField {
 public:
  explicit UniformCurrent(double density = 1.0) : j_(density) {}
  std::string name() const override { return "uniform_current"; }
  FlatFieldJet jet(const SpacetimePoint& x) const override;

 private:
  double j_;
};

/// Built-in families: plane wave, standing wave, charged ball, uniform current.
std::vector<std::unique_ptr<AnalyticField>> analytic_field_library();

/// Jet of a sampled field from fourth-order central differences.
FlatFieldJet jet_fd(const std::function<FlatFieldSample(const SpacetimePoint&)>& field, const SpacetimePoint& x,
                    double h = 1e-3);

/// (-i d_0 + alpha^j d_j) Psi - J, assembled with the alpha matrices.
std::array<cplx, 4> matrix_residual(const FlatFieldJet& jet);

/// Eight scalar equations in the order: div cB; (rot E + d_0 cB)_{1,2,3};
/// div E - j0; (rot cB - d_0 E - j)_{1,2,3}.
std::array<double, 8> classical_residual(const FlatFieldJet& jet);

/// (Im R0, Re R1, Re R2, Re R3, Re R0, Im R1, Im R2, Im R3): the matrix residual
/// laid out like classical_residual.
std::array<double, 8> regroup(const std::array<cplx, 4>& matrix);

}  // namespace cmx
