// SPDX-License-Identifier: Apache-2.0
//
// Wigner functions in the Varshalovich convention,
//   D^j_{m1 m2}(phi, theta, 0) = exp(-i m1 phi) d^j_{m1 m2}(theta),
// and the angular part of the separated Maxwell operator. The field
// components of a spherical wave use D_sigma = D^j_{-m, sigma}(phi, theta, 0),
// sigma in {-1, 0, +1}.
#pragma once

#include <array>

#include "cmx/matrix.hpp"

namespace cmx {

inline constexpr int kMaxJ = 30;

/// d^j_{m1 m2}(theta) from the explicit factorial sum. Zero when |m1| or |m2|
/// exceeds j (convenient inside recurrences); throws for j outside [0, kMaxJ].
double small_d(int j, int m1, int m2, double theta);

/// d/dtheta d^j_{m1 m2}(theta), differentiating the factorial sum term by term.
double small_d_derivative(int j, int m1, int m2, double theta);

cplx big_D(int j, int m1, int m2, double phi, double theta);

struct AngularFactors {
  double nu = 0.0;     // sqrt(j(j+1))
  double a_ang = 0.0;  // sqrt((j-1)(j+2)); zero at j = 1
};

/// Requires j >= 1.
AngularFactors angular_factors(int j);

/// Residuals of the six first-order recurrences linking D_{-2..+2}: for
/// sigma = -1, 0, +1 (in that order) the d_theta relation followed by the
/// 1/sin(theta) relation. d_theta is analytic.
std::array<double, 6> recurrence_residuals(int j, int m, double theta);

/// Coefficients of Sigma'_{theta phi} Psi' for Psi' = (0, f1 D_-1, f2 D_0, f3 D_+1):
/// slot k equals coeff[k] * D_{sigma[k]}.
struct AngularAction {
  std::array<cplx, 4> coeff{};
  std::array<int, 4> sigma{0, -1, 0, 1};

  FieldVector evaluate(int j, int m, double theta, double phi) const;
};

AngularAction angular_action(int j, int m, cplx f1, cplx f2, cplx f3);

/// Psi' = (0, f1 D_-1, f2 D_0, f3 D_+1) at (theta, phi).
FieldVector angular_state(int j, int m, cplx f1, cplx f2, cplx f3, double theta, double phi);

/// Oracle: Sigma'_{theta phi} = alpha'^1 d_theta + alpha'^2 (d_phi + cos(theta) s'_3)/sin(theta)
/// applied to angular_state with fourth-order central differences.
FieldVector angular_operator_fd(int j, int m, cplx f1, cplx f2, cplx f3, double theta, double phi,
                                double h = 1e-3);

}  // namespace cmx
