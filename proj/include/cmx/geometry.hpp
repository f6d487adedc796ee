// SPDX-License-Identifier: Apache-2.0
//
// Static constant-curvature spacetimes R x S3 and R x H3 in spherical
// coordinates x = (t, chi, theta, phi), c = 1:
//
//   ds^2 = dt^2 - dchi^2 - r(chi)^2 (dtheta^2 + sin^2 theta dphi^2),
//   r = sin chi (S3) or sinh chi (H3).
//
// Tetrad indices a = 0..3 use the frame ordering of the matrix formalism:
// e_(0) = d_t, e_(3) = d_chi, e_(1) ~ d_theta, e_(2) ~ d_phi.
#pragma once

#include <array>

#include "cmx/matrix.hpp"

namespace cmx {

enum class SpaceKind { s3, h3 };

struct SpaceModel {
  SpaceKind kind = SpaceKind::s3;
  double rho = 1.0;  // curvature radius; only rescales reported frequencies

  SpaceModel() = default;
  SpaceModel(SpaceKind k, double radius = 1.0);

  double r(double chi) const;       // sin chi | sinh chi
  double dr(double chi) const;      // cos chi | cosh chi
  double cot_r(double chi) const;   // r'/r
  const char* name() const { return kind == SpaceKind::s3 ? "s3" : "h3"; }
};

struct Coordinates {
  double t = 0.0;
  double chi = 0.0;
  double theta = 0.0;
  double phi = 0.0;

  double operator[](int i) const;
  double& operator[](int i);
};

/// Distance from a coordinate singularity below which evaluations are rejected.
inline constexpr double kCoordinateGuard = 1e-6;

/// Throws Error(domain) when x is on or outside a coordinate singularity.
void check_coordinates(const SpaceModel& model, const Coordinates& x);

using Real4 = std::array<double, 4>;
using Real4x4 = std::array<Real4, 4>;
using Real4x4x4 = std::array<Real4x4, 4>;

/// g_{alpha beta}
Real4x4 metric(const SpaceModel& model, const Coordinates& x);

/// tetrad[a][alpha] = e_(a)^alpha
Real4x4 tetrad(const SpaceModel& model, const Coordinates& x);

/// christoffel[alpha][beta][gamma] = Gamma^alpha_{beta gamma}, coordinate order (t, chi, theta, phi).
Real4x4x4 christoffel(const SpaceModel& model, const Coordinates& x);

/// ricci[a][b][c] = gamma_{abc} = -e_(a)beta;alpha e_(b)^beta e_(c)^alpha.
Real4x4x4 ricci_rotation(const SpaceModel& model, const Coordinates& x);

/// A_rho = 1/2 j^{ab} gamma_{abc} e^(c)_rho, rho = (t, chi, theta, phi).
std::array<Matrix4C, 4> connection(const SpaceModel& model, const Coordinates& x,
                                   Basis basis = Basis::cartesian);

/// alpha^rho(x) = alpha^c e_(c)^rho.
std::array<Matrix4C, 4> alpha_curved(const SpaceModel& model, const Coordinates& x,
                                     Basis basis = Basis::cartesian);

// ---- finite-difference oracles: second-order central differences at h and
// 2h combined by one Richardson step (fourth order) ----

inline constexpr double kGeometryFdStep = 1e-4;

/// Gamma = 1/2 g^{ad}(d_b g_dc + d_c g_db - d_d g_bc) from a differenced metric.
Real4x4x4 christoffel_fd(const SpaceModel& model, const Coordinates& x,
                         double h = kGeometryFdStep);

/// gamma_{abc} from its definition with differenced tetrad and christoffel_fd.
Real4x4x4 ricci_rotation_fd(const SpaceModel& model, const Coordinates& x,
                            double h = kGeometryFdStep);

/// max |nabla_gamma g_{alpha beta}| with differenced metric and closed-form Christoffels.
double metric_compatibility_residual(const SpaceModel& model, const Coordinates& x,
                                     double h = kGeometryFdStep);

/// max |e_(a)^alpha e_(b)^beta g_{alpha beta} - eta_ab|.
double tetrad_orthonormality_residual(const SpaceModel& model, const Coordinates& x);

}  // namespace cmx
