// SPDX-License-Identifier: Apache-2.0
//
// Radial part of the separated Maxwell system on S3 / H3.
//
// With f_i = F_i / r(chi), F = (F1 + F3)/sqrt2, G = (F1 - F3)/sqrt2 the four
// first-order radial equations reduce to
//
//   F2 = i nu G / (omega r),   F = -(i/omega) G',   G'' + omega^2 G - nu^2 G / r^2 = 0,
//
// and G = z^a (1-z)^b F(alpha, beta; 2a; z) with z = 1 - exp(-2i chi) (S3) or
// z = 1 - exp(-2 chi) (H3). Regularity at chi = 0 selects a = j + 1; on S3
// the hypergeometric factor must terminate, giving omega = n + 1 + j.
#pragma once

#include <functional>
#include <span>
#include <vector>

#include "cmx/geometry.hpp"
#include "cmx/hypergeometric.hpp"

namespace cmx {

/// Dimensionless radial problem (curvature radius scaled to 1).
struct RadialParams {
  SpaceModel model;
  double omega = 1.0;
  int j = 1;

  double nu() const;
  /// Throws unless omega > 0 and j >= 1.
  void validate() const;
};

/// S3 spectral frequency n + 1 + j (curvature radius 1).
double s3_frequency(int j, int n);

/// True when omega = n + 1 + j for some integer n >= 0 (within 1e-12).
bool is_quantized(int j, double omega);

enum class ExponentBranch { regular, singular };  // a = j + 1 | a = -j
enum class PhaseBranch { minus, plus };           // b = -omega/2 | +omega/2 (S3), times i on H3

struct RadialBranch {
  ExponentBranch a = ExponentBranch::regular;
  PhaseBranch b = PhaseBranch::minus;
};

struct HypReduction {
  cplx a_exp;
  cplx b_exp;
  HypParams hyp;
};

HypReduction hyp_reduction(const RadialParams& p, RadialBranch branch = {});

cplx z_of_chi(const SpaceModel& model, double chi);

/// G and its first two chi-derivatives.
struct RadialValue {
  cplx G;
  cplx dG;
  cplx d2G;
};

/// z^a (1-z)^b F(alpha, beta; gamma; z) and analytic chi-derivatives, with no
/// spectral check. Needs a terminating F or |z| < 1.
RadialValue hypergeometric_G(const RadialParams& p, double chi, RadialBranch branch = {},
                             const SeriesControl& ctl = {});

struct OdeOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  double initial_step = 1e-3;
};

struct ClosedFormOptions {
  RadialBranch branch;
  /// H3: beyond this |z| the series value at the cutoff is continued by the ODE.
  double series_z_max = 0.99;
  OdeOptions ode;
};

/// Closed-form G. S3 throws Error(not_quantized) off the spectrum.
RadialValue closed_form_G(const RadialParams& p, double chi, const ClosedFormOptions& opt = {});

/// chi beyond which closed_form_G switches to ODE continuation (H3), +inf for S3.
double series_chi_limit(const SpaceModel& model, double series_z_max);

/// Seven-component radial data at one chi.
struct RadialPoint {
  double chi = 0.0;
  RadialValue g;
  cplx F, F1, F2, F3;
  cplx f1, f2, f3;
  cplx df1, df2, df3;
};

RadialPoint assemble_first_order(const RadialParams& p, double chi, const RadialValue& g);

struct RadialSolution {
  std::vector<double> chi_grid;
  std::vector<cplx> G, F, F2, f1, f2, f3;
  std::vector<RadialPoint> points;  // full data incl. derivatives
  double residual_2nd = 0.0;
  double residual_1st = 0.0;
};

/// Closed form sampled on `grid`, normalized so the largest-|G| sample is 1,
/// with both residual diagnostics filled in.
RadialSolution sample_radial(const RadialParams& p, std::span<const double> grid,
                             const ClosedFormOptions& opt = {});

using RadialSampler = std::function<RadialValue(double)>;

/// max |G'' + omega^2 G - nu^2 G / r^2| / max |G| over the grid.
double residual_second_order(const RadialParams& p, const RadialSampler& g, std::span<const double> grid);

struct FirstOrderResidual {
  std::array<double, 4> per_equation{};
  /// The first equation in F-variables, which should collapse to 0 = 0.
  double identity = 0.0;
  double max = 0.0;
};

/// Residuals of the four first-order equations for f1, f2, f3, relative to
/// max over the grid of |omega f_i| and |f_i'|.
FirstOrderResidual residual_first_order(const RadialParams& p, const RadialSolution& sol);

/// Adaptive Runge-Kutta integration of G'' = (nu^2 / r^2 - omega^2) G from
/// (chi0, init) through the monotone sample points (either direction).
std::vector<RadialValue> ode_oracle(const RadialParams& p, double chi0, RadialValue init,
                                    std::span<const double> samples, const OdeOptions& opt = {});

/// S3 shooting test: the solution regular at chi = 0 and the one regular at
/// chi = pi (both from the local series) are integrated to pi/2 and compared
/// through their normalized Wronskian. ~0 on the spectrum, O(1) off it.
double regularity_mismatch(const RadialParams& p, double chi0 = 0.05, const OdeOptions& opt = {});

/// Evenly spaced guarded grid: [0.05, pi - 0.05] (S3) or [0.05, 2] (H3).
std::vector<double> guarded_grid(const SpaceModel& model, int n);
std::vector<double> linspace(double a, double b, int n);

}  // namespace cmx
