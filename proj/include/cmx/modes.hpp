// SPDX-License-Identifier: Apache-2.0
//
// Spherical electromagnetic modes
//   Psi'(t, chi, theta, phi) = exp(-i omega t) (0, f1 D_-1, f2 D_0, f3 D_+1)
// in the cyclic basis, the S3 spectrum omega = (n + 1 + j)/rho, and the
// end-to-end check of the curved matrix Maxwell operator
//   [-i d_t + alpha'^3 d_chi + (alpha'^1 s'_2 - alpha'^2 s'_1) r'/r + Sigma'_{theta phi}/r] Psi' = 0.
// Coordinates and frequencies are in units of the curvature radius.
#pragma once

#include <array>
#include <vector>

#include "cmx/radial.hpp"
#include "cmx/wigner.hpp"

namespace cmx {

struct ModeSpec {
  SpaceModel model;
  int j = 1;
  int m = 0;
  int n = 0;            // S3 radial quantum number
  double omega = 1.0;   // H3 frequency
  /// Scales the frequency of the time factor and of the first-order assembly
  /// while the radial profile G keeps the nominal frequency. 1 for a true mode.
  double detuning = 1.0;

  static ModeSpec s3(int j, int m, int n, double rho = 1.0);
  static ModeSpec h3(int j, int m, double omega, double rho = 1.0);

  /// Frequency of the radial profile: n + 1 + j on S3, omega on H3.
  double profile_omega() const;
  /// Frequency in the time factor (profile_omega * detuning).
  double time_omega() const;
  /// time_omega / rho, the frequency in physical units.
  double physical_omega() const;
  void validate() const;
};

struct SpectrumRow {
  int j = 0;
  int n = 0;
  double omega = 0.0;
  int degeneracy = 0;
};

using SpectrumTable = std::vector<SpectrumRow>;

/// All (j, n) with 1 <= j <= j_max, 0 <= n <= n_max, ordered by j then n.
SpectrumTable spectrum(int j_max, int n_max, double rho = 1.0);

/// m = -j..j
std::vector<int> admissible_m(int j);

/// Mode with its radial closed form; cheap to copy, immutable.
class Mode {
 public:
  explicit Mode(const ModeSpec& spec, const ClosedFormOptions& opt = {});

  const ModeSpec& spec() const { return spec_; }

  RadialPoint radial(double chi) const;
  FieldVector evaluate(const Coordinates& x) const;

  /// Operator applied with analytic d_t, closed-form d_chi and the angular
  /// action formula for Sigma'.
  FieldVector apply_operator(const Coordinates& x) const;

 private:
  ModeSpec spec_;
  ClosedFormOptions opt_;
  RadialParams profile_;   // drives G
  RadialParams assembly_;  // drives F, F2 and the time factor
};

FieldVector evaluate_mode(const ModeSpec& spec, const Coordinates& x);

struct ModeGrid {
  double t = 0.3;
  std::vector<double> chi, theta, phi;

  std::size_t size() const { return chi.size() * theta.size() * phi.size(); }
  /// n^3 points: chi in [0.05, pi-0.05] (S3) or [0.1, 1.5] (H3),
  /// theta in [0.1, pi-0.1], phi uniform on [0, 2 pi).
  static ModeGrid defaults(const SpaceModel& model, int n = 20);
};

struct OperatorResidual {
  double analytic = 0.0;    // max |O Psi'| / max |Psi'|, analytic path
  double fd = 0.0;          // same with fourth-order differences in all coordinates
  double component0 = 0.0;  // auxiliary slot of the analytic result, relative
  double block_identity = 0.0;  // |alpha'^1 s'_2 - alpha'^2 s'_1 - tabulated block|
  double max_psi = 0.0;
};

struct FdSteps {
  double t = 1e-3;
  double chi = 1e-3;
  double angle = 1e-3;
};

OperatorResidual curved_operator_residual(const ModeSpec& spec, const ModeGrid& grid,
                                          const FdSteps& steps = {}, bool with_fd = true);

/// The constant matrix (alpha'^1 s'_2 - alpha'^2 s'_1) in its tabulated form.
Matrix4C radial_coupling_block();

struct PhysicalFields {
  std::array<double, 3> E{};
  std::array<double, 3> cB{};
};

/// Cartesian psi = U4^{-1} Psi'; E = Re psi, cB = Im psi. Throws
/// Error(constraint) if the auxiliary slot is not zero.
PhysicalFields to_physical_fields(const FieldVector& psi_cyclic, double tol = 1e-12);

struct GridRow {
  Coordinates x;
  FieldVector psi;  // cyclic basis
  PhysicalFields fields;
  double residual = 0.0;  // |O Psi'| / max |Psi'| over the grid
};

/// Mode sampled over the grid with per-point operator residuals.
std::vector<GridRow> sample_mode(const ModeSpec& spec, const ModeGrid& grid);

}  // namespace cmx
