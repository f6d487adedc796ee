// SPDX-License-Identifier: Apache-2.0
//
// Named verification suites. Every check records the observed value next to
// its tolerance; a suite passes iff all of its checks do.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmx/geometry.hpp"

namespace cmx {

struct CheckResult {
  std::string name;
  double observed = 0.0;
  double tolerance = 0.0;
  /// true: pass iff observed <= tolerance; false (negative control): pass iff observed >= tolerance.
  bool upper_bound = true;
  bool passed = false;
};

struct SuiteReport {
  std::string scope;
  std::vector<CheckResult> checks;
  double seconds = 0.0;

  void require_below(std::string name, double observed, double tolerance);
  void require_above(std::string name, double observed, double threshold);
  bool passed() const;
};

struct Tolerances {
  double algebra = 1e-15;
  double geometry = 1e-7;           // closed form vs definition-based FD
  double tetrad = 1e-13;
  double metric_compatibility = 1e-6;
  double wigner = 1e-10;            // recurrences, analytic derivative
  double wigner_fd = 1e-6;          // FD derivative and FD angular operator
  double quadrature = 1e-8;
  double radial = 1e-8;             // second- and first-order residuals
  double oracle_s3 = 1e-7;          // closed form vs RK
  double oracle_h3 = 1e-6;
  double variable_change = 1e-12;
  double regularity = 1e-6;         // shooting mismatch on the spectrum
  double operator_analytic = 1e-8;
  double operator_fd = 1e-6;
  double flat = 1e-13;              // Re/Im regrouping equivalence
  double flat_analytic = 1e-10;
  double flat_fd = 1e-6;
  double detuning_margin = 1e4;     // detuned residual / operator_fd must exceed this
};

struct VerifyConfig {
  Tolerances tol;
  /// Restrict the radial / modes suites to one parameter set.
  std::optional<SpaceKind> model;
  std::optional<int> j;
  std::optional<int> m;
  std::optional<int> n;
  std::optional<double> omega;
  int grid = 20;
  std::uint64_t seed = 20240607;
};

/// Scopes: algebra, geometry, wigner, radial, modes, flat, all.
std::vector<std::string> verify_scopes();

/// Runs one scope ("all" runs every suite in order). Throws
/// Error(invalid_argument) for an unknown scope.
std::vector<SuiteReport> run_verify(const std::string& scope, const VerifyConfig& cfg = {});

SuiteReport verify_algebra_suite(const VerifyConfig& cfg);
SuiteReport verify_geometry_suite(const VerifyConfig& cfg);
SuiteReport verify_wigner_suite(const VerifyConfig& cfg);
SuiteReport verify_radial_suite(const VerifyConfig& cfg);
SuiteReport verify_modes_suite(const VerifyConfig& cfg);
SuiteReport verify_flat_suite(const VerifyConfig& cfg);

}  // namespace cmx
