// SPDX-License-Identifier: Apache-2.0
#include "cmx/hypergeometric.hpp"

#include <cmath>
#include <string>

#include "cmx/errors.hpp"

namespace cmx {

namespace {

// Non-positive integer test: exact on purpose, since spectral parameters
// are built from integers.
bool is_nonpositive_integer(cplx x, int* n = nullptr) {
  if (x.imag() != 0.0) return false;
  const double r = x.real();
  if (r > 0.0 || r != std::floor(r)) return false;
  if (n) *n = static_cast<int>(-r);
  return true;
}

}  // namespace

int polynomial_degree(const HypParams& p) {
  int na = 0, nb = 0;
  const bool ta = is_nonpositive_integer(p.alpha, &na);
  const bool tb = is_nonpositive_integer(p.beta, &nb);
  if (ta && tb) return std::min(na, nb);
  if (ta) return na;
  if (tb) return nb;
  return -1;
}

cplx hyp2f1(const HypParams& p, cplx z, const SeriesControl& ctl) {
  const int degree = polynomial_degree(p);
  int gamma_pole = -1;
  if (is_nonpositive_integer(p.gamma, &gamma_pole) && (degree < 0 || gamma_pole < degree))
    fail(ErrorCode::convergence,
         "hyp2f1: gamma = " + std::to_string(p.gamma.real()) + " is a pole before the series terminates");

  if (degree >= 0) {
    // Exactly degree + 1 terms.
    cplx term = 1.0, sum = 1.0;
    for (int k = 0; k < degree; ++k) {
      term *= (p.alpha + double(k)) * (p.beta + double(k)) / ((p.gamma + double(k)) * double(k + 1)) * z;
      sum += term;
    }
    return sum;
  }

  if (!(std::abs(z) < 1.0))
    fail(ErrorCode::convergence, "hyp2f1: non-terminating series requires |z| < 1, got |z| = " +
                                     std::to_string(std::abs(z)));

  cplx term = 1.0, sum = 1.0;
  int quiet = 0;
  for (int k = 0; k < ctl.max_terms; ++k) {
    term *= (p.alpha + double(k)) * (p.beta + double(k)) / ((p.gamma + double(k)) * double(k + 1)) * z;
    sum += term;
    if (std::abs(term) <= ctl.rel_tol * std::abs(sum)) {
      if (++quiet >= ctl.quiet_terms) return sum;
    } else {
      quiet = 0;
    }
  }
  fail(ErrorCode::convergence, "hyp2f1: series did not converge within " +
                                   std::to_string(ctl.max_terms) + " terms at |z| = " +
                                   std::to_string(std::abs(z)));
}

cplx hyp2f1_derivative(const HypParams& p, cplx z, int order, const SeriesControl& ctl) {
  if (order < 0) fail(ErrorCode::invalid_argument, "hyp2f1_derivative: negative order");
  cplx factor = 1.0;
  for (int k = 0; k < order; ++k) {
    factor *= (p.alpha + double(k)) * (p.beta + double(k)) / (p.gamma + double(k));
    if (factor == 0.0) return 0.0;
  }
  const HypParams shifted{p.alpha + double(order), p.beta + double(order), p.gamma + double(order)};
  return factor * hyp2f1(shifted, z, ctl);
}

}  // namespace cmx
