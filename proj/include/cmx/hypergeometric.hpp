// SPDX-License-Identifier: Apache-2.0
//
// Gauss hypergeometric function F(alpha, beta; gamma; z) for complex
// parameters and argument. Terminating (polynomial) parameters are summed
// exactly for any z; otherwise the power series is used inside |z| < 1.
#pragma once

#include "cmx/matrix.hpp"

namespace cmx {

struct HypParams {
  cplx alpha;
  cplx beta;
  cplx gamma;
};

struct SeriesControl {
  double rel_tol = 1e-17;   // a term counts as negligible below rel_tol * |partial sum|
  int quiet_terms = 3;      // consecutive negligible terms required to stop
  int max_terms = 10000;
};

/// Degree n when alpha or beta equals -n (n >= 0), otherwise -1.
int polynomial_degree(const HypParams& p);

cplx hyp2f1(const HypParams& p, cplx z, const SeriesControl& ctl = {});

/// d^k F / dz^k = (alpha)_k (beta)_k / (gamma)_k F(alpha+k, beta+k; gamma+k; z).
cplx hyp2f1_derivative(const HypParams& p, cplx z, int order = 1, const SeriesControl& ctl = {});

}  // namespace cmx
