// SPDX-License-Identifier: Apache-2.0
#include "cmx/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cmx/errors.hpp"

namespace cmx {

namespace {

constexpr cplx I{0.0, 1.0};

// n! for n <= 2 kMaxJ + 1; 61! ~ 5e83 is well inside double range.
struct FactorialTable {
  std::array<double, 2 * kMaxJ + 2> v{};
  FactorialTable() {
    v[0] = 1.0;
    for (std::size_t n = 1; n < v.size(); ++n) v[n] = v[n - 1] * static_cast<double>(n);
  }
};

const FactorialTable& factorials() {
  static const FactorialTable t;
  return t;
}

void check_j(int j) {
  if (j < 0 || j > kMaxJ)
    fail(ErrorCode::invalid_argument, "j must lie in [0, " + std::to_string(kMaxJ) + "], got " +
                                          std::to_string(j));
}

// Integer power that treats 0^0 as 1.
double ipow(double x, int p) {
  double r = 1.0;
  for (int i = 0; i < p; ++i) r *= x;
  return r;
}

// Sum over k of w_k cos(theta/2)^{p_k} sin(theta/2)^{q_k}; `deriv` selects the
// theta-derivative of each monomial.
double d_sum(int j, int m1, int m2, double theta, bool deriv) {
  check_j(j);
  if (std::abs(m1) > j || std::abs(m2) > j) return 0.0;
  const auto& f = factorials().v;
  const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
  const double pref = std::sqrt(f[j + m1] * f[j - m1] * f[j + m2] * f[j - m2]);
  const int kmin = std::max(0, m2 - m1);
  const int kmax = std::min(j + m2, j - m1);
  double sum = 0.0;
  for (int k = kmin; k <= kmax; ++k) {
    const double w = ((k + m1 - m2) % 2 == 0 ? 1.0 : -1.0) /
                     (f[j + m2 - k] * f[k] * f[j - k - m1] * f[m1 - m2 + k]);
    const int p = 2 * j + m2 - m1 - 2 * k;  // cos power
    const int q = m1 - m2 + 2 * k;          // sin power
    if (!deriv) {
      sum += w * ipow(c, p) * ipow(s, q);
    } else {
      double t = 0.0;
      if (p > 0) t -= 0.5 * p * ipow(c, p - 1) * ipow(s, q + 1);
      if (q > 0) t += 0.5 * q * ipow(c, p + 1) * ipow(s, q - 1);
      sum += w * t;
    }
  }
  return pref * sum;
}

}  // namespace

double small_d(int j, int m1, int m2, double theta) { return d_sum(j, m1, m2, theta, false); }

double small_d_derivative(int j, int m1, int m2, double theta) { return d_sum(j, m1, m2, theta, true); }

cplx big_D(int j, int m1, int m2, double phi, double theta) {
  return std::polar(1.0, -m1 * phi) * small_d(j, m1, m2, theta);
}

AngularFactors angular_factors(int j) {
  if (j < 1) fail(ErrorCode::invalid_argument, "angular factors need j >= 1");
  check_j(j);
  return {std::sqrt(static_cast<double>(j) * (j + 1)), std::sqrt(static_cast<double>(j - 1) * (j + 2))};
}

std::array<double, 6> recurrence_residuals(int j, int m, double theta) {
  const auto [nu, a] = angular_factors(j);
  if (std::abs(m) > j) fail(ErrorCode::invalid_argument, "|m| must not exceed j");
  auto D = [&](int s) { return small_d(j, -m, s, theta); };
  auto dD = [&](int s) { return small_d_derivative(j, -m, s, theta); };
  const double st = std::sin(theta), ct = std::cos(theta);
  return {
      std::abs(dD(-1) - 0.5 * (a * D(-2) - nu * D(0))),
      std::abs((m - ct) / st * D(-1) - 0.5 * (a * D(-2) + nu * D(0))),
      std::abs(dD(0) - 0.5 * (nu * D(-1) - nu * D(1))),
      std::abs(m / st * D(0) - 0.5 * (nu * D(-1) + nu * D(1))),
      std::abs(dD(1) - 0.5 * (nu * D(0) - a * D(2))),
      std::abs((m + ct) / st * D(1) - 0.5 * (nu * D(0) + a * D(2))),
  };
}

FieldVector AngularAction::evaluate(int j, int m, double theta, double phi) const {
  FieldVector out;
  for (std::size_t k = 0; k < 4; ++k) out[k] = coeff[k] * big_D(j, -m, sigma[k], phi, theta);
  return out;
}

AngularAction angular_action(int j, int m, cplx f1, cplx f2, cplx f3) {
  if (std::abs(m) > j) fail(ErrorCode::invalid_argument, "|m| must not exceed j");
  const double k = angular_factors(j).nu / std::sqrt(2.0);
  AngularAction out;
  out.coeff = {k * (f1 + f3), -I * k * f2, I * k * (f1 - f3), I * k * f2};
  return out;
}

FieldVector angular_state(int j, int m, cplx f1, cplx f2, cplx f3, double theta, double phi) {
  FieldVector v;
  v[1] = f1 * big_D(j, -m, -1, phi, theta);
  v[2] = f2 * big_D(j, -m, 0, phi, theta);
  v[3] = f3 * big_D(j, -m, 1, phi, theta);
  return v;
}

FieldVector angular_operator_fd(int j, int m, cplx f1, cplx f2, cplx f3, double theta, double phi,
                                double h) {
  auto psi = [&](double th, double ph) { return angular_state(j, m, f1, f2, f3, th, ph); };
  auto d4 = [h](const FieldVector& m2, const FieldVector& m1, const FieldVector& p1,
                const FieldVector& p2) {
    FieldVector d;
    for (std::size_t k = 0; k < 4; ++k) d[k] = (m2[k] - 8.0 * m1[k] + 8.0 * p1[k] - p2[k]) / (12.0 * h);
    return d;
  };
  const FieldVector d_th = d4(psi(theta - 2 * h, phi), psi(theta - h, phi), psi(theta + h, phi),
                              psi(theta + 2 * h, phi));
  const FieldVector d_ph = d4(psi(theta, phi - 2 * h), psi(theta, phi - h), psi(theta, phi + h),
                              psi(theta, phi + 2 * h));
  const FieldVector inner = d_ph + std::cos(theta) * (generator(3, Basis::cyclic) * psi(theta, phi));
  return alpha(1, Basis::cyclic) * d_th + (1.0 / std::sin(theta)) * (alpha(2, Basis::cyclic) * inner);
}

}  // namespace cmx
