// SPDX-License-Identifier: Apache-2.0
#include "cmx/radial.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "cmx/errors.hpp"

namespace cmx {

namespace {

constexpr cplx I{0.0, 1.0};
const double kSqrt2 = std::sqrt(2.0);

using State = std::array<double, 4>;  // Re G, Im G, Re G', Im G'

}  // namespace

double RadialParams::nu() const { return std::sqrt(static_cast<double>(j) * (j + 1)); }

void RadialParams::validate() const {
  if (!(omega > 0.0) || !std::isfinite(omega))
    fail(ErrorCode::invalid_argument, "radial: omega must be positive");
  if (j < 1) fail(ErrorCode::invalid_argument, "radial: j must be >= 1");
}

double s3_frequency(int j, int n) {
  if (j < 1 || n < 0) fail(ErrorCode::invalid_argument, "s3_frequency: need j >= 1, n >= 0");
  return static_cast<double>(n + 1 + j);
}

bool is_quantized(int j, double omega) {
  const double n = omega - 1.0 - j;
  return n > -1e-12 && std::abs(n - std::round(n)) < 1e-12;
}

HypReduction hyp_reduction(const RadialParams& p, RadialBranch branch) {
  p.validate();
  const bool s3 = p.model.kind == SpaceKind::s3;
  const double a = branch.a == ExponentBranch::regular ? p.j + 1.0 : -static_cast<double>(p.j);
  const double sign = branch.b == PhaseBranch::minus ? -1.0 : 1.0;
  // b^2 = omega^2/4 (S3), b^2 = -omega^2/4 (H3)
  const cplx half = s3 ? cplx(0.5 * p.omega) : I * (0.5 * p.omega);
  const cplx b = sign * half;
  HypReduction r;
  r.a_exp = a;
  r.b_exp = b;
  r.hyp.alpha = a + b - half;
  r.hyp.beta = a + b + half;
  r.hyp.gamma = 2.0 * a;
  // Exact integers on the spectrum so the polynomial path is taken.
  if (s3 && branch.a == ExponentBranch::regular && branch.b == PhaseBranch::minus &&
      is_quantized(p.j, p.omega))
    r.hyp.alpha = -std::round(p.omega - 1.0 - p.j);
  return r;
}

cplx z_of_chi(const SpaceModel& model, double chi) {
  if (model.kind == SpaceKind::s3) return 1.0 - std::polar(1.0, -2.0 * chi);
  return -std::expm1(-2.0 * chi);
}

RadialValue hypergeometric_G(const RadialParams& p, double chi, RadialBranch branch,
                             const SeriesControl& ctl) {
  const HypReduction red = hyp_reduction(p, branch);
  const double a = red.a_exp.real();
  const cplx b = red.b_exp;
  const bool s3 = p.model.kind == SpaceKind::s3;

  // P = z^a (1-z)^b written without branch cuts along the chi-path, and
  // L = log P differentiated in chi.
  cplx P, dL;
  double d2L;
  cplx z, dz, d2z;
  if (s3) {
    const double s = std::sin(chi);
    P = std::pow(2.0 * s, a) * std::polar(1.0, a * (0.5 * std::numbers::pi - chi)) *
        std::exp(-2.0 * I * b * chi);
    dL = a * std::cos(chi) / s - I * a - 2.0 * I * b;
    d2L = -a / (s * s);
    const cplx one_minus_z = std::polar(1.0, -2.0 * chi);
    z = 1.0 - one_minus_z;
    dz = 2.0 * I * one_minus_z;
    d2z = 4.0 * one_minus_z;
  } else {
    const double e = std::exp(-2.0 * chi);
    z = -std::expm1(-2.0 * chi);
    P = std::pow(z.real(), a) * std::exp(-2.0 * b * chi);
    const double sh = std::sinh(chi);
    dL = a * (1.0 / std::tanh(chi) - 1.0) - 2.0 * b;
    d2L = -a / (sh * sh);
    dz = 2.0 * e;
    d2z = -4.0 * e;
  }

  const cplx g = hyp2f1(red.hyp, z, ctl);
  const cplx gz = hyp2f1_derivative(red.hyp, z, 1, ctl);
  const cplx gzz = hyp2f1_derivative(red.hyp, z, 2, ctl);
  const cplx g1 = gz * dz;
  const cplx g2 = gzz * dz * dz + gz * d2z;

  RadialValue v;
  v.G = P * g;
  v.dG = P * (dL * g + g1);
  v.d2G = P * ((d2L + dL * dL) * g + 2.0 * dL * g1 + g2);
  return v;
}

double series_chi_limit(const SpaceModel& model, double series_z_max) {
  if (model.kind == SpaceKind::s3) return std::numeric_limits<double>::infinity();
  return -0.5 * std::log1p(-series_z_max);
}

namespace {

void check_chi(const RadialParams& p, double chi) {
  const bool ok = p.model.kind == SpaceKind::s3
                      ? (chi > 0.0 && chi < std::numbers::pi && std::sin(chi) >= kCoordinateGuard)
                      : chi >= kCoordinateGuard;
  if (!ok || !std::isfinite(chi))
    fail(ErrorCode::domain, std::string("radial: chi = ") + std::to_string(chi) + " outside the " +
                                p.model.name() + " range");
}

void check_spectrum(const RadialParams& p) {
  if (p.model.kind == SpaceKind::s3 && !is_quantized(p.j, p.omega))
    fail(ErrorCode::not_quantized,
         "S3 closed form needs omega = n + 1 + j; omega = " + std::to_string(p.omega) +
             " with j = " + std::to_string(p.j) + " is not on the spectrum");
}

}  // namespace

RadialValue closed_form_G(const RadialParams& p, double chi, const ClosedFormOptions& opt) {
  p.validate();
  check_chi(p, chi);
  check_spectrum(p);
  const double limit = series_chi_limit(p.model, opt.series_z_max);
  if (chi <= limit) return hypergeometric_G(p, chi, opt.branch);
  const RadialValue start = hypergeometric_G(p, limit, opt.branch);
  const double target[] = {chi};
  return ode_oracle(p, limit, start, target, opt.ode).front();
}

RadialPoint assemble_first_order(const RadialParams& p, double chi, const RadialValue& g) {
  p.validate();
  check_chi(p, chi);
  const double w = p.omega, nu = p.nu();
  const double r = p.model.r(chi), dr = p.model.dr(chi);
  RadialPoint pt;
  pt.chi = chi;
  pt.g = g;
  pt.F2 = I * nu * g.G / (w * r);
  pt.F = -I * g.dG / w;
  pt.F1 = (pt.F + g.G) / kSqrt2;
  pt.F3 = (pt.F - g.G) / kSqrt2;
  const cplx dF2 = I * nu / w * (g.dG / r - g.G * dr / (r * r));
  const cplx dF = -I * g.d2G / w;
  const cplx dF1 = (dF + g.dG) / kSqrt2;
  const cplx dF3 = (dF - g.dG) / kSqrt2;
  pt.f1 = pt.F1 / r;
  pt.f2 = pt.F2 / r;
  pt.f3 = pt.F3 / r;
  pt.df1 = dF1 / r - pt.F1 * dr / (r * r);
  pt.df2 = dF2 / r - pt.F2 * dr / (r * r);
  pt.df3 = dF3 / r - pt.F3 * dr / (r * r);
  return pt;
}

double residual_second_order(const RadialParams& p, const RadialSampler& g, std::span<const double> grid) {
  p.validate();
  const double w2 = p.omega * p.omega, nu2 = p.nu() * p.nu();
  double worst = 0.0, scale = 0.0;
  for (double chi : grid) {
    const RadialValue v = g(chi);
    const double r = p.model.r(chi);
    worst = std::max(worst, std::abs(v.d2G + w2 * v.G - nu2 * v.G / (r * r)));
    scale = std::max(scale, std::abs(v.G));
  }
  return scale > 0.0 ? worst / scale : worst;
}

FirstOrderResidual residual_first_order(const RadialParams& p, const RadialSolution& sol) {
  p.validate();
  const double w = p.omega, nu = p.nu();
  FirstOrderResidual out;
  double scale = 0.0;
  for (const auto& pt : sol.points) {
    for (cplx f : {pt.f1, pt.f2, pt.f3}) scale = std::max(scale, w * std::abs(f));
    for (cplx f : {pt.df1, pt.df2, pt.df3}) scale = std::max(scale, std::abs(f));
  }
  if (scale == 0.0) scale = 1.0;
  for (const auto& pt : sol.points) {
    const double r = p.model.r(pt.chi), cot = p.model.cot_r(pt.chi);
    const double k = nu / (kSqrt2 * r);
    const std::array<cplx, 4> e{
        pt.df2 + 2.0 * cot * pt.f2 + k * (pt.f1 + pt.f3),
        -w * pt.f1 - I * pt.df1 - I * cot * pt.f1 - I * k * pt.f2,
        -w * pt.f2 + I * k * (pt.f1 - pt.f3),
        -w * pt.f3 + I * pt.df3 + I * cot * pt.f3 + I * k * pt.f2,
    };
    for (std::size_t i = 0; i < 4; ++i)
      out.per_equation[i] = std::max(out.per_equation[i], std::abs(e[i]) / scale);

    // (d/dchi + cot) omega F2 + omega nu/(sqrt2 r) (F1 + F3), with F2 and
    // F1 + F3 eliminated in favour of G through the other two relations.
    const cplx dF2 = I * nu / w * (pt.g.dG / r - pt.g.G * p.model.dr(pt.chi) / (r * r));
    const cplx F2 = I * nu * pt.g.G / (w * r);
    const cplx F1pF3 = kSqrt2 * (-I * pt.g.dG / w);
    const cplx id = w * (dF2 + cot * F2) + w * k * F1pF3;
    out.identity = std::max(out.identity, std::abs(id) / (scale * r));
  }
  out.max = *std::max_element(out.per_equation.begin(), out.per_equation.end());
  return out;
}

RadialSolution sample_radial(const RadialParams& p, std::span<const double> grid, const ClosedFormOptions& opt) {
  p.validate();
  check_spectrum(p);
  const double limit = series_chi_limit(p.model, opt.series_z_max);
  std::vector<RadialValue> values(grid.size());
  std::vector<double> beyond;
  std::vector<std::size_t> beyond_idx;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    check_chi(p, grid[i]);
    if (grid[i] <= limit) {
      values[i] = hypergeometric_G(p, grid[i], opt.branch);
    } else {
      beyond.push_back(grid[i]);
      beyond_idx.push_back(i);
    }
  }
  if (!beyond.empty()) {
    if (!std::is_sorted(beyond.begin(), beyond.end()))
      fail(ErrorCode::invalid_argument, "sample_radial: grid beyond the series range must be increasing");
    const auto cont = ode_oracle(p, limit, hypergeometric_G(p, limit, opt.branch), beyond, opt.ode);
    for (std::size_t k = 0; k < beyond.size(); ++k) values[beyond_idx[k]] = cont[k];
  }

  cplx norm = 1.0;
  double best = 0.0;
  for (const auto& v : values)
    if (std::abs(v.G) > best) {
      best = std::abs(v.G);
      norm = v.G;
    }
  if (best > 0.0)
    for (auto& v : values) {
      v.G /= norm;
      v.dG /= norm;
      v.d2G /= norm;
    }

  RadialSolution sol;
  sol.chi_grid.assign(grid.begin(), grid.end());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const RadialPoint pt = assemble_first_order(p, grid[i], values[i]);
    sol.points.push_back(pt);
    sol.G.push_back(pt.g.G);
    sol.F.push_back(pt.F);
    sol.F2.push_back(pt.F2);
    sol.f1.push_back(pt.f1);
    sol.f2.push_back(pt.f2);
    sol.f3.push_back(pt.f3);
  }
  sol.residual_2nd = residual_second_order(
      p, [&](double chi) {
        const auto it = std::find(sol.chi_grid.begin(), sol.chi_grid.end(), chi);
        return values[static_cast<std::size_t>(it - sol.chi_grid.begin())];
      },
      grid);
  sol.residual_1st = residual_first_order(p, sol).max;
  return sol;
}

std::vector<RadialValue> ode_oracle(const RadialParams& p, double chi0, RadialValue init,
                                    std::span<const double> samples, const OdeOptions& opt) {
  if (!(p.omega > 0.0)) fail(ErrorCode::invalid_argument, "ode_oracle: omega must be positive");
  if (p.j < 0) fail(ErrorCode::invalid_argument, "ode_oracle: j must be >= 0");
  check_chi(p, chi0);
  for (double c : samples) check_chi(p, c);
  if (samples.empty()) return {};
  const double dir = samples.front() >= chi0 ? 1.0 : -1.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double prev = i == 0 ? chi0 : samples[i - 1];
    if (dir * (samples[i] - prev) < 0.0)
      fail(ErrorCode::invalid_argument, "ode_oracle: sample points must be monotone away from chi0");
  }

  const double w2 = p.omega * p.omega, nu2 = p.nu() * p.nu();
  const SpaceModel model = p.model;
  auto rhs = [&](const State& y, State& dy, double chi) {
    const double r = model.r(chi);
    const double k = nu2 / (r * r) - w2;
    dy[0] = y[2];
    dy[1] = y[3];
    dy[2] = k * y[0];
    dy[3] = k * y[1];
  };

  namespace odeint = boost::numeric::odeint;
  auto stepper = odeint::make_controlled(opt.abs_tol, opt.rel_tol, odeint::runge_kutta_dopri5<State>());

  std::vector<double> times;
  times.reserve(samples.size() + 1);
  times.push_back(chi0);
  times.insert(times.end(), samples.begin(), samples.end());

  State y{init.G.real(), init.G.imag(), init.dG.real(), init.dG.imag()};
  std::vector<RadialValue> out;
  out.reserve(samples.size());
  bool started = false;  // the first call reports chi0 itself
  auto observer = [&](const State& s, double chi) {
    if (!started) {
      started = true;
      return;
    }
    if (out.size() == samples.size()) return;
    const double r = model.r(chi);
    const cplx G(s[0], s[1]);
    out.push_back({G, cplx(s[2], s[3]), (nu2 / (r * r) - w2) * G});
  };
  try {
    odeint::integrate_times(stepper, rhs, y, times.begin(), times.end(), dir * opt.initial_step, observer);
  } catch (const std::exception& e) {
    fail(ErrorCode::integration, std::string("ode_oracle: ") + e.what());
  }
  if (out.size() != samples.size())
    fail(ErrorCode::integration, "ode_oracle: integration stopped before the last sample");
  return out;
}

double regularity_mismatch(const RadialParams& p, double chi0, const OdeOptions& opt) {
  p.validate();
  if (p.model.kind != SpaceKind::s3)
    fail(ErrorCode::invalid_argument, "regularity_mismatch is defined on S3 only");
  const double mid = 0.5 * std::numbers::pi;
  const double target[] = {mid};
  // Near either pole |z| = 2 sin(chi) is small, so the series gives the locally
  // regular solution at both ends.
  const RadialValue left = ode_oracle(p, chi0, hypergeometric_G(p, chi0), target, opt).front();
  const double chi1 = std::numbers::pi - chi0;
  const RadialValue right = ode_oracle(p, chi1, hypergeometric_G(p, chi1), target, opt).front();
  const double w = p.omega;
  auto norm = [w](const RadialValue& v) { return std::hypot(std::abs(v.G), std::abs(v.dG) / w); };
  const cplx wr = left.G * right.dG - left.dG * right.G;
  return std::abs(wr) / (w * norm(left) * norm(right));
}

std::vector<double> linspace(double a, double b, int n) {
  if (n < 1) fail(ErrorCode::invalid_argument, "linspace: need at least one point");
  std::vector<double> v(static_cast<std::size_t>(n));
  if (n == 1) {
    v[0] = a;
    return v;
  }
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
  return v;
}

std::vector<double> guarded_grid(const SpaceModel& model, int n) {
  return model.kind == SpaceKind::s3 ? linspace(0.05, std::numbers::pi - 0.05, n) : linspace(0.05, 2.0, n);
}

}  // namespace cmx
