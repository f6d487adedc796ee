// SPDX-License-Identifier: Apache-2.0
#include "cmx/modes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cmx/errors.hpp"
#include "parallel.hpp"

namespace cmx {

namespace {

constexpr cplx I{0.0, 1.0};

struct OperatorMatrices {
  Matrix4C a1 = alpha(1, Basis::cyclic);
  Matrix4C a2 = alpha(2, Basis::cyclic);
  Matrix4C a3 = alpha(3, Basis::cyclic);
  Matrix4C s3 = generator(3, Basis::cyclic);
  Matrix4C block = alpha(1, Basis::cyclic) * generator(2, Basis::cyclic) -
                   alpha(2, Basis::cyclic) * generator(1, Basis::cyclic);
};

const OperatorMatrices& ops() {
  static const OperatorMatrices m;
  return m;
}

// Fourth-order central difference from samples at -2h, -h, +h, +2h.
FieldVector d4(const FieldVector& m2, const FieldVector& m1, const FieldVector& p1, const FieldVector& p2,
               double h) {
  FieldVector d;
  for (std::size_t k = 0; k < 4; ++k) d[k] = (m2[k] - 8.0 * m1[k] + 8.0 * p1[k] - p2[k]) / (12.0 * h);
  return d;
}

}  // namespace

ModeSpec ModeSpec::s3(int j, int m, int n, double rho) {
  ModeSpec s;
  s.model = SpaceModel(SpaceKind::s3, rho);
  s.j = j;
  s.m = m;
  s.n = n;
  s.validate();
  s.omega = s.profile_omega();
  return s;
}

ModeSpec ModeSpec::h3(int j, int m, double omega, double rho) {
  ModeSpec s;
  s.model = SpaceModel(SpaceKind::h3, rho);
  s.j = j;
  s.m = m;
  s.omega = omega;
  s.validate();
  return s;
}

double ModeSpec::profile_omega() const { return model.kind == SpaceKind::s3 ? s3_frequency(j, n) : omega; }
double ModeSpec::time_omega() const { return profile_omega() * detuning; }
double ModeSpec::physical_omega() const { return time_omega() / model.rho; }

void ModeSpec::validate() const {
  if (j < 1 || j > kMaxJ) fail(ErrorCode::invalid_argument, "mode: j must lie in [1, 30]");
  if (std::abs(m) > j) fail(ErrorCode::invalid_argument, "mode: |m| must not exceed j");
  if (model.kind == SpaceKind::s3 && n < 0) fail(ErrorCode::invalid_argument, "mode: n must be >= 0");
  if (model.kind == SpaceKind::h3 && (!(omega > 0.0) || !std::isfinite(omega)))
    fail(ErrorCode::invalid_argument, "mode: H3 frequency must be positive");
  if (!(detuning > 0.0)) fail(ErrorCode::invalid_argument, "mode: detuning must be positive");
}

SpectrumTable spectrum(int j_max, int n_max, double rho) {
  if (j_max < 1 || n_max < 0) fail(ErrorCode::invalid_argument, "spectrum: need j_max >= 1 and n_max >= 0");
  if (!(rho > 0.0)) fail(ErrorCode::invalid_argument, "spectrum: rho must be positive");
  SpectrumTable t;
  for (int j = 1; j <= j_max; ++j)
    for (int n = 0; n <= n_max; ++n) t.push_back({j, n, s3_frequency(j, n) / rho, 2 * j + 1});
  return t;
}

std::vector<int> admissible_m(int j) {
  std::vector<int> m;
  for (int k = -j; k <= j; ++k) m.push_back(k);
  return m;
}

Mode::Mode(const ModeSpec& spec, const ClosedFormOptions& opt) : spec_(spec), opt_(opt) {
  spec_.validate();
  profile_ = RadialParams{spec_.model, spec_.profile_omega(), spec_.j};
  assembly_ = RadialParams{spec_.model, spec_.time_omega(), spec_.j};
}

RadialPoint Mode::radial(double chi) const {
  return assemble_first_order(assembly_, chi, closed_form_G(profile_, chi, opt_));
}

FieldVector Mode::evaluate(const Coordinates& x) const {
  check_coordinates(spec_.model, x);
  const RadialPoint r = radial(x.chi);
  FieldVector v = angular_state(spec_.j, spec_.m, r.f1, r.f2, r.f3, x.theta, x.phi);
  return std::polar(1.0, -spec_.time_omega() * x.t) * v;
}

FieldVector Mode::apply_operator(const Coordinates& x) const {
  check_coordinates(spec_.model, x);
  const auto& M = ops();
  const RadialPoint r = radial(x.chi);
  const cplx phase = std::polar(1.0, -spec_.time_omega() * x.t);
  const FieldVector psi = phase * angular_state(spec_.j, spec_.m, r.f1, r.f2, r.f3, x.theta, x.phi);
  const FieldVector d_chi = phase * angular_state(spec_.j, spec_.m, r.df1, r.df2, r.df3, x.theta, x.phi);
  const FieldVector sigma =
      phase * angular_action(spec_.j, spec_.m, r.f1, r.f2, r.f3).evaluate(spec_.j, spec_.m, x.theta, x.phi);
  // -i d_t Psi' = -omega Psi'
  FieldVector out = cplx(-spec_.time_omega()) * psi;
  out += M.a3 * d_chi;
  out += spec_.model.cot_r(x.chi) * (M.block * psi);
  out += (1.0 / spec_.model.r(x.chi)) * sigma;
  return out;
}

FieldVector evaluate_mode(const ModeSpec& spec, const Coordinates& x) { return Mode(spec).evaluate(x); }

ModeGrid ModeGrid::defaults(const SpaceModel& model, int n) {
  if (n < 1) fail(ErrorCode::invalid_argument, "grid size must be >= 1");
  ModeGrid g;
  g.chi = model.kind == SpaceKind::s3 ? linspace(0.05, std::numbers::pi - 0.05, n) : linspace(0.1, 1.5, n);
  g.theta = linspace(0.1, std::numbers::pi - 0.1, n);
  g.phi.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) g.phi[static_cast<std::size_t>(i)] = 2.0 * std::numbers::pi * i / n;
  return g;
}

Matrix4C radial_coupling_block() {
  Matrix4C b;
  b(0, 2) = 2.0;
  b(1, 1) = -I;
  b(3, 3) = I;
  return b;
}

OperatorResidual curved_operator_residual(const ModeSpec& spec, const ModeGrid& grid, const FdSteps& steps,
                                          bool with_fd) {
  const Mode mode(spec);
  const auto& M = ops();
  const int j = spec.j, m = spec.m;
  const double w = spec.time_omega();
  const std::size_t nc = grid.chi.size(), nt = grid.theta.size(), np = grid.phi.size();
  if (nc == 0 || nt == 0 || np == 0) fail(ErrorCode::invalid_argument, "operator residual: empty grid");
  for (double chi : grid.chi) check_coordinates(spec.model, {grid.t, chi, grid.theta[0], grid.phi[0]});
  for (double th : grid.theta) check_coordinates(spec.model, {grid.t, grid.chi[0], th, grid.phi[0]});

  // Factor tables at the grid nodes and their stencil neighbours (offset k = -2..2).
  struct RadialRow {
    std::array<std::array<cplx, 3>, 5> f;  // f1, f2, f3 at chi + k h
    RadialPoint centre;
  };
  struct AngularRow {
    std::array<std::array<double, 3>, 5> d;  // d^j_{-m, sigma}(theta + k h), sigma = -1, 0, 1
  };
  std::vector<RadialRow> rad(nc);
  std::vector<AngularRow> ang(nt);
  detail::parallel_for(nc, [&](std::size_t i) {
    rad[i].centre = mode.radial(grid.chi[i]);
    if (!with_fd) return;
    for (int k = -2; k <= 2; ++k) {
      const RadialPoint p = mode.radial(grid.chi[i] + k * steps.chi);
      rad[i].f[static_cast<std::size_t>(k + 2)] = {p.f1, p.f2, p.f3};
    }
  });
  for (std::size_t i = 0; i < nt; ++i)
    for (int k = -2; k <= 2; ++k)
      for (int s = -1; s <= 1; ++s)
        ang[i].d[static_cast<std::size_t>(k + 2)][static_cast<std::size_t>(s + 1)] =
            small_d(j, -m, s, grid.theta[i] + k * steps.angle);

  // Psi' at (t + kt h, chi_i + kc h, theta_a + ka h, phi_b + kp h); one offset nonzero at a time.
  auto psi = [&](std::size_t i, std::size_t a, std::size_t b, int kt, int kc, int ka, int kp) {
    const double t = grid.t + kt * steps.t;
    const double phi = grid.phi[b] + kp * steps.angle;
    const cplx phase = std::polar(1.0, -w * t) * std::polar(1.0, m * phi);  // e^{-i w t} e^{i m phi}
    const auto& f = rad[i].f[static_cast<std::size_t>(kc + 2)];
    const auto& d = ang[a].d[static_cast<std::size_t>(ka + 2)];
    FieldVector v;
    for (std::size_t s = 0; s < 3; ++s) v[s + 1] = phase * f[s] * d[s];
    return v;
  };

  std::vector<double> worst_an(nc, 0.0), worst_fd(nc, 0.0), worst_c0(nc, 0.0), max_psi(nc, 0.0);
  detail::parallel_for(nc, [&](std::size_t i) {
    const double chi = grid.chi[i];
    const double r = spec.model.r(chi), cot = spec.model.cot_r(chi);
    const RadialPoint& rp = rad[i].centre;
    const AngularAction act = angular_action(j, m, rp.f1, rp.f2, rp.f3);
    const cplx tphase = std::polar(1.0, -w * grid.t);
    for (std::size_t a = 0; a < nt; ++a) {
      const double th = grid.theta[a];
      for (std::size_t b = 0; b < np; ++b) {
        const double ph = grid.phi[b];
        const FieldVector p0 = tphase * angular_state(j, m, rp.f1, rp.f2, rp.f3, th, ph);
        max_psi[i] = std::max(max_psi[i], p0.max_abs());

        FieldVector an = cplx(-w) * p0;
        an += M.a3 * (tphase * angular_state(j, m, rp.df1, rp.df2, rp.df3, th, ph));
        an += cot * (M.block * p0);
        an += (1.0 / r) * (tphase * act.evaluate(j, m, th, ph));
        worst_an[i] = std::max(worst_an[i], an.max_abs());
        worst_c0[i] = std::max(worst_c0[i], std::abs(an[0]));

        if (!with_fd) continue;
        const FieldVector c = psi(i, a, b, 0, 0, 0, 0);
        const FieldVector dt = d4(psi(i, a, b, -2, 0, 0, 0), psi(i, a, b, -1, 0, 0, 0), psi(i, a, b, 1, 0, 0, 0),
                                  psi(i, a, b, 2, 0, 0, 0), steps.t);
        const FieldVector dc = d4(psi(i, a, b, 0, -2, 0, 0), psi(i, a, b, 0, -1, 0, 0), psi(i, a, b, 0, 1, 0, 0),
                                  psi(i, a, b, 0, 2, 0, 0), steps.chi);
        const FieldVector dth = d4(psi(i, a, b, 0, 0, -2, 0), psi(i, a, b, 0, 0, -1, 0),
                                   psi(i, a, b, 0, 0, 1, 0), psi(i, a, b, 0, 0, 2, 0), steps.angle);
        const FieldVector dph = d4(psi(i, a, b, 0, 0, 0, -2), psi(i, a, b, 0, 0, 0, -1),
                                   psi(i, a, b, 0, 0, 0, 1), psi(i, a, b, 0, 0, 0, 2), steps.angle);
        const FieldVector sigma =
            M.a1 * dth + (1.0 / std::sin(th)) * (M.a2 * (dph + std::cos(th) * (M.s3 * c)));
        FieldVector fd = -I * dt;
        fd += M.a3 * dc;
        fd += cot * (M.block * c);
        fd += (1.0 / r) * sigma;
        worst_fd[i] = std::max(worst_fd[i], fd.max_abs());
      }
    }
  });

  OperatorResidual out;
  out.max_psi = *std::max_element(max_psi.begin(), max_psi.end());
  const double scale = out.max_psi > 0.0 ? out.max_psi : 1.0;
  out.analytic = *std::max_element(worst_an.begin(), worst_an.end()) / scale;
  out.fd = with_fd ? *std::max_element(worst_fd.begin(), worst_fd.end()) / scale : 0.0;
  out.component0 = *std::max_element(worst_c0.begin(), worst_c0.end()) / scale;
  out.block_identity = max_abs_diff(M.block, radial_coupling_block());
  return out;
}

PhysicalFields to_physical_fields(const FieldVector& psi_cyclic, double tol) {
  if (std::abs(psi_cyclic[0]) > tol * std::max(1.0, psi_cyclic.max_abs()))
    fail(ErrorCode::constraint, "field vector has a nonzero auxiliary component");
  const FieldVector cart = to_cartesian(psi_cyclic);
  PhysicalFields f;
  for (std::size_t k = 0; k < 3; ++k) {
    f.E[k] = cart[k + 1].real();
    f.cB[k] = cart[k + 1].imag();
  }
  return f;
}

std::vector<GridRow> sample_mode(const ModeSpec& spec, const ModeGrid& grid) {
  const Mode mode(spec);
  const std::size_t nc = grid.chi.size(), nt = grid.theta.size(), np = grid.phi.size();
  std::vector<GridRow> rows(grid.size());
  std::vector<double> scale(nc, 0.0);
  detail::parallel_for(nc, [&](std::size_t i) {
    for (std::size_t a = 0; a < nt; ++a)
      for (std::size_t b = 0; b < np; ++b) {
        GridRow& row = rows[(i * nt + a) * np + b];
        row.x = {grid.t, grid.chi[i], grid.theta[a], grid.phi[b]};
        row.psi = mode.evaluate(row.x);
        row.fields = to_physical_fields(row.psi);
        row.residual = mode.apply_operator(row.x).max_abs();
        scale[i] = std::max(scale[i], row.psi.max_abs());
      }
  });
  const double s = std::max(*std::max_element(scale.begin(), scale.end()), 1e-300);
  for (auto& row : rows) row.residual /= s;
  return rows;
}

}  // namespace cmx
