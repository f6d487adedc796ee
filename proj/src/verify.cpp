// SPDX-License-Identifier: Apache-2.0
#include "cmx/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>

#include <boost/math/quadrature/gauss.hpp>

#include "cmx/errors.hpp"
#include "cmx/flat_check.hpp"
#include "cmx/modes.hpp"
#include "cmx/radial.hpp"
#include "cmx/wigner.hpp"

namespace cmx {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cplx I{0.0, 1.0};

std::string fmt(const char* format, auto... args) {
  char buf[160];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

template <class Suite>
SuiteReport timed(const char* scope, Suite&& body) {
  const auto start = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.scope = scope;
  body(rep);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

double max_abs_diff(const Real4x4x4& a, const Real4x4x4& b) {
  double m = 0.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) m = std::max(m, std::abs(a[i][j][k] - b[i][j][k]));
  return m;
}

Coordinates random_point(const SpaceModel& model, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> chi_s3(0.1, kPi - 0.1), chi_h3(0.1, 3.0), th(0.1, kPi - 0.1),
      ph(0.0, 2.0 * kPi), t(-1.0, 1.0);
  Coordinates x;
  x.t = t(rng);
  x.chi = model.kind == SpaceKind::s3 ? chi_s3(rng) : chi_h3(rng);
  x.theta = th(rng);
  x.phi = ph(rng);
  return x;
}

// Sixth-order central difference.
cplx derivative6(const std::function<cplx(double)>& f, double x, double h) {
  return (-f(x - 3 * h) + 9.0 * f(x - 2 * h) - 45.0 * f(x - h) + 45.0 * f(x + h) - 9.0 * f(x + 2 * h) +
          f(x + 3 * h)) /
         (60.0 * h);
}

double relative_max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double diff = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff = std::max(diff, std::abs(a[i] - b[i]));
    scale = std::max(scale, std::abs(b[i]));
  }
  return scale > 0.0 ? diff / scale : diff;
}

std::vector<cplx> G_values(const std::vector<RadialValue>& v) {
  std::vector<cplx> out;
  for (const auto& x : v) out.push_back(x.G);
  return out;
}

// ---- radial cases ----

void variable_change_checks(SuiteReport& rep, const Tolerances& tol) {
  for (SpaceKind kind : {SpaceKind::s3, SpaceKind::h3}) {
    const SpaceModel model(kind);
    const bool s3 = kind == SpaceKind::s3;
    double d_err = 0.0, cot_err = 0.0, inv_err = 0.0;
    for (double chi : linspace(0.1, s3 ? kPi - 0.1 : 3.0, 41)) {
      const cplx z = z_of_chi(model, chi);
      const cplx dz = derivative6([&](double c) { return z_of_chi(model, c); }, chi, 1e-3);
      const cplx kappa = s3 ? 2.0 * I : cplx(2.0);
      d_err = std::max(d_err, std::abs(dz - kappa * (1.0 - z)));
      const cplx cot = s3 ? I * (2.0 - z) / z : (2.0 - z) / z;
      cot_err = std::max(cot_err, std::abs(cot - model.cot_r(chi)));
      const cplx inv = (s3 ? -4.0 : 4.0) * (1.0 - z) / (z * z);
      const double r = model.r(chi);
      inv_err = std::max(inv_err, std::abs(inv - 1.0 / (r * r)) * r * r);
    }
    const char* name = model.name();
    rep.require_below(fmt("%s: dz/dchi = kappa (1 - z)", name), d_err, tol.variable_change);
    rep.require_below(fmt("%s: r'/r in terms of z", name), cot_err, tol.variable_change);
    rep.require_below(fmt("%s: 1/r^2 in terms of z (relative)", name), inv_err, tol.variable_change);
  }
}

void exponent_checks(SuiteReport& rep, const RadialParams& p, const Tolerances& tol) {
  const HypReduction red = hyp_reduction(p);
  const double nu2 = p.nu() * p.nu();
  const cplx a = red.a_exp, b = red.b_exp;
  const double sign = p.model.kind == SpaceKind::s3 ? -1.0 : 1.0;
  const double err = std::max(std::abs(a * (a - 1.0) - nu2), std::abs(b * b + sign * p.omega * p.omega / 4.0));
  rep.require_below(fmt("%s j=%d omega=%g: exponent conditions", p.model.name(), p.j, p.omega), err,
                    tol.variable_change * std::max(1.0, nu2));
}

void s3_case(SuiteReport& rep, int j, double omega, const Tolerances& tol) {
  const RadialParams p{SpaceModel(SpaceKind::s3), omega, j};
  const std::string tag = fmt("s3 j=%d omega=%g", j, omega);
  const double n_real = omega - 1.0 - j;
  const double spectral_gap = n_real < 0 ? 1.0 - n_real : std::abs(n_real - std::round(n_real));
  rep.require_below(tag + ": omega = n + 1 + j (quantization)", spectral_gap, 1e-12);
  rep.require_below(tag + ": two-endpoint regularity mismatch", regularity_mismatch(p), tol.regularity);
  if (!is_quantized(j, omega)) return;

  exponent_checks(rep, p, tol);
  const auto grid = guarded_grid(p.model, 121);
  const RadialSolution sol = sample_radial(p, grid);
  rep.require_below(tag + ": second-order residual", sol.residual_2nd, tol.radial);
  const FirstOrderResidual fo = residual_first_order(p, sol);
  rep.require_below(tag + ": first-order residual", fo.max, tol.radial);
  rep.require_below(tag + ": first equation reduces to identity", fo.identity, tol.radial);

  const auto oracle_grid = linspace(0.1, kPi - 0.1, 61);
  std::vector<RadialValue> closed;
  for (double c : oracle_grid) closed.push_back(closed_form_G(p, c));
  const std::span<const double> rest(oracle_grid.data() + 1, oracle_grid.size() - 1);
  auto rk = ode_oracle(p, oracle_grid.front(), closed.front(), rest);
  rk.insert(rk.begin(), closed.front());
  rep.require_below(tag + ": closed form vs RK oracle", relative_max_diff(G_values(rk), G_values(closed)),
                    tol.oracle_s3);

  // Endpoint behaviour of the closed form: G ~ r^{j+1} at both poles.
  double power = 0.0;
  for (double eps : {1e-3, -1e-3}) {
    const double base = eps > 0 ? 0.0 : kPi;
    const double ratio = std::abs(closed_form_G(p, base + 2 * eps).G) / std::abs(closed_form_G(p, base + eps).G);
    power = std::max(power, std::abs(std::log2(ratio) - (j + 1)));
  }
  rep.require_below(tag + ": G ~ r^(j+1) at chi -> 0 and chi -> pi (exponent error)", power, 1e-3);
}

void h3_case(SuiteReport& rep, int j, double omega, const Tolerances& tol) {
  const RadialParams p{SpaceModel(SpaceKind::h3), omega, j};
  const std::string tag = fmt("h3 j=%d omega=%g", j, omega);
  exponent_checks(rep, p, tol);
  const auto grid = guarded_grid(p.model, 121);
  const RadialSolution sol = sample_radial(p, grid);
  rep.require_below(tag + ": second-order residual", sol.residual_2nd, tol.radial);
  const FirstOrderResidual fo = residual_first_order(p, sol);
  rep.require_below(tag + ": first-order residual", fo.max, tol.radial);
  rep.require_below(tag + ": first equation reduces to identity", fo.identity, tol.radial);

  std::vector<RadialValue> closed;
  for (double c : grid) closed.push_back(closed_form_G(p, c));
  const std::span<const double> rest(grid.data() + 1, grid.size() - 1);
  auto rk = ode_oracle(p, grid.front(), hypergeometric_G(p, grid.front()), rest);
  rk.insert(rk.begin(), closed.front());
  rep.require_below(tag + ": closed form vs RK oracle on [0.05, 2]",
                    relative_max_diff(G_values(rk), G_values(closed)), tol.oracle_h3);

  ClosedFormOptions plus;
  plus.branch.b = PhaseBranch::plus;
  std::vector<cplx> gp;
  double im = 0.0, scale = 0.0;
  for (double c : grid) {
    gp.push_back(closed_form_G(p, c, plus).G);
    const cplx g = closed_form_G(p, c).G;
    im = std::max(im, std::abs(g.imag()));
    scale = std::max(scale, std::abs(g));
  }
  rep.require_below(tag + ": b = +i omega/2 and -i omega/2 give the same G", relative_max_diff(gp, G_values(closed)),
                    tol.radial);
  rep.require_below(tag + ": G is real", im / scale, tol.radial);

  // Continuation past the series range: two different switch points agree.
  ClosedFormOptions early;
  early.series_z_max = 0.9;
  std::vector<cplx> a, b;
  for (double c : {1.5, 2.0, 3.0, 5.0}) {
    a.push_back(closed_form_G(p, c).G);
    b.push_back(closed_form_G(p, c, early).G);
  }
  rep.require_below(tag + ": ODE continuation up to chi = 5", relative_max_diff(b, a), tol.oracle_h3);
}

void radial_negative_controls(SuiteReport& rep, const Tolerances& tol) {
  for (int j = 1; j <= 4; ++j) {
    const double omega = s3_frequency(j, 0) + 0.5;
    const RadialParams p{SpaceModel(SpaceKind::s3), omega, j};
    rep.require_above(fmt("s3 j=%d omega=%g (off spectrum): regularity mismatch", j, omega), regularity_mismatch(p),
                      1e3 * tol.regularity);
  }
  const RadialParams p{SpaceModel(SpaceKind::s3), s3_frequency(2, 1), 2};
  const auto grid = guarded_grid(p.model, 121);
  const double perturbed = residual_second_order(
      p,
      [&](double chi) {
        const RadialValue v = closed_form_G(p, chi);
        const double k = 1.0 + 0.01 * chi;
        return RadialValue{k * v.G, 0.01 * v.G + k * v.dG, 0.02 * v.dG + k * v.d2G};
      },
      grid);
  rep.require_above("s3 j=2 n=1: G*(1 + 0.01 chi) second-order residual", perturbed, 1e-3);

  ClosedFormOptions singular;
  singular.branch = {ExponentBranch::singular, PhaseBranch::plus};
  const RadialParams q{SpaceModel(SpaceKind::s3), s3_frequency(2, 0), 2};
  const double blow = std::abs(closed_form_G(q, 0.01, singular).G) / std::abs(closed_form_G(q, 0.1, singular).G);
  rep.require_above("s3 j=2 a=-j branch: |G(0.01)| / |G(0.1)|", blow, 10.0);
  const double sing_res = residual_second_order(
      q, [&](double chi) { return closed_form_G(q, chi, singular); }, linspace(0.3, kPi - 0.3, 61));
  rep.require_below("s3 j=2 a=-j branch still solves the radial equation", sing_res, tol.radial);
}

// ---- modes ----

struct ModeAggregate {
  double analytic = 0.0, fd = 0.0, c0 = 0.0, block = 0.0;
  void add(const OperatorResidual& r) {
    analytic = std::max(analytic, r.analytic);
    fd = std::max(fd, r.fd);
    c0 = std::max(c0, r.component0);
    block = std::max(block, r.block_identity);
  }
};

void report_mode(SuiteReport& rep, const std::string& tag, const ModeAggregate& agg, const Tolerances& tol) {
  rep.require_below(tag + ": curved operator, analytic path", agg.analytic, tol.operator_analytic);
  rep.require_below(tag + ": curved operator, finite differences", agg.fd, tol.operator_fd);
  rep.require_below(tag + ": auxiliary slot of operator output", agg.c0, tol.operator_analytic);
  rep.require_below(tag + ": coupling block identity", agg.block, tol.algebra);
}

}  // namespace

void SuiteReport::require_below(std::string name, double observed, double tolerance) {
  checks.push_back({std::move(name), observed, tolerance, true, std::isfinite(observed) && observed <= tolerance});
}

void SuiteReport::require_above(std::string name, double observed, double threshold) {
  checks.push_back({std::move(name), observed, threshold, false, std::isfinite(observed) && observed >= threshold});
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<std::string> verify_scopes() { return {"algebra", "geometry", "wigner", "radial", "modes", "flat", "all"}; }

SuiteReport verify_algebra_suite(const VerifyConfig& cfg) {
  return timed("algebra", [&](SuiteReport& rep) {
    for (const auto& c : verify_algebra().checks) rep.require_below(c.name, c.residual, cfg.tol.algebra);
    const Matrix4C block = alpha(1, Basis::cyclic) * generator(2, Basis::cyclic) -
                           alpha(2, Basis::cyclic) * generator(1, Basis::cyclic);
    rep.require_below("alpha'1 s'2 - alpha'2 s'1 = tabulated block", max_abs_diff(block, radial_coupling_block()),
                      cfg.tol.algebra);
    const Matrix4C s3 = generator(3, Basis::cyclic);
    double off = 0.0;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        if (r != c) off = std::max(off, std::abs(s3(r, c)));
    rep.require_below("s'3 is diagonal", off, cfg.tol.algebra);
    FieldVector v{{0.0, cplx(0.3, -1.2), cplx(2.0, 0.5), cplx(-0.7, 0.1)}};
    rep.require_below("cyclic round trip of a field vector", (to_cartesian(to_cyclic(v)) - v).max_abs(),
                      cfg.tol.algebra * 10.0);
  });
}

SuiteReport verify_geometry_suite(const VerifyConfig& cfg) {
  return timed("geometry", [&](SuiteReport& rep) {
    std::mt19937_64 rng(cfg.seed);
    for (SpaceKind kind : {SpaceKind::s3, SpaceKind::h3}) {
      const SpaceModel model(kind);
      double chr = 0.0, ric = 0.0, ortho = 0.0, compat = 0.0, anti = 0.0, conn = 0.0, cov = 0.0;
      for (int k = 0; k < 100; ++k) {
        const Coordinates x = random_point(model, rng);
        chr = std::max(chr, max_abs_diff(christoffel(model, x), christoffel_fd(model, x)));
        const Real4x4x4 g = ricci_rotation(model, x);
        ric = std::max(ric, max_abs_diff(g, ricci_rotation_fd(model, x)));
        for (int a = 0; a < 4; ++a)
          for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) anti = std::max(anti, std::abs(g[a][b][c] + g[b][a][c]));
        ortho = std::max(ortho, tetrad_orthonormality_residual(model, x));
        compat = std::max(compat, metric_compatibility_residual(model, x));

        // alpha^rho A_rho against the connection term of the separated operator.
        const auto A = connection(model, x);
        const auto al = alpha_curved(model, x);
        Matrix4C lhs;
        for (int mu = 0; mu < 4; ++mu) lhs += al[mu] * A[mu];
        const double r = model.r(x.chi), cot = model.cot_r(x.chi);
        const Matrix4C rhs = cot * (alpha(1) * lorentz_generator(3, 1) + alpha(2) * lorentz_generator(3, 2)) +
                             (std::cos(x.theta) / (r * std::sin(x.theta))) * (alpha(2) * lorentz_generator(1, 2));
        conn = std::max(conn, max_abs_diff(lhs, rhs));
        const auto Ac = connection(model, x, Basis::cyclic);
        for (int mu = 0; mu < 4; ++mu) cov = std::max(cov, max_abs_diff(Ac[mu], to_cyclic(A[mu])));
      }
      const char* name = model.name();
      rep.require_below(fmt("%s: Christoffel closed form vs FD (100 points)", name), chr, cfg.tol.geometry);
      rep.require_below(fmt("%s: Ricci rotation closed form vs definition (100 points)", name), ric, cfg.tol.geometry);
      rep.require_below(fmt("%s: Ricci rotation antisymmetry", name), anti, 0.0);
      rep.require_below(fmt("%s: tetrad orthonormality", name), ortho, cfg.tol.tetrad);
      rep.require_below(fmt("%s: metric compatibility", name), compat, cfg.tol.metric_compatibility);
      rep.require_below(fmt("%s: alpha^rho A_rho = radial + angular connection terms", name), conn, 1e-12);
      rep.require_below(fmt("%s: cyclic connection = U4 A U4^-1", name), cov, 1e-14);
    }
  });
}

SuiteReport verify_wigner_suite(const VerifyConfig& cfg) {
  return timed("wigner", [&](SuiteReport& rep) {
    const auto thetas = linspace(0.1, kPi - 0.1, 50);
    double rec = 0.0, fd = 0.0;
    for (int j = 1; j <= 8; ++j)
      for (int m = -j; m <= j; ++m)
        for (double th : thetas) {
          for (double r : recurrence_residuals(j, m, th)) rec = std::max(rec, r);
          for (int s = -2; s <= 2; ++s) {
            const double h = 1e-5;
            const double num = (small_d(j, -m, s, th + h) - small_d(j, -m, s, th - h)) / (2 * h);
            fd = std::max(fd, std::abs(num - small_d_derivative(j, -m, s, th)));
          }
        }
    rep.require_below("six recurrences, j <= 8, |m| <= j, 50 theta points", rec, cfg.tol.wigner);
    rep.require_below("analytic d_theta vs central difference", fd, cfg.tol.wigner_fd);

    double ortho = 0.0;
    for (int m = -2; m <= 2; ++m)
      for (int s = -1; s <= 1; ++s)
        for (int j = std::max({1, std::abs(m), std::abs(s)}); j <= 6; ++j)
          for (int jp = j; jp <= 6; ++jp) {
            const double v = boost::math::quadrature::gauss<double, 40>::integrate(
                [&](double th) { return small_d(j, m, s, th) * small_d(jp, m, s, th) * std::sin(th); }, 0.0, kPi);
            const double expect = j == jp ? 2.0 / (2 * j + 1) : 0.0;
            ortho = std::max(ortho, std::abs(v - expect));
          }
    rep.require_below("orthogonality by Gauss-Legendre quadrature", ortho, cfg.tol.quadrature);

    double endpoint = 0.0;
    for (int j = 0; j <= 6; ++j)
      for (int m = -j; m <= j; ++m) endpoint = std::max(endpoint, std::abs(small_d(j, m, m, 0.0) - 1.0));
    rep.require_below("d^j_mm(0) = 1", endpoint, 1e-14);

    std::mt19937_64 rng(cfg.seed + 1);
    std::uniform_real_distribution<double> u(-1.0, 1.0), th(0.2, kPi - 0.2), ph(0.0, 2 * kPi);
    double act = 0.0;
    for (int j = 1; j <= 5; ++j)
      for (int m = -j; m <= j; ++m)
        for (int trial = 0; trial < 4; ++trial) {
          const cplx f1(u(rng), u(rng)), f2(u(rng), u(rng)), f3(u(rng), u(rng));
          const double t = th(rng), p = ph(rng);
          const FieldVector exact = angular_action(j, m, f1, f2, f3).evaluate(j, m, t, p);
          const FieldVector num = angular_operator_fd(j, m, f1, f2, f3, t, p);
          act = std::max(act, (exact - num).max_abs());
        }
    rep.require_below("angular action formula vs FD operator, j <= 5", act, cfg.tol.wigner_fd);
  });
}

SuiteReport verify_radial_suite(const VerifyConfig& cfg) {
  return timed("radial", [&](SuiteReport& rep) {
    const Tolerances& tol = cfg.tol;
    const bool targeted = cfg.j || cfg.n || cfg.omega;
    if (targeted) {
      const SpaceKind kind = cfg.model.value_or(SpaceKind::s3);
      const int j = cfg.j.value_or(1);
      if (kind == SpaceKind::s3) {
        const double omega = cfg.omega ? *cfg.omega : s3_frequency(j, cfg.n.value_or(0));
        s3_case(rep, j, omega, tol);
      } else {
        if (!cfg.omega) fail(ErrorCode::invalid_argument, "verify radial on h3 needs --omega");
        h3_case(rep, j, *cfg.omega, tol);
      }
      return;
    }
    variable_change_checks(rep, tol);
    if (!cfg.model || *cfg.model == SpaceKind::s3)
      for (int j = 1; j <= 4; ++j)
        for (int n = 0; n <= 3; ++n) s3_case(rep, j, s3_frequency(j, n), tol);
    if (!cfg.model || *cfg.model == SpaceKind::h3)
      for (int j = 1; j <= 4; ++j)
        for (double omega : {0.5, 1.3, 2.7}) h3_case(rep, j, omega, tol);
    if (!cfg.model || *cfg.model == SpaceKind::s3) radial_negative_controls(rep, tol);
  });
}

SuiteReport verify_modes_suite(const VerifyConfig& cfg) {
  return timed("modes", [&](SuiteReport& rep) {
    const Tolerances& tol = cfg.tol;
    auto ms = [&](int j) { return cfg.m ? std::vector<int>{*cfg.m} : admissible_m(j); };
    auto run_s3 = [&](int j, int n) {
      ModeAggregate agg;
      const ModeGrid grid = ModeGrid::defaults(SpaceModel(SpaceKind::s3), cfg.grid);
      for (int m : ms(j)) agg.add(curved_operator_residual(ModeSpec::s3(j, m, n), grid));
      report_mode(rep, fmt("s3 j=%d n=%d omega=%g (all m)", j, n, s3_frequency(j, n)), agg, tol);
      ModeSpec detuned = ModeSpec::s3(j, cfg.m.value_or(0), n);
      detuned.detuning = 1.05;
      const OperatorResidual d = curved_operator_residual(detuned, grid);
      rep.require_above(fmt("s3 j=%d n=%d detuned 5%%: operator residual", j, n), std::min(d.analytic, d.fd),
                        tol.detuning_margin * tol.operator_fd);
    };
    auto run_h3 = [&](int j, double omega) {
      ModeAggregate agg;
      const ModeGrid grid = ModeGrid::defaults(SpaceModel(SpaceKind::h3), cfg.grid);
      for (int m : ms(j)) agg.add(curved_operator_residual(ModeSpec::h3(j, m, omega), grid));
      report_mode(rep, fmt("h3 j=%d omega=%g (all m)", j, omega), agg, tol);
    };

    if (cfg.j || cfg.n || cfg.omega) {
      const int j = cfg.j.value_or(1);
      if (cfg.model.value_or(SpaceKind::s3) == SpaceKind::s3) {
        if (cfg.omega && !is_quantized(j, *cfg.omega))
          rep.require_below(fmt("s3 j=%d omega=%g: omega on the spectrum", j, *cfg.omega), 1.0, 1e-12);
        else
          run_s3(j, cfg.omega ? static_cast<int>(std::lround(*cfg.omega - 1.0 - j)) : cfg.n.value_or(0));
      } else {
        if (!cfg.omega) fail(ErrorCode::invalid_argument, "verify modes on h3 needs --omega");
        run_h3(j, *cfg.omega);
      }
      return;
    }

    if (!cfg.model || *cfg.model == SpaceKind::s3)
      for (int j = 1; j <= 4; ++j)
        for (int n = 0; n <= 3; ++n) run_s3(j, n);
    if (!cfg.model || *cfg.model == SpaceKind::h3)
      for (int j = 1; j <= 4; ++j)
        for (double omega : {0.5, 1.3, 2.7}) run_h3(j, omega);

    // Field conversion and spectrum bookkeeping.
    const Mode mode(ModeSpec::s3(2, 1, 1));
    double roundtrip = 0.0;
    for (double chi : {0.4, 1.3, 2.5}) {
      const FieldVector psi = mode.evaluate({0.2, chi, 0.9, 1.1});
      const PhysicalFields f = to_physical_fields(psi);
      FieldVector cart;
      for (int k = 0; k < 3; ++k) cart[k + 1] = cplx(f.E[k], f.cB[k]);
      roundtrip = std::max(roundtrip, (to_cyclic(cart) - psi).max_abs() / psi.max_abs());
    }
    rep.require_below("E, cB round trip through the cyclic basis", roundtrip, 1e-14);
    bool degeneracy = true;
    for (const auto& row : spectrum(4, 3))
      degeneracy = degeneracy && row.degeneracy == static_cast<int>(admissible_m(row.j).size());
    rep.require_below("spectrum rows carry 2j + 1 admissible m", degeneracy ? 0.0 : 1.0, 0.0);
  });
}

SuiteReport verify_flat_suite(const VerifyConfig& cfg) {
  return timed("flat", [&](SuiteReport& rep) {
    std::mt19937_64 rng(cfg.seed + 2);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (const auto& field : analytic_field_library()) {
      double equiv = 0.0, analytic = 0.0, fd = 0.0;
      for (int k = 0; k < 50; ++k) {
        SpacetimePoint x{u(rng), u(rng), u(rng), u(rng)};
        const double r = std::sqrt(x[1] * x[1] + x[2] * x[2] + x[3] * x[3]);
        if (std::abs(r - 1.0) < 0.05 || r < 0.05) continue;  // charged-ball surface and origin
        const FlatFieldJet jet = field->jet(x);
        const auto mr = matrix_residual(jet);
        const auto cr = classical_residual(jet);
        const auto rg = regroup(mr);
        for (int i = 0; i < 8; ++i) equiv = std::max(equiv, std::abs(rg[i] - cr[i]));
        for (const cplx& c : mr) analytic = std::max(analytic, std::abs(c));
        const FlatFieldJet num = jet_fd([&](const SpacetimePoint& y) { return field->sample(y); }, x);
        for (const cplx& c : matrix_residual(num)) fd = std::max(fd, std::abs(c));
      }
      const std::string name = field->name();
      rep.require_below(name + ": Re/Im of matrix residual = eight scalar equations", equiv, cfg.tol.flat);
      rep.require_below(name + ": matrix residual, analytic derivatives", analytic, cfg.tol.flat_analytic);
      rep.require_below(name + ": matrix residual, finite differences", fd, cfg.tol.flat_fd);
    }
    FlatFieldJet zero;
    double z = 0.0;
    for (const cplx& c : matrix_residual(zero)) z = std::max(z, std::abs(c));
    rep.require_below("zero field and source", z, 0.0);
    // A ball whose source term is dropped must not satisfy the equations.
    const ChargedBall ball(2.0, 1.0);
    FlatFieldJet jet = ball.jet({0.0, 0.2, 0.1, -0.3});
    jet.value.charge = 0.0;
    rep.require_above("charged_ball without its charge density (negative control)", std::abs(matrix_residual(jet)[0]),
                      1.0);
  });
}

std::vector<SuiteReport> run_verify(const std::string& scope, const VerifyConfig& cfg) {
  using Runner = SuiteReport (*)(const VerifyConfig&);
  const std::pair<const char*, Runner> table[] = {
      {"algebra", verify_algebra_suite}, {"geometry", verify_geometry_suite}, {"wigner", verify_wigner_suite},
      {"radial", verify_radial_suite},   {"modes", verify_modes_suite},       {"flat", verify_flat_suite},
  };
  std::vector<SuiteReport> out;
  for (const auto& [name, run] : table)
    if (scope == "all" || scope == name) out.push_back(run(cfg));
  if (out.empty()) fail(ErrorCode::invalid_argument, "unknown verify scope '" + scope + "'");
  return out;
}

}  // namespace cmx
