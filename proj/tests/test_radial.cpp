#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cmx/errors.hpp"
#include "cmx/radial.hpp"

using namespace cmx;
using std::numbers::pi;

namespace {
const SpaceModel kS3(SpaceKind::s3);
const SpaceModel kH3(SpaceKind::h3);

bool rel_close(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol * std::abs(b); }
}  // namespace

TEST_CASE("frequencies") {
  CHECK(s3_frequency(1, 0) == 2.0);
  CHECK(s3_frequency(2, 3) == 6.0);
  CHECK(is_quantized(2, 6.0));
  CHECK_FALSE(is_quantized(2, 6.5));
  CHECK_FALSE(is_quantized(2, 2.0));  // would need n = -1
  CHECK_THROWS_AS(s3_frequency(0, 1), Error);
  CHECK_THROWS_AS(s3_frequency(1, -1), Error);
  CHECK_THROWS_AS((RadialParams{kS3, 0.0, 1}.validate()), Error);
  CHECK_THROWS_AS((RadialParams{kS3, 1.0, 0}.validate()), Error);
}

TEST_CASE("change of variable") {
  CHECK(std::abs(z_of_chi(kS3, pi / 2) - cplx(2.0, 0.0)) <= 1e-15);
  CHECK(std::abs(z_of_chi(kS3, pi / 4) - cplx(1.0, 1.0)) <= 1e-15);
  CHECK(z_of_chi(kH3, 0.0) == cplx(0.0));
  CHECK(std::abs(z_of_chi(kH3, 1e-9) + std::expm1(-2e-9)) <= 1e-15 * 2e-9);  // no cancellation near 0
}

TEST_CASE("hypergeometric reduction") {
  const HypReduction s = hyp_reduction({kS3, 5.0, 2});
  CHECK(s.a_exp == cplx(3.0));
  CHECK(s.b_exp == cplx(-2.5));
  CHECK(s.hyp.alpha == cplx(-2.0));
  CHECK(s.hyp.beta == cplx(3.0));
  CHECK(s.hyp.gamma == cplx(6.0));
  const HypReduction h = hyp_reduction({kH3, 1.3, 2});
  CHECK(h.b_exp == cplx(0.0, -0.65));
  CHECK(std::abs(h.hyp.alpha - cplx(3.0, -1.3)) <= 1e-15);
  const HypReduction sing = hyp_reduction({kS3, 3.0, 2}, {ExponentBranch::singular, PhaseBranch::plus});
  CHECK(sing.a_exp == cplx(-2.0));
  CHECK(sing.hyp.gamma == cplx(-4.0));
  CHECK(polynomial_degree(sing.hyp) >= 0);
}

TEST_CASE("S3 closed form against reference values") {
  // j = 1, n = 0: G = -4 sin^2 chi exactly
  for (double chi : {0.3, 0.7, 2.0})
    CHECK(rel_close(closed_form_G({kS3, 2.0, 1}, chi).G, -4.0 * std::sin(chi) * std::sin(chi), 1e-14));
  CHECK(rel_close(closed_form_G({kS3, 4.0, 2}, 1.1).G, cplx(0.0, -2.5685948815286962227524383397), 1e-13));
  CHECK(rel_close(closed_form_G({kS3, 7.0, 3}, 2.5).G, cplx(-0.859100070230878573904670837596, 0.0), 1e-12));
}

TEST_CASE("H3 closed form against reference values") {
  CHECK(rel_close(closed_form_G({kH3, 1.3, 2}, 1.0).G, 6.16292204154700738215780707505, 1e-13));
  CHECK(rel_close(closed_form_G({kH3, 0.5, 1}, 0.3).G, 0.357052441528595051296450885871, 1e-13));
  CHECK(rel_close(closed_form_G({kH3, 2.7, 4}, 1.7).G, 63.4816846569742174333768804247, 1e-12));
  // beyond the series range: ODE continuation
  CHECK(rel_close(closed_form_G({kH3, 1.3, 2}, 3.0).G, 15.7490108963300770233747270477, 1e-7));
  CHECK(rel_close(closed_form_G({kH3, 0.5, 1}, 5.0).G, 19.1826872741997247537764018362, 1e-7));
}

TEST_CASE("closed form errors") {
  try {
    closed_form_G({kS3, 2.5, 1}, 1.0);
    FAIL("expected not_quantized");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_quantized);
  }
  CHECK_THROWS_AS(closed_form_G({kS3, 2.0, 1}, 0.0), Error);
  CHECK_THROWS_AS(closed_form_G({kS3, 2.0, 1}, pi), Error);
  CHECK_NOTHROW(hypergeometric_G({kS3, 2.5, 1}, 0.5));  // series without spectral check, |z| < 1
}

TEST_CASE("regularity at the origin") {
  for (int j = 1; j <= 4; ++j) {
    const RadialParams p{kS3, s3_frequency(j, 1), j};
    const double ratio = std::abs(closed_form_G(p, 2e-4).G) / std::abs(closed_form_G(p, 1e-4).G);
    CHECK(std::log2(ratio) == doctest::Approx(j + 1).epsilon(1e-6));
  }
}

TEST_CASE("analytic derivatives of G") {
  const double h = 1e-4;
  for (const RadialParams& p : {RadialParams{kS3, 6.0, 2}, RadialParams{kH3, 1.3, 3}}) {
    for (double chi : {0.4, 1.2}) {
      const RadialValue v = closed_form_G(p, chi);
      const RadialValue vp = closed_form_G(p, chi + h), vm = closed_form_G(p, chi - h);
      CHECK(std::abs((vp.G - vm.G) / (2 * h) - v.dG) <= 1e-6 * std::abs(v.dG) + 1e-9);
      CHECK(std::abs((vp.dG - vm.dG) / (2 * h) - v.d2G) <= 1e-6 * std::abs(v.d2G) + 1e-9);
    }
  }
}

TEST_CASE("second-order residual") {
  for (int j = 1; j <= 5; ++j)
    for (int n = 0; n <= 5; ++n) {
      const RadialParams p{kS3, s3_frequency(j, n), j};
      CHECK(residual_second_order(p, [&](double c) { return closed_form_G(p, c); }, guarded_grid(kS3, 41)) <=
            1e-8);
    }
  const RadialParams h{kH3, 2.7, 2};
  CHECK(residual_second_order(h, [&](double c) { return closed_form_G(h, c); }, linspace(0.05, 1.0, 41)) <= 1e-8);
  const RadialParams p{kS3, 5.0, 2};
  const double bad = residual_second_order(
      p,
      [&](double c) {
        const RadialValue v = closed_form_G(p, c);
        const double k = 1.0 + 0.01 * c;
        return RadialValue{k * v.G, 0.01 * v.G + k * v.dG, 0.02 * v.dG + k * v.d2G};
      },
      guarded_grid(kS3, 41));
  CHECK(bad >= 1e-3);
}

TEST_CASE("first-order assembly") {
  const RadialParams p{kS3, 5.0, 2};
  const RadialPoint zero = assemble_first_order(p, 0.8, {0.0, 0.0, 0.0});
  for (cplx v : {zero.F, zero.F1, zero.F2, zero.F3, zero.f1, zero.f2, zero.f3, zero.df1, zero.df2, zero.df3})
    CHECK(v == cplx(0.0));
  for (const RadialParams& q : {p, RadialParams{kH3, 0.5, 4}}) {
    const RadialSolution sol = sample_radial(q, guarded_grid(q.model, 61));
    const FirstOrderResidual r = residual_first_order(q, sol);
    CHECK(r.max <= 1e-8);
    CHECK(r.identity <= 1e-8);
    CHECK(sol.residual_2nd <= 1e-8);
    double peak = 0.0;
    for (cplx g : sol.G) peak = std::max(peak, std::abs(g));
    CHECK(peak == doctest::Approx(1.0));
  }
}

TEST_CASE("RK oracle") {
  const RadialParams p{kS3, 6.0, 3};
  const auto grid = linspace(0.1, pi - 0.1, 31);
  const auto rk = ode_oracle(p, grid[0], closed_form_G(p, grid[0]), std::span(grid).subspan(1));
  double scale = 0.0;
  for (double c : grid) scale = std::max(scale, std::abs(closed_form_G(p, c).G));
  for (std::size_t i = 1; i < grid.size(); ++i)
    CHECK(std::abs(rk[i - 1].G - closed_form_G(p, grid[i]).G) <= 1e-7 * scale);
}

TEST_CASE("two-endpoint regularity selects the spectrum") {
  for (int j = 1; j <= 3; ++j) {
    CHECK(regularity_mismatch({kS3, s3_frequency(j, 2), j}) <= 1e-6);
    CHECK(regularity_mismatch({kS3, s3_frequency(j, 2) + 0.5, j}) >= 1e-2);
    CHECK(regularity_mismatch({kS3, s3_frequency(j, 2) * 1.05, j}) >= 1e-3);
  }
}

TEST_CASE("grids") {
  const auto g = guarded_grid(kS3, 5);
  CHECK(g.front() == doctest::Approx(0.05));
  CHECK(g.back() == doctest::Approx(pi - 0.05));
  CHECK(guarded_grid(kH3, 3).back() == doctest::Approx(2.0));
  CHECK(linspace(0.0, 1.0, 1).size() == 1);
}
