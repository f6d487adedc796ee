#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cmx/errors.hpp"
#include "cmx/modes.hpp"

using namespace cmx;
using std::numbers::pi;

TEST_CASE("mode specification") {
  CHECK(ModeSpec::s3(1, 0, 0).physical_omega() == 2.0);
  CHECK(ModeSpec::s3(2, 0, 3).physical_omega() == 6.0);
  CHECK(ModeSpec::s3(1, 0, 0, 2.0).physical_omega() == 1.0);
  CHECK(ModeSpec::h3(2, 1, 1.3).profile_omega() == 1.3);
  ModeSpec d = ModeSpec::s3(2, 1, 1);
  d.detuning = 1.05;
  CHECK(d.time_omega() == doctest::Approx(4.2));
  CHECK_THROWS_AS(ModeSpec::s3(2, 3, 0).validate(), Error);
  CHECK_THROWS_AS(ModeSpec::s3(0, 0, 0).validate(), Error);
  CHECK_THROWS_AS(ModeSpec::h3(1, 0, -1.0).validate(), Error);
}

TEST_CASE("spectrum table") {
  const SpectrumTable t = spectrum(2, 1);
  REQUIRE(t.size() == 4);
  const double omega[4] = {2, 3, 3, 4};
  const int j[4] = {1, 1, 2, 2}, n[4] = {0, 1, 0, 1};
  for (int i = 0; i < 4; ++i) {
    CHECK(t[i].omega == omega[i]);
    CHECK(t[i].j == j[i]);
    CHECK(t[i].n == n[i]);
    CHECK(t[i].degeneracy == 2 * j[i] + 1);
  }
  for (const auto& row : spectrum(2, 1, 2.0)) CHECK(row.omega == (row.n + 1 + row.j) / 2.0);
  CHECK(admissible_m(2) == std::vector<int>{-2, -1, 0, 1, 2});
  CHECK_THROWS_AS(spectrum(0, 1), Error);
  CHECK_THROWS_AS(spectrum(2, 1, 0.0), Error);
}

TEST_CASE("mode evaluation") {
  const Mode mode(ModeSpec::s3(2, 1, 1));
  const Coordinates x{0.2, 0.9, 1.1, 0.4};
  const FieldVector psi = mode.evaluate(x);
  CHECK(psi[0] == cplx(0.0));
  CHECK(psi.max_abs() > 0.0);
  CHECK((evaluate_mode(ModeSpec::s3(2, 1, 1), x) - psi).max_abs() == 0.0);
  // time dependence exp(-i omega t)
  Coordinates later = x;
  later.t += 0.5;
  CHECK((mode.evaluate(later) - std::exp(cplx(0, -4.0 * 0.5)) * psi).max_abs() <= 1e-14);
  // azimuthal dependence exp(i m phi) for D^j_{-m, sigma}
  Coordinates turned = x;
  turned.phi += 0.3;
  CHECK((mode.evaluate(turned) - std::exp(cplx(0, 0.3)) * psi).max_abs() <= 1e-14);
  CHECK_THROWS_AS(mode.evaluate({0.0, 0.0, 1.0, 0.0}), Error);
}

TEST_CASE("curved operator: true modes and detuned modes") {
  const ModeGrid grid = ModeGrid::defaults(SpaceModel(SpaceKind::s3), 8);
  CHECK(grid.size() == 512);
  for (int j = 1; j <= 3; ++j)
    for (int m = -j; m <= j; ++m) {
      const OperatorResidual r = curved_operator_residual(ModeSpec::s3(j, m, 1), grid);
      CHECK(r.analytic <= 1e-8);
      CHECK(r.fd <= 1e-6);
      CHECK(r.component0 <= 1e-8);
    }
  ModeSpec d = ModeSpec::s3(2, 0, 1);
  d.detuning = 1.05;
  const OperatorResidual bad = curved_operator_residual(d, grid);
  CHECK(bad.analytic >= 1e-2);
  CHECK(bad.fd >= 1e-2);

  const ModeGrid hgrid = ModeGrid::defaults(SpaceModel(SpaceKind::h3), 8);
  const OperatorResidual h = curved_operator_residual(ModeSpec::h3(3, -2, 1.3), hgrid);
  CHECK(h.analytic <= 1e-8);
  CHECK(h.fd <= 1e-6);
}

TEST_CASE("analytic operator path agrees with the pointwise method") {
  const Mode mode(ModeSpec::h3(2, 1, 0.5));
  const FieldVector out = mode.apply_operator({0.1, 0.6, 0.9, 2.0});
  CHECK(out.max_abs() <= 1e-12 * mode.evaluate({0.1, 0.6, 0.9, 2.0}).max_abs() + 1e-14);
}

TEST_CASE("radial coupling block") {
  const Matrix4C b = alpha(1, Basis::cyclic) * generator(2, Basis::cyclic) -
                     alpha(2, Basis::cyclic) * generator(1, Basis::cyclic);
  CHECK(max_abs_diff(b, radial_coupling_block()) <= 1e-15);
  CHECK(radial_coupling_block()(0, 2) == cplx(2.0));
  CHECK(radial_coupling_block()(1, 1) == cplx(0.0, -1.0));
  CHECK(radial_coupling_block()(3, 3) == cplx(0.0, 1.0));
}

TEST_CASE("physical fields") {
  FieldVector cart{{0.0, 1.5, -0.5, 2.0}};
  const PhysicalFields f = to_physical_fields(to_cyclic(cart));
  CHECK(f.E[0] == doctest::Approx(1.5));
  CHECK(f.E[2] == doctest::Approx(2.0));
  for (double b : f.cB) CHECK(std::abs(b) <= 1e-15);
  FieldVector bad = to_cyclic(cart);
  bad[0] = 1e-3;
  CHECK_THROWS_AS(to_physical_fields(bad), Error);
}

TEST_CASE("sampled mode grid") {
  ModeGrid grid = ModeGrid::defaults(SpaceModel(SpaceKind::s3), 4);
  const auto rows = sample_mode(ModeSpec::s3(1, 1, 2), grid);
  CHECK(rows.size() == 64);
  for (const auto& r : rows) {
    CHECK(r.residual <= 1e-6);
    CHECK(r.x.t == grid.t);
  }
  CHECK(rows.front().x.chi == doctest::Approx(0.05));
  CHECK(rows.back().x.chi == doctest::Approx(pi - 0.05));
}
