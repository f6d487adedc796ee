#include <doctest.h>

#include <cmath>

#include "cmx/flat_check.hpp"

using namespace cmx;

namespace {
double max_abs(const std::array<cplx, 4>& r) {
  double m = 0.0;
  for (const auto& c : r) m = std::max(m, std::abs(c));
  return m;
}
}  // namespace

TEST_CASE("plane wave in vacuum") {
  const PlaneWave wave;
  for (double t : {0.0, 0.4, 1.7}) {
    const FlatFieldJet jet = wave.jet({t, 0.3, -0.2, 0.9});
    CHECK(jet.value.E[0] == doctest::Approx(std::cos(0.9 - t)));
    CHECK(jet.value.cB[1] == doctest::Approx(std::cos(0.9 - t)));
    CHECK(max_abs(matrix_residual(jet)) <= 1e-10);
    for (double r : classical_residual(jet)) CHECK(std::abs(r) <= 1e-10);
  }
}

TEST_CASE("charged ball: finite differences off the surface") {
  const ChargedBall ball(2.0, 1.0);
  for (SpacetimePoint x : {SpacetimePoint{0.0, 0.3, 0.2, -0.1}, SpacetimePoint{0.0, 1.4, -0.8, 0.6}}) {
    const FlatFieldJet num = jet_fd([&](const SpacetimePoint& y) { return ball.sample(y); }, x);
    CHECK(max_abs(matrix_residual(num)) <= 1e-6);
    CHECK(max_abs(matrix_residual(ball.jet(x))) <= 1e-12);
  }
  // outside the ball the field is a Coulomb field of the total charge
  const FlatFieldSample s = ball.sample({0.0, 2.0, 0.0, 0.0});
  CHECK(s.E[0] == doctest::Approx(2.0 / 3.0 / 4.0));
  CHECK(s.charge == 0.0);
}

TEST_CASE("zero field") {
  const FlatFieldJet zero;
  CHECK(max_abs(matrix_residual(zero)) == 0.0);
  for (double r : classical_residual(zero)) CHECK(r == 0.0);
}

TEST_CASE("regrouping equals the eight scalar equations for arbitrary jets") {
  // Any jet, physical or not: the map is linear and exact.
  FlatFieldJet jet;
  double v = 0.1;
  for (int mu = 0; mu < 4; ++mu)
    for (int k = 0; k < 3; ++k) {
      jet.dE[mu][k] = (v += 0.37);
      jet.dcB[mu][k] = -(v += 0.11);
    }
  jet.value.charge = 0.8;
  jet.value.current = {0.1, -0.3, 0.5};
  const auto rg = regroup(matrix_residual(jet));
  const auto cr = classical_residual(jet);
  for (int i = 0; i < 8; ++i) CHECK(std::abs(rg[i] - cr[i]) <= 1e-13);
}

TEST_CASE("source terms enter with the right sign") {
  const UniformCurrent wire(1.5);
  FlatFieldJet jet = wire.jet({0.0, 0.2, 0.3, 0.0});
  CHECK(max_abs(matrix_residual(jet)) <= 1e-14);
  jet.value.current[2] = -jet.value.current[2];
  CHECK(max_abs(matrix_residual(jet)) == doctest::Approx(3.0));
}

TEST_CASE("library") {
  const auto lib = analytic_field_library();
  REQUIRE(lib.size() == 4);
  CHECK(lib[0]->name() == "plane_wave");
  const StandingWave sw(0.8, 1.7);
  const FlatFieldJet num = jet_fd([&](const SpacetimePoint& y) { return sw.sample(y); }, {0.3, 0.1, 0.2, 0.4});
  CHECK(max_abs(matrix_residual(num)) <= 1e-6);
}
