#include <doctest.h>

#include <cmath>

#include "cmx/matrix.hpp"

using namespace cmx;

namespace {
constexpr cplx I{0.0, 1.0};

Matrix4C rows(std::array<std::array<cplx, 4>, 4> r) { return Matrix4C(r); }
}  // namespace

TEST_CASE("alpha matrices, Cartesian") {
  CHECK(max_abs_diff(alpha(0), Matrix4C::identity()) == 0.0);
  CHECK(max_abs_diff(alpha(1), rows({{{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}})) == 0.0);
  CHECK(max_abs_diff(alpha(1) * alpha(2), alpha(3)) == 0.0);
  CHECK(max_abs_diff(alpha(2) * alpha(3), alpha(1)) == 0.0);
  CHECK(max_abs_diff(alpha(3) * alpha(1), alpha(2)) == 0.0);
  CHECK(max_abs_diff(alpha(2) * alpha(1), -1.0 * alpha(3)) == 0.0);
  for (int k = 1; k <= 3; ++k) {
    CHECK((alpha(k) * alpha(k) + Matrix4C::identity()).max_abs() == 0.0);
    CHECK(max_abs_diff(alpha(k) * alpha(0), alpha(k)) == 0.0);
  }
}

TEST_CASE("alpha matrices, cyclic") {
  const Matrix4C a3 = rows({{{0, 0, 1, 0}, {0, -I, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, I}}});
  CHECK(max_abs_diff(alpha(3, Basis::cyclic), a3) == 0.0);
  CHECK(max_abs_diff(alpha(1, Basis::cyclic) * alpha(2, Basis::cyclic), alpha(3, Basis::cyclic)) <= 1e-15);
  for (int k = 1; k <= 3; ++k) {
    CHECK(max_abs_diff(to_cyclic(alpha(k)), alpha(k, Basis::cyclic)) <= 1e-15);
    CHECK(max_abs_diff(to_cyclic(generator(k)), generator(k, Basis::cyclic)) <= 1e-15);
  }
}

TEST_CASE("rotation generators") {
  const Matrix4C s3 = rows({{{0, 0, 0, 0}, {0, 0, -1, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}}});
  CHECK(max_abs_diff(generator(3), s3) == 0.0);
  const Matrix4C s3c = rows({{{0, 0, 0, 0}, {0, -I, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, I}}});
  CHECK(max_abs_diff(generator(3, Basis::cyclic), s3c) == 0.0);
  // [s1, s2] = s3 and cyclic permutations
  CHECK(max_abs_diff(commutator(generator(1), generator(2)), generator(3)) == 0.0);
  CHECK(max_abs_diff(commutator(generator(2), generator(3)), generator(1)) == 0.0);
  CHECK(max_abs_diff(commutator(generator(3), generator(1)), generator(2)) == 0.0);
}

TEST_CASE("Lorentz generators") {
  CHECK(max_abs_diff(lorentz_generator(2, 3), generator(1)) == 0.0);
  CHECK(max_abs_diff(lorentz_generator(3, 1), generator(2)) == 0.0);
  CHECK(max_abs_diff(lorentz_generator(1, 2), generator(3)) == 0.0);
  CHECK(max_abs_diff(lorentz_generator(0, 2), I * generator(2)) == 0.0);
  for (int a = 0; a < 4; ++a) {
    CHECK(lorentz_generator(a, a).max_abs() == 0.0);
    for (int b = 0; b < 4; ++b) CHECK((lorentz_generator(a, b) + lorentz_generator(b, a)).max_abs() == 0.0);
  }
}

TEST_CASE("cyclic transform") {
  const auto& u = cyclic_transform();
  CHECK(max_abs_diff(u.forward * u.inverse, Matrix4C::identity()) <= 1e-15);
  CHECK(max_abs_diff(u.forward.adjoint(), u.inverse) == 0.0);
  FieldVector v{{0.0, cplx(1.0, 2.0), cplx(-0.5, 0.25), cplx(3.0, -1.0)}};
  CHECK((to_cartesian(to_cyclic(v)) - v).max_abs() <= 1e-15);
  // the middle cyclic slot is the z component
  CHECK(std::abs(to_cyclic(v)[2] - v[3]) <= 1e-15);
}

TEST_CASE("algebra report") {
  const AlgebraReport rep = verify_algebra();
  CHECK(rep.checks.size() >= 30);
  CHECK(rep.max_residual <= 1e-15);
  for (const auto& c : rep.checks) CHECK(c.residual <= rep.max_residual);
}

TEST_CASE("matrix-vector product and operators") {
  FieldVector v{{1.0, 2.0, 3.0, 4.0}};
  const FieldVector w = alpha(1) * v;
  CHECK(w[0] == cplx(2.0));
  CHECK(w[1] == cplx(-1.0));
  CHECK(w[2] == cplx(-4.0));
  CHECK(w[3] == cplx(3.0));
  CHECK((2.0 * v - v - v).max_abs() == 0.0);
}
