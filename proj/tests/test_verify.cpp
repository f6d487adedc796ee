#include <doctest.h>

#include "cmx/errors.hpp"
#include "cmx/verify.hpp"

using namespace cmx;

TEST_CASE("suite report logic") {
  SuiteReport r;
  r.require_below("a", 1e-9, 1e-8);
  r.require_above("b", 2.0, 1.0);
  CHECK(r.passed());
  r.require_below("nan", std::nan(""), 1.0);
  CHECK_FALSE(r.passed());
  CHECK_FALSE(r.checks.back().passed);
  SuiteReport s;
  s.require_above("weak control", 0.5, 1.0);
  CHECK_FALSE(s.passed());
}

TEST_CASE("scopes") {
  CHECK(verify_scopes().size() == 7);
  CHECK_THROWS_AS(run_verify("nope"), Error);
  const auto all_light = run_verify("algebra");
  REQUIRE(all_light.size() == 1);
  CHECK(all_light[0].scope == "algebra");
  CHECK(all_light[0].passed());
}

TEST_CASE("targeted radial suite") {
  VerifyConfig cfg;
  cfg.model = SpaceKind::s3;
  cfg.j = 1;
  cfg.n = 0;
  CHECK(verify_radial_suite(cfg).passed());
  cfg.n.reset();
  cfg.omega = 2.5;
  const SuiteReport bad = verify_radial_suite(cfg);
  CHECK_FALSE(bad.passed());
  cfg.model = SpaceKind::h3;
  cfg.omega = 0.9;
  CHECK(verify_radial_suite(cfg).passed());
  cfg.omega.reset();
  cfg.j = 2;
  CHECK_THROWS_AS(verify_radial_suite(cfg), Error);
}

TEST_CASE("tightened tolerances make checks fail") {
  VerifyConfig cfg;
  cfg.tol.geometry = 1e-16;
  CHECK_FALSE(verify_geometry_suite(cfg).passed());
  cfg = {};
  cfg.tol.flat_fd = 1e-16;
  CHECK_FALSE(verify_flat_suite(cfg).passed());
}

TEST_CASE("targeted modes suite") {
  VerifyConfig cfg;
  cfg.model = SpaceKind::s3;
  cfg.j = 2;
  cfg.m = -1;
  cfg.n = 1;
  cfg.grid = 8;
  CHECK(verify_modes_suite(cfg).passed());
  cfg.n.reset();
  cfg.omega = 4.3;
  CHECK_FALSE(verify_modes_suite(cfg).passed());
}
