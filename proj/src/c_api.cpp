// SPDX-License-Identifier: Apache-2.0
#include "cmx/cmx.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "cmx/errors.hpp"
#include "cmx/flat_check.hpp"
#include "cmx/modes.hpp"
#include "cmx/verify.hpp"

struct cmx_report {
  std::vector<cmx::SuiteReport> suites;
};

struct cmx_table {
  std::vector<std::string> names;
  std::vector<int> integer;
  std::vector<double> data;
  std::size_t rows = 0;

  void add_column(const char* name, bool is_int = false) {
    names.emplace_back(name);
    integer.push_back(is_int ? 1 : 0);
  }
};

namespace {

thread_local std::string g_last_error;

cmx_status set_error(cmx_status code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

template <class F>
cmx_status guarded(F&& body) {
  try {
    body();
    return CMX_OK;
  } catch (const cmx::Error& e) {
    return set_error(static_cast<cmx_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(CMX_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(CMX_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(CMX_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* msg) {
  if (!ok) cmx::fail(cmx::ErrorCode::invalid_argument, msg);
}

cmx::SpaceKind to_kind(cmx_model m) {
  switch (m) {
    case CMX_MODEL_S3: return cmx::SpaceKind::s3;
    case CMX_MODEL_H3: return cmx::SpaceKind::h3;
  }
  cmx::fail(cmx::ErrorCode::invalid_argument, "unknown model");
}

cmx::Tolerances to_tolerances(const cmx_tolerances& t) {
  cmx::Tolerances o;
  o.algebra = t.algebra;
  o.geometry = t.geometry;
  o.tetrad = t.tetrad;
  o.metric_compatibility = t.metric_compatibility;
  o.wigner = t.wigner;
  o.wigner_fd = t.wigner_fd;
  o.quadrature = t.quadrature;
  o.radial = t.radial;
  o.oracle_s3 = t.oracle_s3;
  o.oracle_h3 = t.oracle_h3;
  o.variable_change = t.variable_change;
  o.regularity = t.regularity;
  o.operator_analytic = t.operator_analytic;
  o.operator_fd = t.operator_fd;
  o.flat = t.flat;
  o.flat_analytic = t.flat_analytic;
  o.flat_fd = t.flat_fd;
  o.detuning_margin = t.detuning_margin;
  return o;
}

const cmx::SuiteReport& suite_at(const cmx_report* r, std::size_t s) {
  require(r != nullptr, "null report");
  require(s < r->suites.size(), "suite index out of range");
  return r->suites[s];
}

}  // namespace

extern "C" {

const char* cmx_version(void) { return "1.0.0"; }

const char* cmx_last_error(void) { return g_last_error.c_str(); }

const char* cmx_status_name(cmx_status status) {
  switch (status) {
    case CMX_OK: return "ok";
    case CMX_ERR_INVALID_ARGUMENT: return "invalid_argument";
    case CMX_ERR_DOMAIN: return "domain";
    case CMX_ERR_NOT_QUANTIZED: return "not_quantized";
    case CMX_ERR_CONVERGENCE: return "convergence";
    case CMX_ERR_INTEGRATION: return "integration";
    case CMX_ERR_CONSTRAINT: return "constraint";
    case CMX_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void cmx_verify_config_default(cmx_verify_config* cfg) {
  if (!cfg) return;
  const cmx::VerifyConfig d;
  const cmx::Tolerances& t = d.tol;
  *cfg = cmx_verify_config{};
  cfg->tol = {t.algebra,     t.geometry,     t.tetrad,       t.metric_compatibility, t.wigner,
              t.wigner_fd,   t.quadrature,   t.radial,       t.oracle_s3,            t.oracle_h3,
              t.variable_change, t.regularity, t.operator_analytic, t.operator_fd, t.flat,
              t.flat_analytic, t.flat_fd,  t.detuning_margin};
  cfg->model = CMX_MODEL_S3;
  cfg->grid = d.grid;
  cfg->seed = d.seed;
}

cmx_status cmx_verify(const char* scope, const cmx_verify_config* cfg, cmx_report** out) {
  return guarded([&] {
    require(scope && cfg && out, "null argument");
    *out = nullptr;
    require(cfg->grid >= 5 && cfg->grid <= 200, "grid must be in [5, 200]");
    cmx::VerifyConfig c;
    c.tol = to_tolerances(cfg->tol);
    if (cfg->has_model) c.model = to_kind(cfg->model);
    if (cfg->has_j) c.j = cfg->j;
    if (cfg->has_m) c.m = cfg->m;
    if (cfg->has_n) c.n = cfg->n;
    if (cfg->has_omega) c.omega = cfg->omega;
    c.grid = cfg->grid;
    c.seed = cfg->seed;
    auto rep = std::make_unique<cmx_report>();
    rep->suites = cmx::run_verify(scope, c);
    *out = rep.release();
  });
}

size_t cmx_report_suite_count(const cmx_report* r) { return r ? r->suites.size() : 0; }

const char* cmx_report_suite_scope(const cmx_report* r, size_t suite) {
  return r && suite < r->suites.size() ? r->suites[suite].scope.c_str() : nullptr;
}

double cmx_report_suite_seconds(const cmx_report* r, size_t suite) {
  return r && suite < r->suites.size() ? r->suites[suite].seconds : 0.0;
}

size_t cmx_report_check_count(const cmx_report* r, size_t suite) {
  return r && suite < r->suites.size() ? r->suites[suite].checks.size() : 0;
}

cmx_status cmx_report_check(const cmx_report* r, size_t suite, size_t check, cmx_check* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    const auto& s = suite_at(r, suite);
    require(check < s.checks.size(), "check index out of range");
    const auto& c = s.checks[check];
    *out = {c.name.c_str(), c.observed, c.tolerance, c.upper_bound ? 1 : 0, c.passed ? 1 : 0};
  });
}

int cmx_report_passed(const cmx_report* r) {
  if (!r) return 0;
  for (const auto& s : r->suites)
    if (!s.passed()) return 0;
  return 1;
}

void cmx_report_free(cmx_report* r) { delete r; }

cmx_status cmx_spectrum(cmx_model model, int j_max, int n_max, double rho, cmx_table** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = nullptr;
    auto t = std::make_unique<cmx_table>();
    t->add_column("j", true);
    t->add_column("n", true);
    t->add_column("omega");
    t->add_column("degeneracy", true);
    const auto rows = cmx::spectrum(j_max, n_max, rho);  // validates arguments for either model
    if (to_kind(model) == cmx::SpaceKind::h3) {
      *out = t.release();
      return;
    }
    for (const auto& row : rows) {
      t->data.insert(t->data.end(), {double(row.j), double(row.n), row.omega, double(row.degeneracy)});
      ++t->rows;
    }
    *out = t.release();
  });
}

void cmx_mode_spec_default(cmx_mode_spec* spec) {
  if (!spec) return;
  *spec = {CMX_MODEL_S3, 1, 0, 0, 1.0, 1.0, 1.0};
}

cmx_status cmx_mode_grid(const cmx_mode_spec* spec, int grid_n, cmx_table** out) {
  return guarded([&] {
    require(spec && out, "null argument");
    *out = nullptr;
    require(grid_n >= 1 && grid_n <= 200, "grid must be in [1, 200]");
    cmx::ModeSpec s = to_kind(spec->model) == cmx::SpaceKind::s3
                          ? cmx::ModeSpec::s3(spec->j, spec->m, spec->n, spec->rho)
                          : cmx::ModeSpec::h3(spec->j, spec->m, spec->omega, spec->rho);
    s.detuning = spec->detuning;
    s.validate();
    const auto rows = cmx::sample_mode(s, cmx::ModeGrid::defaults(s.model, grid_n));

    auto t = std::make_unique<cmx_table>();
    for (const char* c : {"t", "chi", "theta", "phi", "re_psi1", "re_psi2", "re_psi3", "im_psi1", "im_psi2",
                          "im_psi3", "E1", "E2", "E3", "cB1", "cB2", "cB3", "residual"})
      t->add_column(c);
    t->data.reserve(rows.size() * t->names.size());
    for (const auto& r : rows) {
      t->data.insert(t->data.end(), {r.x.t, r.x.chi, r.x.theta, r.x.phi});
      for (int k = 1; k <= 3; ++k) t->data.push_back(r.psi[k].real());
      for (int k = 1; k <= 3; ++k) t->data.push_back(r.psi[k].imag());
      t->data.insert(t->data.end(), r.fields.E.begin(), r.fields.E.end());
      t->data.insert(t->data.end(), r.fields.cB.begin(), r.fields.cB.end());
      t->data.push_back(r.residual);
      ++t->rows;
    }
    *out = t.release();
  });
}

size_t cmx_flat_field_count(void) { return cmx::analytic_field_library().size(); }

const char* cmx_flat_field_name(size_t field) {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& f : cmx::analytic_field_library()) v.push_back(f->name());
    return v;
  }();
  return field < names.size() ? names[field].c_str() : nullptr;
}

cmx_status cmx_flat_samples(int samples_per_field, uint64_t seed, cmx_table** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = nullptr;
    require(samples_per_field >= 1 && samples_per_field <= 100000, "samples must be in [1, 100000]");
    auto t = std::make_unique<cmx_table>();
    t->add_column("field", true);
    for (const char* c : {"t", "x", "y", "z", "equivalence", "analytic", "fd"}) t->add_column(c);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const auto library = cmx::analytic_field_library();
    for (std::size_t f = 0; f < library.size(); ++f) {
      const auto& field = *library[f];
      for (int k = 0; k < samples_per_field;) {
        const cmx::SpacetimePoint x{u(rng), u(rng), u(rng), u(rng)};
        const double r = std::hypot(x[1], x[2], x[3]);
        if (std::abs(r - 1.0) < 0.05 || r < 0.05) continue;  // ball surface and origin
        const cmx::FlatFieldJet jet = field.jet(x);
        const auto mr = cmx::matrix_residual(jet);
        const auto cr = cmx::classical_residual(jet);
        const auto rg = cmx::regroup(mr);
        double equiv = 0.0, analytic = 0.0, fd = 0.0;
        for (int i = 0; i < 8; ++i) equiv = std::max(equiv, std::abs(rg[i] - cr[i]));
        for (const auto& c : mr) analytic = std::max(analytic, std::abs(c));
        const auto num = cmx::jet_fd([&](const cmx::SpacetimePoint& y) { return field.sample(y); }, x);
        for (const auto& c : cmx::matrix_residual(num)) fd = std::max(fd, std::abs(c));
        t->data.insert(t->data.end(), {double(f), x[0], x[1], x[2], x[3], equiv, analytic, fd});
        ++t->rows;
        ++k;
      }
    }
    *out = t.release();
  });
}

size_t cmx_table_rows(const cmx_table* t) { return t ? t->rows : 0; }

size_t cmx_table_columns(const cmx_table* t) { return t ? t->names.size() : 0; }

const char* cmx_table_column_name(const cmx_table* t, size_t column) {
  return t && column < t->names.size() ? t->names[column].c_str() : nullptr;
}

int cmx_table_column_is_integer(const cmx_table* t, size_t column) {
  return t && column < t->integer.size() ? t->integer[column] : 0;
}

double cmx_table_value(const cmx_table* t, size_t row, size_t column) {
  if (!t || row >= t->rows || column >= t->names.size()) return std::nan("");
  return t->data[row * t->names.size() + column];
}

const double* cmx_table_data(const cmx_table* t) { return t && !t->data.empty() ? t->data.data() : nullptr; }

void cmx_table_free(cmx_table* t) { delete t; }

}  // extern "C"
