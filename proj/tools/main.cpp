// SPDX-License-Identifier: Apache-2.0
//
// curved-maxwell: verification suites, S3 spectrum tables, mode field grids
// and flat-space residual samples. Exit status: 0 when every executed check
// passes, 1 on a tolerance violation, 2 on a usage or runtime error.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cmx/cmx.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct TableDeleter {
  void operator()(cmx_table* t) const { cmx_table_free(t); }
};
struct ReportDeleter {
  void operator()(cmx_report* r) const { cmx_report_free(r); }
};
using Table = std::unique_ptr<cmx_table, TableDeleter>;
using Report = std::unique_ptr<cmx_report, ReportDeleter>;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(cmx_status s) {
  if (s != CMX_OK) throw CliError(std::string(cmx_status_name(s)) + ": " + cmx_last_error());
}

std::string number(double v, bool integer) {
  char buf[40];
  if (integer)
    std::snprintf(buf, sizeof buf, "%lld", static_cast<long long>(v));
  else
    std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(std::ostream& os, const cmx_table* t) {
  const std::size_t cols = cmx_table_columns(t), rows = cmx_table_rows(t);
  for (std::size_t c = 0; c < cols; ++c) os << (c ? "," : "") << cmx_table_column_name(t, c);
  os << '\n';
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c)
      os << (c ? "," : "") << number(cmx_table_value(t, r, c), cmx_table_column_is_integer(t, c));
    os << '\n';
  }
}

void write_json(std::ostream& os, const cmx_table* t) {
  auto out = nlohmann::ordered_json::array();
  const std::size_t cols = cmx_table_columns(t), rows = cmx_table_rows(t);
  for (std::size_t r = 0; r < rows; ++r) {
    nlohmann::ordered_json row;
    for (std::size_t c = 0; c < cols; ++c) {
      const double v = cmx_table_value(t, r, c);
      if (cmx_table_column_is_integer(t, c))
        row[cmx_table_column_name(t, c)] = static_cast<long long>(v);
      else
        row[cmx_table_column_name(t, c)] = v;
    }
    out.push_back(std::move(row));
  }
  os << out.dump(1) << '\n';
}

struct OutputOptions {
  std::string path;
  std::string format = "csv";
};

void emit(const cmx_table* t, const OutputOptions& o) {
  std::ostringstream buf;
  if (o.format == "json")
    write_json(buf, t);
  else
    write_csv(buf, t);
  if (o.path.empty() || o.path == "-") {
    std::cout << buf.str();
    return;
  }
  std::ofstream f(o.path, std::ios::binary);
  if (!(f << buf.str())) throw CliError("cannot write " + o.path);
  std::cerr << "wrote " << cmx_table_rows(t) << " rows to " << o.path << '\n';
}

void add_output(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("-o,--output", o.path, "Output file (default: stdout)");
  cmd->add_option("--format", o.format, "Table format")->check(CLI::IsMember({"csv", "json"}));
}

std::map<std::string, cmx_model> model_map() { return {{"s3", CMX_MODEL_S3}, {"h3", CMX_MODEL_H3}}; }

int print_report(const cmx_report* r) {
  for (std::size_t s = 0; s < cmx_report_suite_count(r); ++s) {
    std::size_t failed = 0, n = cmx_report_check_count(r, s);
    std::printf("[%s]\n", cmx_report_suite_scope(r, s));
    for (std::size_t c = 0; c < n; ++c) {
      cmx_check ch;
      check(cmx_report_check(r, s, c, &ch));
      if (!ch.passed) ++failed;
      std::printf("  %s  %-72s observed=%-11.3e %s %.1e\n", ch.passed ? "PASS" : "FAIL", ch.name, ch.observed,
                  ch.upper_bound ? "tol<=" : "need>=", ch.tolerance);
    }
    std::printf("  %zu/%zu checks passed in %.2f s\n", n - failed, n, cmx_report_suite_seconds(r, s));
  }
  const bool ok = cmx_report_passed(r);
  std::printf("%s\n", ok ? "ALL CHECKS PASSED" : "TOLERANCE VIOLATION");
  return ok ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix Maxwell equations on flat space, S3 and H3: verification and mode tables"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(cmx_version()));

  // verify
  cmx_verify_config vcfg;
  cmx_verify_config_default(&vcfg);
  std::string scope;
  std::optional<cmx_model> v_model;
  std::optional<int> v_j, v_m, v_n;
  std::optional<double> v_omega;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("scope", scope, "Suite to run")
      ->required()
      ->check(CLI::IsMember({"algebra", "geometry", "wigner", "radial", "modes", "flat", "all"}));
  verify->add_option("--model", v_model, "Restrict radial/modes to one space")
      ->transform(CLI::CheckedTransformer(model_map(), CLI::ignore_case));
  verify->add_option("--j", v_j, "Angular momentum j >= 1");
  verify->add_option("--m", v_m, "Azimuthal number, |m| <= j");
  verify->add_option("--n", v_n, "S3 radial quantum number");
  verify->add_option("--omega", v_omega, "Frequency (S3: tested for quantization)");
  verify->add_option("--grid", vcfg.grid, "Points per axis of the mode grid")->capture_default_str();
  verify->add_option("--seed", vcfg.seed, "Seed for random sample points")->capture_default_str();
  const std::pair<const char*, double*> tols[] = {
      {"algebra", &vcfg.tol.algebra},
      {"geometry", &vcfg.tol.geometry},
      {"tetrad", &vcfg.tol.tetrad},
      {"metric-compatibility", &vcfg.tol.metric_compatibility},
      {"wigner", &vcfg.tol.wigner},
      {"wigner-fd", &vcfg.tol.wigner_fd},
      {"quadrature", &vcfg.tol.quadrature},
      {"radial", &vcfg.tol.radial},
      {"oracle-s3", &vcfg.tol.oracle_s3},
      {"oracle-h3", &vcfg.tol.oracle_h3},
      {"variable-change", &vcfg.tol.variable_change},
      {"regularity", &vcfg.tol.regularity},
      {"operator-analytic", &vcfg.tol.operator_analytic},
      {"operator-fd", &vcfg.tol.operator_fd},
      {"flat", &vcfg.tol.flat},
      {"flat-analytic", &vcfg.tol.flat_analytic},
      {"flat-fd", &vcfg.tol.flat_fd},
      {"detuning-margin", &vcfg.tol.detuning_margin},
  };
  for (const auto& [name, ptr] : tols)
    verify->add_option(std::string("--tol-") + name, *ptr)->capture_default_str()->group("Tolerances");

  // spectrum
  OutputOptions s_out;
  cmx_model s_model = CMX_MODEL_S3;
  int jmax = 4, nmax = 3;
  double s_rho = 1.0;
  auto* spectrum = app.add_subcommand("spectrum", "Tabulate the S3 frequencies omega = (n + 1 + j)/rho");
  spectrum->add_option("--model", s_model)->transform(CLI::CheckedTransformer(model_map(), CLI::ignore_case));
  spectrum->add_option("--jmax", jmax)->capture_default_str();
  spectrum->add_option("--nmax", nmax)->capture_default_str();
  spectrum->add_option("--rho", s_rho, "Curvature radius")->capture_default_str();
  add_output(spectrum, s_out);

  // mode
  OutputOptions m_out;
  cmx_mode_spec mspec;
  cmx_mode_spec_default(&mspec);
  int m_grid = 20;
  bool m_has_n = false, m_has_omega = false;
  auto* mode = app.add_subcommand("mode", "Sample a mode and its operator residual on a grid");
  mode->add_option("--model", mspec.model)->transform(CLI::CheckedTransformer(model_map(), CLI::ignore_case));
  mode->add_option("--j", mspec.j)->capture_default_str();
  mode->add_option("--m", mspec.m)->capture_default_str();
  mode->add_option("--n", mspec.n, "S3 radial quantum number")->each([&](const std::string&) { m_has_n = true; });
  mode->add_option("--omega", mspec.omega, "H3 frequency")->each([&](const std::string&) { m_has_omega = true; });
  mode->add_option("--rho", mspec.rho, "Curvature radius")->capture_default_str();
  mode->add_option("--detuning", mspec.detuning, "Frequency factor in the time dependence")->capture_default_str();
  mode->add_option("--grid", m_grid, "Points per axis (rows = grid^3)")->capture_default_str();
  add_output(mode, m_out);

  // flatcheck
  OutputOptions f_out;
  int samples = 50;
  std::uint64_t f_seed = 20240607;
  double f_tol_equiv = vcfg.tol.flat, f_tol_analytic = vcfg.tol.flat_analytic, f_tol_fd = vcfg.tol.flat_fd;
  auto* flat = app.add_subcommand("flatcheck", "Flat-space residuals of the built-in analytic fields");
  flat->add_option("--samples", samples, "Points per field")->capture_default_str();
  flat->add_option("--seed", f_seed)->capture_default_str();
  flat->add_option("--tol-flat", f_tol_equiv)->capture_default_str();
  flat->add_option("--tol-flat-analytic", f_tol_analytic)->capture_default_str();
  flat->add_option("--tol-flat-fd", f_tol_fd)->capture_default_str();
  add_output(flat, f_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*verify) {
      if (v_model) vcfg.has_model = 1, vcfg.model = *v_model;
      if (v_j) vcfg.has_j = 1, vcfg.j = *v_j;
      if (v_m) vcfg.has_m = 1, vcfg.m = *v_m;
      if (v_n) vcfg.has_n = 1, vcfg.n = *v_n;
      if (v_omega) vcfg.has_omega = 1, vcfg.omega = *v_omega;
      cmx_report* raw = nullptr;
      check(cmx_verify(scope.c_str(), &vcfg, &raw));
      return print_report(Report(raw).get());
    }
    if (*spectrum) {
      cmx_table* raw = nullptr;
      check(cmx_spectrum(s_model, jmax, nmax, s_rho, &raw));
      if (s_model == CMX_MODEL_H3)
        std::cerr << "h3: no discrete spectrum for frequencies of electromagnetic modes arises\n";
      emit(Table(raw).get(), s_out);
      return 0;
    }
    if (*mode) {
      if (mspec.model == CMX_MODEL_S3 && m_has_omega) throw CliError("s3 modes take --n, not --omega");
      if (mspec.model == CMX_MODEL_H3 && m_has_n) throw CliError("h3 modes take --omega, not --n");
      cmx_table* raw = nullptr;
      check(cmx_mode_grid(&mspec, m_grid, &raw));
      emit(Table(raw).get(), m_out);
      return 0;
    }
    if (*flat) {
      cmx_table* raw = nullptr;
      check(cmx_flat_samples(samples, f_seed, &raw));
      Table t(raw);
      emit(t.get(), f_out);
      const double limit[3] = {f_tol_equiv, f_tol_analytic, f_tol_fd};
      const char* label[3] = {"Re/Im regrouping", "analytic residual", "FD residual"};
      bool ok = true;
      for (std::size_t f = 0; f < cmx_flat_field_count(); ++f)
        for (int k = 0; k < 3; ++k) {
          double worst = 0.0;
          for (std::size_t r = 0; r < cmx_table_rows(t.get()); ++r)
            if (static_cast<std::size_t>(cmx_table_value(t.get(), r, 0)) == f)
              worst = std::max(worst, cmx_table_value(t.get(), r, 5 + k));
          const bool pass = worst <= limit[k];
          ok = ok && pass;
          std::fprintf(stderr, "%s  %-16s %-18s max=%.3e tol<=%.1e\n", pass ? "PASS" : "FAIL",
                       cmx_flat_field_name(f), label[k], worst, limit[k]);
        }
      return ok ? 0 : kExitFail;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
