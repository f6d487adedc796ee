/* SPDX-License-Identifier: Apache-2.0
 *
 * C interface of libcurved_maxwell. All handles are opaque and owned by the
 * caller once returned; release them with the matching *_free function.
 * Functions returning cmx_status leave a message in cmx_last_error() on
 * failure (thread-local, valid until the next failing call on that thread).
 */
#ifndef CMX_CMX_H
#define CMX_CMX_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CMX_API __declspec(dllexport)
#else
#define CMX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cmx_status {
  CMX_OK = 0,
  CMX_ERR_INVALID_ARGUMENT = 1,
  CMX_ERR_DOMAIN = 2,
  CMX_ERR_NOT_QUANTIZED = 3,
  CMX_ERR_CONVERGENCE = 4,
  CMX_ERR_INTEGRATION = 5,
  CMX_ERR_CONSTRAINT = 6,
  CMX_ERR_INTERNAL = 99
} cmx_status;

typedef enum cmx_model { CMX_MODEL_S3 = 0, CMX_MODEL_H3 = 1 } cmx_model;

typedef struct cmx_report cmx_report;
typedef struct cmx_table cmx_table;

CMX_API const char* cmx_version(void);
CMX_API const char* cmx_last_error(void);
CMX_API const char* cmx_status_name(cmx_status status);

typedef struct cmx_tolerances {
  double algebra;
  double geometry;
  double tetrad;
  double metric_compatibility;
  double wigner;
  double wigner_fd;
  double quadrature;
  double radial;
  double oracle_s3;
  double oracle_h3;
  double variable_change;
  double regularity;
  double operator_analytic;
  double operator_fd;
  double flat;
  double flat_analytic;
  double flat_fd;
  double detuning_margin;
} cmx_tolerances;

typedef struct cmx_verify_config {
  cmx_tolerances tol;
  /* Each has_* flag enables the field after it. */
  int has_model;
  cmx_model model;
  int has_j;
  int j;
  int has_m;
  int m;
  int has_n;
  int n;
  int has_omega;
  double omega;
  int grid;
  uint64_t seed;
} cmx_verify_config;

CMX_API void cmx_verify_config_default(cmx_verify_config* cfg);

/* scope: algebra, geometry, wigner, radial, modes, flat or all. */
CMX_API cmx_status cmx_verify(const char* scope, const cmx_verify_config* cfg, cmx_report** out);

typedef struct cmx_check {
  const char* name;
  double observed;
  double tolerance;
  int upper_bound; /* 1: pass iff observed <= tolerance; 0: pass iff observed >= tolerance */
  int passed;
} cmx_check;

CMX_API size_t cmx_report_suite_count(const cmx_report* r);
CMX_API const char* cmx_report_suite_scope(const cmx_report* r, size_t suite);
CMX_API double cmx_report_suite_seconds(const cmx_report* r, size_t suite);
CMX_API size_t cmx_report_check_count(const cmx_report* r, size_t suite);
CMX_API cmx_status cmx_report_check(const cmx_report* r, size_t suite, size_t check, cmx_check* out);
CMX_API int cmx_report_passed(const cmx_report* r);
CMX_API void cmx_report_free(cmx_report* r);

/* Rows (j, n, omega, degeneracy) for 1 <= j <= j_max, 0 <= n <= n_max.
 * H3 has no discrete spectrum: the table has the same columns and no rows. */
CMX_API cmx_status cmx_spectrum(cmx_model model, int j_max, int n_max, double rho, cmx_table** out);

typedef struct cmx_mode_spec {
  cmx_model model;
  int j;
  int m;
  int n;          /* S3 only */
  double omega;   /* H3 only */
  double rho;
  double detuning; /* 1 for a true mode */
} cmx_mode_spec;

CMX_API void cmx_mode_spec_default(cmx_mode_spec* spec);

/* grid_n^3 rows (t, chi, theta, phi, re_psi1..3, im_psi1..3, E1..3, cB1..3,
 * residual); psi in the cyclic basis. */
CMX_API cmx_status cmx_mode_grid(const cmx_mode_spec* spec, int grid_n, cmx_table** out);

/* Per-sample flat-space residuals for each built-in analytic field:
 * (field, t, x, y, z, equivalence, analytic, fd). */
CMX_API cmx_status cmx_flat_samples(int samples_per_field, uint64_t seed, cmx_table** out);
CMX_API size_t cmx_flat_field_count(void);
CMX_API const char* cmx_flat_field_name(size_t field);

CMX_API size_t cmx_table_rows(const cmx_table* t);
CMX_API size_t cmx_table_columns(const cmx_table* t);
CMX_API const char* cmx_table_column_name(const cmx_table* t, size_t column);
CMX_API int cmx_table_column_is_integer(const cmx_table* t, size_t column);
CMX_API double cmx_table_value(const cmx_table* t, size_t row, size_t column);
/* Row-major data, rows * columns values. */
CMX_API const double* cmx_table_data(const cmx_table* t);
CMX_API void cmx_table_free(cmx_table* t);

#ifdef __cplusplus
}
#endif

#endif /* CMX_CMX_H */
