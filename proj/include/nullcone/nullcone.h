/* C interface to the nullcone library. All functions report failures through
 * nc_status; the message of the most recent failure on the calling thread is
 * available from nc_last_error(). Strings returned through char** belong to
 * the caller and are released with nc_string_free(). */
#ifndef NULLCONE_NULLCONE_H
#define NULLCONE_NULLCONE_H

#include <stddef.h>
#include <stdint.h>

#if defined(NULLCONE_BUILDING_LIBRARY)
#define NULLCONE_API __attribute__((visibility("default")))
#else
#define NULLCONE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nc_status {
  NC_OK = 0,
  NC_INVALID_ARGUMENT,
  NC_PARSE,
  NC_EVAL,
  NC_SIGNATURE,
  NC_DOMAIN,
  NC_NON_NULL,
  NC_PAST_POINTING,
  NC_DEGENERATE_ORBIT,
  NC_STEP_UNDERFLOW,
  NC_IO,
  NC_INTERNAL
} nc_status;

typedef struct nc_metric nc_metric;
typedef struct nc_trajectory nc_trajectory;

NULLCONE_API const char* nc_version(void);
NULLCONE_API const char* nc_status_name(nc_status status);
NULLCONE_API const char* nc_last_error(void);
NULLCONE_API void nc_string_free(char* s);

/* Metrics. `source` is a built-in name ("minkowski3", "s2s1:c=<n>",
 * "warped-sin4") or a path to a metric JSON file. */
NULLCONE_API nc_status nc_metric_load(const char* source, nc_metric** out);
NULLCONE_API nc_status nc_metric_from_json(const char* json, nc_metric** out);
NULLCONE_API void nc_metric_free(nc_metric* m);
NULLCONE_API const char* nc_metric_name(const nc_metric* m);
NULLCONE_API nc_status nc_metric_domain(const nc_metric* m, double lo[3], double hi[3]);
NULLCONE_API nc_status nc_metric_eval(const nc_metric* m, const double x[3], double g[3]);

/* Cone geometry at chart point x. */
NULLCONE_API nc_status nc_null_residual(const nc_metric* m, const double x[3], const double v[3], double* out);
NULLCONE_API nc_status nc_cone_embed(const nc_metric* m, const double x[3], double theta, double v[3]);
NULLCONE_API nc_status nc_cone_lift(const nc_metric* m, const double x[3], const double v[3], double* theta);
NULLCONE_API nc_status nc_kernel_coeffs(const nc_metric* m, const double x[3], double theta, double fgh[3]);

/* Trajectories start at (x0, theta0); a geodesic starts with the null
 * velocity of angle theta0. Rows are (s, x1, x2, x3, theta, null_residual). */
NULLCONE_API nc_status nc_geodesic_integrate(const nc_metric* m, const double x0[3], double theta0, double T,
                                             double h, nc_trajectory** out);
NULLCONE_API nc_status nc_kernel_flow(const nc_metric* m, const double x0[3], double theta0, double T, double h,
                                      nc_trajectory** out);
NULLCONE_API size_t nc_trajectory_size(const nc_trajectory* t);
NULLCONE_API int nc_trajectory_truncated(const nc_trajectory* t);
NULLCONE_API nc_status nc_trajectory_sample(const nc_trajectory* t, size_t i, double row[6]);
NULLCONE_API nc_status nc_trajectory_csv(const nc_trajectory* t, char** csv);
NULLCONE_API void nc_trajectory_free(nc_trajectory* t);

typedef struct nc_verify_options {
  uint64_t seed;
  int samples;            /* 0 keeps each check's default */
  double tolerance_scale; /* multiplies every threshold */
  const char* metric;     /* NULL or "" for all built-in metrics */
} nc_verify_options;

NULLCONE_API void nc_verify_options_default(nc_verify_options* opts);

/* Runs a suite ("all", "hopf", "engel", "kernel", "contact", "lens",
 * "examples") and returns the reports as a JSON array sorted by check name.
 * *all_pass is 1 when every check passed. */
NULLCONE_API nc_status nc_verify(const char* suite, const nc_verify_options* opts, char** json, int* all_pass);

/* Z_2c orbit of a seeded random unit quaternion and Z_c orbit of its image
 * in ST S^2, as JSON. */
NULLCONE_API nc_status nc_orbit_table(int c, uint64_t seed, char** json);

/* SVG of a null geodesic of S^2 x S^1 with its c slice points marked. */
NULLCONE_API nc_status nc_figure1_svg(int c, char** svg);

#ifdef __cplusplus
}
#endif

#endif /* NULLCONE_NULLCONE_H */
