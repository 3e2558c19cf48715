#include "nullcone/nullcone.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "nullcone/engel.hpp"
#include "nullcone/error.hpp"
#include "nullcone/figure.hpp"
#include "nullcone/lorentz.hpp"
#include "nullcone/metric.hpp"
#include "nullcone/verify.hpp"
#include "nullcone/worked_examples.hpp"

struct nc_metric {
  nullcone::DiagonalMetric metric;
};

struct nc_trajectory {
  nullcone::Trajectory traj;
};

namespace {

thread_local std::string last_error;

nc_status status_of(nullcone::ErrorCode code) {
  using nullcone::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return NC_INVALID_ARGUMENT;
    case ErrorCode::Parse: return NC_PARSE;
    case ErrorCode::Eval: return NC_EVAL;
    case ErrorCode::Signature: return NC_SIGNATURE;
    case ErrorCode::DomainExit: return NC_DOMAIN;
    case ErrorCode::NonNull: return NC_NON_NULL;
    case ErrorCode::PastPointing: return NC_PAST_POINTING;
    case ErrorCode::DegenerateOrbit: return NC_DEGENERATE_ORBIT;
    case ErrorCode::StepUnderflow: return NC_STEP_UNDERFLOW;
    case ErrorCode::Io: return NC_IO;
  }
  return NC_INTERNAL;
}

nc_status fail(nc_status s, const char* msg) {
  last_error = msg;
  return s;
}

// Runs f, translating exceptions into status codes.
template <class F>
nc_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return NC_OK;
  } catch (const nullcone::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(NC_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(NC_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(NC_INTERNAL, e.what());
  } catch (...) {
    return fail(NC_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

nullcone::ChartPoint point(const double x[3]) { return {x[0], x[1], x[2]}; }

#define NC_REQUIRE(cond)                                                   \
  do {                                                                     \
    if (!(cond)) return fail(NC_INVALID_ARGUMENT, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

NULLCONE_API const char* nc_version(void) { return "0.1.0"; }

NULLCONE_API const char* nc_status_name(nc_status status) {
  switch (status) {
    case NC_OK: return "ok";
    case NC_INVALID_ARGUMENT: return "invalid argument";
    case NC_PARSE: return "parse error";
    case NC_EVAL: return "evaluation error";
    case NC_SIGNATURE: return "signature violation";
    case NC_DOMAIN: return "domain exit";
    case NC_NON_NULL: return "non-null vector";
    case NC_PAST_POINTING: return "past-pointing vector";
    case NC_DEGENERATE_ORBIT: return "degenerate orbit";
    case NC_STEP_UNDERFLOW: return "step underflow";
    case NC_IO: return "i/o error";
    case NC_INTERNAL: return "internal error";
  }
  return "unknown status";
}

NULLCONE_API const char* nc_last_error(void) { return last_error.c_str(); }

NULLCONE_API void nc_string_free(char* s) { std::free(s); }

NULLCONE_API nc_status nc_metric_load(const char* source, nc_metric** out) {
  NC_REQUIRE(source && out);
  *out = nullptr;
  return guarded([&] { *out = new nc_metric{nullcone::resolve_metric(source)}; });
}

NULLCONE_API nc_status nc_metric_from_json(const char* json, nc_metric** out) {
  NC_REQUIRE(json && out);
  *out = nullptr;
  return guarded([&] { *out = new nc_metric{nullcone::load_metric(nlohmann::json::parse(json))}; });
}

NULLCONE_API void nc_metric_free(nc_metric* m) { delete m; }

NULLCONE_API const char* nc_metric_name(const nc_metric* m) { return m ? m->metric.name().c_str() : ""; }

NULLCONE_API nc_status nc_metric_domain(const nc_metric* m, double lo[3], double hi[3]) {
  NC_REQUIRE(m && lo && hi);
  for (int i = 0; i < 3; ++i) {
    lo[i] = m->metric.domain().lo[i];
    hi[i] = m->metric.domain().hi[i];
  }
  return NC_OK;
}

NULLCONE_API nc_status nc_metric_eval(const nc_metric* m, const double x[3], double g[3]) {
  NC_REQUIRE(m && x && g);
  return guarded([&] {
    const auto v = m->metric.eval(point(x));
    for (int i = 0; i < 3; ++i) g[i] = v[i];
  });
}

NULLCONE_API nc_status nc_null_residual(const nc_metric* m, const double x[3], const double v[3], double* out) {
  NC_REQUIRE(m && x && v && out);
  return guarded([&] { *out = nullcone::null_residual(m->metric, point(x), {v[0], v[1], v[2]}); });
}

NULLCONE_API nc_status nc_cone_embed(const nc_metric* m, const double x[3], double theta, double v[3]) {
  NC_REQUIRE(m && x && v);
  return guarded([&] {
    const nullcone::Vec3 e = nullcone::cone_embed(m->metric, nullcone::ConePoint(point(x), theta));
    v[0] = e.x;
    v[1] = e.y;
    v[2] = e.z;
  });
}

NULLCONE_API nc_status nc_cone_lift(const nc_metric* m, const double x[3], const double v[3], double* theta) {
  NC_REQUIRE(m && x && v && theta);
  return guarded([&] { *theta = nullcone::cone_lift(m->metric, point(x), {v[0], v[1], v[2]}).theta(); });
}

NULLCONE_API nc_status nc_kernel_coeffs(const nc_metric* m, const double x[3], double theta, double fgh[3]) {
  NC_REQUIRE(m && x && fgh);
  return guarded([&] {
    const auto k = nullcone::kernel_coeffs(m->metric, nullcone::ConePoint(point(x), theta));
    fgh[0] = k.F;
    fgh[1] = k.G;
    fgh[2] = k.H;
  });
}

NULLCONE_API nc_status nc_geodesic_integrate(const nc_metric* m, const double x0[3], double theta0, double T,
                                             double h, nc_trajectory** out) {
  NC_REQUIRE(m && x0 && out);
  *out = nullptr;
  return guarded([&] {
    const nullcone::ConePoint cp(point(x0), theta0);
    if (!m->metric.domain().contains(cp.base()))
      throw nullcone::Error(nullcone::ErrorCode::DomainExit, "start point outside the metric domain");
    *out = new nc_trajectory{
        nullcone::integrate_geodesic(m->metric, cp.base(), nullcone::cone_embed(m->metric, cp), T, h)};
  });
}

NULLCONE_API nc_status nc_kernel_flow(const nc_metric* m, const double x0[3], double theta0, double T, double h,
                                      nc_trajectory** out) {
  NC_REQUIRE(m && x0 && out);
  *out = nullptr;
  return guarded([&] {
    *out = new nc_trajectory{nullcone::kernel_flow(m->metric, nullcone::ConePoint(point(x0), theta0), T, h)};
  });
}

NULLCONE_API size_t nc_trajectory_size(const nc_trajectory* t) { return t ? t->traj.samples.size() : 0; }

NULLCONE_API int nc_trajectory_truncated(const nc_trajectory* t) { return t && t->traj.truncated ? 1 : 0; }

NULLCONE_API nc_status nc_trajectory_sample(const nc_trajectory* t, size_t i, double row[6]) {
  NC_REQUIRE(t && row);
  if (i >= t->traj.samples.size()) return fail(NC_INVALID_ARGUMENT, "sample index out of range");
  const auto& s = t->traj.samples[i];
  row[0] = s.s;
  row[1] = s.x.x1;
  row[2] = s.x.x2;
  row[3] = s.x.x3;
  row[4] = s.theta;
  row[5] = s.null_residual;
  return NC_OK;
}

NULLCONE_API nc_status nc_trajectory_csv(const nc_trajectory* t, char** csv) {
  NC_REQUIRE(t && csv);
  *csv = nullptr;
  return guarded([&] {
    std::ostringstream os;
    nullcone::write_trajectory_csv(os, t->traj);
    *csv = copy_string(os.str());
  });
}

NULLCONE_API void nc_trajectory_free(nc_trajectory* t) { delete t; }

NULLCONE_API void nc_verify_options_default(nc_verify_options* opts) {
  if (!opts) return;
  opts->seed = 7;
  opts->samples = 0;
  opts->tolerance_scale = 1.0;
  opts->metric = nullptr;
}

NULLCONE_API nc_status nc_verify(const char* suite, const nc_verify_options* opts, char** json, int* all_pass) {
  NC_REQUIRE(suite && json);
  *json = nullptr;
  return guarded([&] {
    nullcone::VerifyOptions o;
    if (opts) {
      o.seed = opts->seed;
      o.samples = opts->samples;
      o.tolerance_scale = opts->tolerance_scale;
      if (opts->metric) o.metric = opts->metric;
    }
    const auto reports = nullcone::run_suite(suite, o);
    bool pass = true;
    for (const auto& r : reports) pass = pass && r.pass;
    *json = copy_string(nullcone::reports_to_json(reports));
    if (all_pass) *all_pass = pass ? 1 : 0;
  });
}

NULLCONE_API nc_status nc_orbit_table(int c, uint64_t seed, char** json) {
  NC_REQUIRE(json);
  *json = nullptr;
  return guarded([&] {
    nullcone::Rng rng = nullcone::check_rng(seed, "orbit");
    *json = copy_string(nullcone::orbit_table(c, nullcone::random_unit_quaternion(rng)).dump(2));
  });
}

NULLCONE_API nc_status nc_figure1_svg(int c, char** svg) {
  NC_REQUIRE(svg);
  *svg = nullptr;
  return guarded([&] { *svg = copy_string(nullcone::figure1_svg(c)); });
}

}  // extern "C"
