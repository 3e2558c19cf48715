#include "nullcone/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <memory>
#include <numbers>
#include <thread>

#include "nullcone/engel.hpp"
#include "nullcone/error.hpp"
#include "nullcone/hopf.hpp"
#include "nullcone/lorentz.hpp"
#include "nullcone/metric.hpp"
#include "nullcone/sampling.hpp"
#include "nullcone/worked_examples.hpp"

namespace nullcone {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Task {
  std::string name;  // seeds the generator
  std::function<std::vector<CheckReport>(Rng&)> run;
};

using MetricPtr = std::shared_ptr<const DiagonalMetric>;

// A passing control means the wrapped check failed, as it should.
CheckReport control_report(std::string name, const CheckReport& inner) {
  const double r = inner.max_residual > 0.0 ? 1.0 / inner.max_residual : kInf;
  return make_report(std::move(name), inner.samples, r, 1.0 / inner.threshold, inner.worst_point);
}

std::array<double, 4> quat_point(const Quaternion& q) { return {q.w, q.x, q.y, q.z}; }

// ---------------------------------------------------------------- hopf

CheckReport conjugation_unit(int n, Rng& rng) {
  ResidualTracker t;
  for (int i = 0; i < n; ++i) {
    const UnitQuaternion q = random_unit_quaternion(rng);
    const UnitImag w = random_unit_imag(rng);
    const Quaternion r = quat_mul(quat_mul(q.inverse().value(), w.value()), q.value());
    t.add(std::max(std::abs(r.w), std::abs(r.norm() - 1.0)), quat_point(q.value()));
  }
  return t.report("conjugation_unit", 1e-12);
}

CheckReport quat_assoc(int n, Rng& rng) {
  ResidualTracker t;
  for (int i = 0; i < n; ++i) {
    const Quaternion a = random_unit_quaternion(rng).value();
    const Quaternion b = random_unit_quaternion(rng).value();
    const Quaternion c = random_unit_quaternion(rng).value();
    t.add(distance(quat_mul(quat_mul(a, b), c), quat_mul(a, quat_mul(b, c))), quat_point(a));
  }
  return t.report("quat_assoc", 1e-12);
}

CheckReport products_euclidean(int n, Rng& rng) {
  ResidualTracker t;
  for (int i = 0; i < n; ++i) {
    const UnitImag u = random_unit_imag(rng);
    const UnitImag v = random_unit_imag(rng);
    const ImagProducts p = imag_products(u, v);
    const double r = std::max({std::abs(p.cross.w), norm(p.cross.imag() - cross(u.vec(), v.vec())),
                               std::abs(p.inner - dot(u.vec(), v.vec()))});
    t.add(r, {u.vec().x, u.vec().y, u.vec().z, 0.0});
  }
  return t.report("products_euclidean", 1e-12);
}

CheckReport hopf_fiber_invariance(int n, Rng& rng) {
  ResidualTracker t;
  for (int i = 0; i < n; ++i) {
    const UnitImag w = random_unit_imag(rng);
    const UnitQuaternion q = random_unit_quaternion(rng);
    const double theta = uniform(rng, 0.0, 2.0 * kPi);
    const Vec3 a = hopf_tau(w, quat_exp(w, theta) * q).vec();
    const Vec3 b = hopf_tau(w, q).vec();
    t.add(std::max(norm(a - b), std::abs(norm(a) - 1.0)), quat_point(q.value()));
  }
  return t.report("hopf_fiber_invariance", 1e-12);
}

CheckReport hopf_section_roundtrip(int n, Rng& rng) {
  ResidualTracker t;
  for (int i = 0; i < n; ++i) {
    const UnitImag w = random_unit_imag(rng);
    const UnitImag p = random_unit_imag(rng);
    const Vec3 back = hopf_tau(w, hopf_section(w, p)).vec();
    t.add(norm(back - p.vec()), {p.vec().x, p.vec().y, p.vec().z, 0.0});
  }
  return t.report("hopf_section_roundtrip", 1e-10);
}

CheckReport phi_antipodal(int n, Rng& rng) {
  ResidualTracker t;
  for (int i = 0; i < n; ++i) {
    const UnitQuaternion q = random_unit_quaternion(rng);
    t.add(distance(big_phi(q), big_phi(-q)), quat_point(q.value()));
  }
  return t.report("phi_antipodal", 1e-15);
}

// Pairs whose images under big_phi nearly collide must be antipodal or equal.
CheckReport phi_two_to_one(int n, Rng& rng) {
  ResidualTracker t;
  std::normal_distribution<double> normal;
  for (int i = 0; i < n; ++i) {
    const UnitQuaternion q1 = random_unit_quaternion(rng);
    UnitQuaternion q2;
    if (i % 2 == 0) {
      q2 = big_phi_preimage(big_phi(q1));
    } else {
      const double sign = (i % 4 == 1) ? 1.0 : -1.0;
      const Quaternion d{normal(rng), normal(rng), normal(rng), normal(rng)};
      q2 = UnitQuaternion::normalize(sign * q1.value() + 1e-12 * d);
    }
    if (distance(big_phi(q1), big_phi(q2)) > 1e-10) continue;
    const double r = std::min(distance(q1.value(), q2.value()), distance(q1.value(), -q2.value()));
    t.add(r, quat_point(q1.value()));
  }
  return t.report("phi_two_to_one", 1e-8);
}

// ---------------------------------------------------------------- lens

CheckReport lens_equivariance(int c, int n, Rng& rng) {
  ResidualTracker t;
  for (int i = 0; i < n; ++i) {
    const UnitQuaternion q = random_unit_quaternion(rng);
    t.add(distance(big_phi(lens_act(c, 1, q)), zc_act_sts2(c, big_phi(q))), quat_point(q.value()));
  }
  return t.report("lens_equivariance:c=" + std::to_string(c), 1e-12);
}

// -------------------------------------------------------------- kernel

ConePoint draw_cone_point(const DiagonalMetric& m, Rng& rng) { return random_cone_point(rng, m.sampling_box()); }

// Geodesic from a random cone point, redrawn while it leaves the chart.
Trajectory draw_geodesic(const DiagonalMetric& m, Rng& rng, double T, double h, ConePoint& start) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    start = draw_cone_point(m, rng);
    Trajectory traj = integrate_geodesic(m, start.base(), cone_embed(m, start), T, h);
    if (!traj.truncated) return traj;
  }
  throw Error(ErrorCode::DomainExit, "no sampled geodesic stays inside the domain of " + m.name());
}

CheckReport theta_ode_check(const DiagonalMetric& m, int trials, Rng& rng) {
  ResidualTracker t;
  for (int i = 0; i < trials; ++i) {
    ConePoint start;
    const Trajectory traj = draw_geodesic(m, rng, 1.0, 1e-3, start);
    const CheckReport r = theta_ode_residual(m, traj);
    t.add(r.max_residual, r.worst_point);
  }
  return t.report("theta_ode:" + m.name(), 1e-4);
}

CheckReport null_conservation(const DiagonalMetric& m, int trials, Rng& rng) {
  ResidualTracker t;
  for (int i = 0; i < trials; ++i) {
    ConePoint start;
    const Trajectory traj = draw_geodesic(m, rng, 2.0 * kPi, 1e-3, start);
    double worst = 0.0;
    for (const auto& s : traj.samples) worst = std::max(worst, s.null_residual);
    t.add(worst, {start.base().x1, start.base().x2, start.base().x3, start.theta()});
  }
  return t.report("null_conservation:" + m.name(), 1e-8);
}

CheckReport rk4_order() {
  const double ratio = rk4_error_ratio(64);
  return make_report("rk4_order", 2, std::abs(ratio - 16.0), 4.0, {kPi / 2.0, 0.0, 0.0, kPi / 4.0});
}

// --------------------------------------------------------------- suites

int pick(const VerifyOptions& o, int fallback) { return o.samples > 0 ? o.samples : fallback; }

std::vector<MetricPtr> metrics_for(const VerifyOptions& o) {
  std::vector<MetricPtr> out;
  if (!o.metric.empty()) {
    out.push_back(std::make_shared<const DiagonalMetric>(resolve_metric(o.metric)));
    return out;
  }
  for (const auto& name : builtin_metric_names())
    out.push_back(std::make_shared<const DiagonalMetric>(builtin_metric(name)));
  return out;
}

template <class F>
Task single(std::string name, F f) {
  return {name, [f](Rng& rng) { return std::vector<CheckReport>{f(rng)}; }};
}

void hopf_tasks(const VerifyOptions& o, std::vector<Task>& tasks) {
  const int n = pick(o, 1000);
  const int big = pick(o, 10000);
  tasks.push_back(single("conjugation_unit", [big](Rng& r) { return conjugation_unit(big, r); }));
  tasks.push_back(single("quat_assoc", [n](Rng& r) { return quat_assoc(n, r); }));
  tasks.push_back(single("products_euclidean", [n](Rng& r) { return products_euclidean(n, r); }));
  tasks.push_back(single("hopf_fiber_invariance", [n](Rng& r) { return hopf_fiber_invariance(n, r); }));
  tasks.push_back(single("hopf_section_roundtrip", [n](Rng& r) { return hopf_section_roundtrip(n, r); }));
  tasks.push_back(single("phi_antipodal", [n](Rng& r) { return phi_antipodal(n, r); }));
  tasks.push_back(single("phi_two_to_one", [n](Rng& r) { return phi_two_to_one(n, r); }));
}

void lens_tasks(const VerifyOptions& o, std::vector<Task>& tasks) {
  const int n = pick(o, 100);
  for (int c = 1; c <= 6; ++c)
    tasks.push_back(single("lens_equivariance:c=" + std::to_string(c),
                           [c, n](Rng& r) { return lens_equivariance(c, n, r); }));
  for (int c = 1; c <= 4; ++c)
    tasks.push_back({"lens_identification:c=" + std::to_string(c), [c, n](Rng& r) {
                       const LensIdentification li = lens_identification_check(c, std::max(n, 2), r);
                       return std::vector<CheckReport>{li.identification, li.distinct};
                     }});
  tasks.push_back(single("slice_consistency", [n](Rng& r) { return slice_consistency_check(n, r); }));
}

void engel_tasks(const VerifyOptions& o, const std::vector<MetricPtr>& metrics, std::vector<Task>& tasks) {
  const int n = pick(o, 500);
  for (const auto& m : metrics) {
    tasks.push_back(single("engel_rank:" + m->name(), [m, n](Rng& r) { return engel_rank_check(*m, n, r); }));
    tasks.push_back({"kernel_char:" + m->name(), [m, n](Rng& r) {
                       const KernelCharResult k = kernel_char_check(*m, n, r);
                       return std::vector<CheckReport>{k.kernel, k.uniqueness};
                     }});
    if (m->is_flat()) continue;
    tasks.push_back(single("kernel_perturbed_control:" + m->name(), [m, n](Rng& r) {
      const KernelOptions perturbed{KernelVariant::Perturbed, 0.1};
      return control_report("kernel_perturbed_control:" + m->name(),
                            kernel_char_check(*m, n, r, perturbed).kernel);
    }));
    // Dropping the theta term only changes the field where F, G, H do not vanish.
    if (m->name().rfind("s2s1:", 0) == 0)
      tasks.push_back(single("kernel_char_control:" + m->name(), [m, n](Rng& r) {
        const KernelOptions drop{KernelVariant::DropTheta, 0.0};
        return control_report("kernel_char_control:" + m->name(), kernel_char_check(*m, n, r, drop).kernel);
      }));
  }
}

void kernel_tasks(const VerifyOptions& o, const std::vector<MetricPtr>& metrics, std::vector<Task>& tasks) {
  const int trials = pick(o, 10);
  for (const auto& m : metrics) {
    tasks.push_back(single("spray_equiv:" + m->name(),
                           [m, trials](Rng& r) { return spray_equiv_check(*m, trials, r); }));
    tasks.push_back(single("theta_ode:" + m->name(), [m, trials](Rng& r) { return theta_ode_check(*m, trials, r); }));
    tasks.push_back(single("null_conservation:" + m->name(),
                           [m, trials](Rng& r) { return null_conservation(*m, trials, r); }));
    if (m->is_flat()) continue;
    tasks.push_back(single("spray_control:" + m->name(), [m, trials](Rng& r) {
      const KernelOptions perturbed{KernelVariant::Perturbed, 0.1};
      return control_report("spray_control:" + m->name(), spray_equiv_check(*m, trials, r, perturbed));
    }));
  }
  tasks.push_back(single("rk4_order", [](Rng&) { return rk4_order(); }));
}

void contact_tasks(const VerifyOptions& o, std::vector<Task>& tasks) {
  const int n = pick(o, 200);
  for (int c = 1; c <= 4; ++c)
    tasks.push_back(single("sky_tangency:c=" + std::to_string(c),
                           [c, n](Rng& r) { return sky_tangency_check(c, n, r); }));
  const int m = pick(o, 100);
  tasks.push_back(single("mink_deprolong_contact", [m](Rng& r) { return mink_deprolong_contact_check(m, r); }));
}

void examples_tasks(const VerifyOptions& o, std::vector<Task>& tasks) {
  const int fol = pick(o, 200);
  const int n = pick(o, 1000);
  const int geo = pick(o, 100);
  for (auto ex : {FoliationExample::Minkowski, FoliationExample::S2S1}) {
    const std::string suffix = ex == FoliationExample::Minkowski ? "minkowski" : "s2s1";
    tasks.push_back(single("foliation:" + suffix, [ex, fol](Rng& r) { return foliation_check(ex, fol, r); }));
    tasks.push_back(
        single("foliation_control:" + suffix, [ex, fol](Rng& r) { return foliation_control(ex, fol, r); }));
  }
  tasks.push_back(single("mink_cone_null", [n](Rng& r) { return mink_cone_null_check(n, r); }));
  tasks.push_back(single("mink_cot_pullback", [n](Rng& r) { return mink_cot_pullback_check(n, r); }));
  tasks.push_back(single("s2s1_closure", [geo](Rng& r) { return s2s1_closure_check(geo, r); }));
  tasks.push_back(
      single("sts2_deprolong_invariance", [n](Rng& r) { return sts2_deprolong_invariance_check(n, r); }));
}

std::vector<CheckReport> run_tasks(const std::vector<Task>& tasks, std::uint64_t seed) {
  std::vector<std::vector<CheckReport>> results(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        Rng rng = check_rng(seed, tasks[i].name);
        results[i] = tasks[i].run(rng);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n_threads =
      std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(tasks.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n_threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<CheckReport> out;
  for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"all", "hopf", "engel", "kernel", "contact", "lens", "examples"};
  return names;
}

std::vector<CheckReport> run_suite(std::string_view suite, const VerifyOptions& opts) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw Error(ErrorCode::InvalidArgument, "unknown suite '" + std::string(suite) + "'");
  if (opts.samples < 0) throw Error(ErrorCode::InvalidArgument, "samples must be non-negative");
  if (!(opts.tolerance_scale >= 0.0)) throw Error(ErrorCode::InvalidArgument, "tolerance scale must be non-negative");

  const bool all = suite == "all";
  std::vector<Task> tasks;
  if (all || suite == "hopf") hopf_tasks(opts, tasks);
  if (all || suite == "lens") lens_tasks(opts, tasks);
  if (all || suite == "engel" || suite == "kernel") {
    const auto metrics = metrics_for(opts);
    if (all || suite == "engel") engel_tasks(opts, metrics, tasks);
    if (all || suite == "kernel") kernel_tasks(opts, metrics, tasks);
  }
  if (all || suite == "contact") contact_tasks(opts, tasks);
  if (all || suite == "examples") examples_tasks(opts, tasks);
  if (!opts.only.empty())
    std::erase_if(tasks, [&](const Task& t) {
      return std::none_of(opts.only.begin(), opts.only.end(),
                          [&](const std::string& p) { return t.name.rfind(p, 0) == 0; });
    });

  std::vector<CheckReport> reports = run_tasks(tasks, opts.seed);
  for (auto& r : reports) r = scale_threshold(std::move(r), opts.tolerance_scale);
  std::sort(reports.begin(), reports.end(),
            [](const CheckReport& a, const CheckReport& b) { return a.check < b.check; });
  return reports;
}

double rk4_error_ratio(int n) {
  const DiagonalMetric m = builtin_metric("s2s1:c=1");
  const ChartPoint p0{kPi / 2.0, 0.0, 0.0};
  const Vec3 v0 = cone_embed(m, ConePoint(p0, kPi / 4.0));
  const ChartPoint target{p0.x1, p0.x2 + 2.0 * kPi, p0.x3 + 2.0 * kPi};
  auto endpoint_error = [&](int steps) {
    const Trajectory t = integrate_geodesic(m, p0, v0, 2.0 * kPi, 2.0 * kPi / steps);
    if (t.truncated) return kInf;
    const ChartPoint e = t.samples.back().x;
    return std::sqrt((e.x1 - target.x1) * (e.x1 - target.x1) + (e.x2 - target.x2) * (e.x2 - target.x2) +
                     (e.x3 - target.x3) * (e.x3 - target.x3));
  };
  return endpoint_error(n) / endpoint_error(2 * n);
}

}  // namespace nullcone
