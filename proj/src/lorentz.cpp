#include "nullcone/lorentz.hpp"

#include <cmath>
#include <cstdio>

#include "nullcone/error.hpp"

namespace nullcone {

Christoffel christoffel(const DiagonalMetric& m, const ChartPoint& p) {
  const MetricSample s = m.sample(p);
  Christoffel gamma{};
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double t = 0.0;
        if (k == j) t += s.dg[k][i];
        if (k == i) t += s.dg[k][j];
        if (i == j) t -= s.dg[i][k];
        gamma[k][i][j] = 0.5 * t / s.g[k];
      }
  return gamma;
}

double null_residual(const DiagonalMetric& m, const ChartPoint& p, Vec3 v) {
  const auto g = m.eval(p);
  return v.x * v.x * g[0] + v.y * v.y * g[1] + v.z * v.z * g[2];
}

double cone_angle(const DiagonalMetric& m, const ChartPoint& p, Vec3 v) {
  const auto g = m.eval(p);
  const double c = (v.x / v.z) * std::sqrt(g[0] / -g[2]);
  const double s = (v.y / v.z) * std::sqrt(g[1] / -g[2]);
  return wrap_angle(std::atan2(s, c));
}

ConePoint cone_lift(const DiagonalMetric& m, const ChartPoint& p, Vec3 v) {
  const double r = null_residual(m, p, v);
  if (!(std::abs(r) <= 1e-8 * dot(v, v)))
    throw Error(ErrorCode::NonNull, "vector is not null: g(v,v) = " + std::to_string(r));
  if (!(v.z > 0.0)) throw Error(ErrorCode::PastPointing, "vector is not future pointing");
  return ConePoint(p, cone_angle(m, p, v));
}

Vec3 cone_embed(const DiagonalMetric& m, const ConePoint& cp) {
  const auto g = m.eval(cp.base());
  return {std::cos(cp.theta()) / std::sqrt(g[0]), std::sin(cp.theta()) / std::sqrt(g[1]),
          1.0 / std::sqrt(-g[2])};
}

State<6> geodesic_rhs(const DiagonalMetric& m, const State<6>& y) {
  const ChartPoint p{y[0], y[1], y[2]};
  const Christoffel gamma = christoffel(m, p);
  State<6> dy{y[3], y[4], y[5], 0.0, 0.0, 0.0};
  for (int k = 0; k < 3; ++k) {
    double a = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) a -= gamma[k][i][j] * y[3 + i] * y[3 + j];
    dy[3 + k] = a;
  }
  return dy;
}

long step_count(double T, double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw Error(ErrorCode::InvalidArgument, "step must be positive");
  if (!(T >= 0.0) || !std::isfinite(T)) throw Error(ErrorCode::InvalidArgument, "horizon must be non-negative");
  const double n = std::ceil(T / h - 1e-9);
  if (n > 1e8 || h < 1e-12 * std::max(1.0, T))
    throw Error(ErrorCode::StepUnderflow, "step too small for the requested horizon");
  return static_cast<long>(n);
}

namespace {

TrajectorySample make_sample(const DiagonalMetric& m, double s, const State<6>& y) {
  TrajectorySample out;
  out.s = s;
  out.x = {y[0], y[1], y[2]};
  out.velocity = {y[3], y[4], y[5]};
  out.theta = cone_angle(m, out.x, out.velocity);
  out.null_residual = std::abs(null_residual(m, out.x, out.velocity));
  return out;
}

}  // namespace

Trajectory integrate_geodesic(const DiagonalMetric& m, const ChartPoint& p0, Vec3 v0, double T,
                              double h) {
  const long n = step_count(T, h);
  if (!m.domain().contains(p0)) throw Error(ErrorCode::DomainExit, "start point outside the metric domain");
  const double r = null_residual(m, p0, v0);
  if (!(std::abs(r) <= 1e-10 * std::max(1.0, dot(v0, v0))))
    throw Error(ErrorCode::NonNull, "initial velocity is not null: g(v,v) = " + std::to_string(r));

  auto rhs = [&m](const State<6>& y) { return geodesic_rhs(m, y); };
  Trajectory traj;
  traj.samples.reserve(static_cast<std::size_t>(n) + 1);
  State<6> y{p0.x1, p0.x2, p0.x3, v0.x, v0.y, v0.z};
  traj.samples.push_back(make_sample(m, 0.0, y));
  for (long k = 0; k < n; ++k) {
    const double s0 = k * h;
    const double step = (k == n - 1) ? T - s0 : h;
    const State<6> next = rk4_step(rhs, y, step);
    if (!m.domain().contains(ChartPoint{next[0], next[1], next[2]})) {
      traj.truncated = true;
      break;
    }
    y = next;
    traj.samples.push_back(make_sample(m, k == n - 1 ? T : s0 + h, y));
  }
  return traj;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
  os << "s,x1,x2,x3,theta,null_residual\n";
  char buf[256];
  for (const auto& s : traj.samples) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", s.s, s.x.x1, s.x.x2,
                  s.x.x3, s.theta, s.null_residual);
    os << buf;
  }
}

}  // namespace nullcone
