#include "nullcone/engel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "nullcone/error.hpp"
#include "nullcone/linalg.hpp"

namespace nullcone {

namespace {

std::array<double, 4> point_of(const ConePoint& cp) {
  return {cp.base().x1, cp.base().x2, cp.base().x3, cp.theta()};
}

double kernel_theta_coefficient(const DiagonalMetric& m, const ConePoint& cp, const KernelOptions& opts) {
  if (opts.variant == KernelVariant::DropTheta) return 0.0;
  const KernelCoeffs k = kernel_coeffs(m, cp);
  const double t = cp.theta();
  double a = k.F * std::cos(t) + k.G * std::sin(t) + k.H;
  if (opts.variant == KernelVariant::Perturbed) a += opts.perturbation;
  return a;
}

Vec4 x_field(const DiagonalMetric& m, const ConePoint& cp) {
  const Vec3 v = cone_embed(m, cp);
  return {v.x, v.y, v.z, 0.0};
}

}  // namespace

KernelCoeffs kernel_coeffs(const DiagonalMetric& m, const ConePoint& cp) {
  const MetricSample s = m.sample(cp.base());
  const auto& g = s.g;
  const auto& d = s.dg;
  const double r1 = std::sqrt(g[0]), r2 = std::sqrt(g[1]), r3 = std::sqrt(-g[2]);
  const double c = std::cos(cp.theta()), sn = std::sin(cp.theta());
  KernelCoeffs k;
  k.F = (d[0][1] / r2 + sn * d[0][2] / r3) / (2.0 * g[0]);
  k.G = -(d[1][0] / r1 + c * d[1][2] / r3) / (2.0 * g[1]);
  k.H = (sn * d[2][0] / r1 - c * d[2][1] / r2) / (2.0 * g[2]);
  return k;
}

FrameSample frame_fields(const DiagonalMetric& m, const ConePoint& cp, KernelOptions opts) {
  const auto g = m.eval(cp.base());
  const double c = std::cos(cp.theta()), s = std::sin(cp.theta());
  FrameSample f;
  f.X = {c / std::sqrt(g[0]), s / std::sqrt(g[1]), 1.0 / std::sqrt(-g[2]), 0.0};
  f.Xdot = {-s / std::sqrt(g[0]), c / std::sqrt(g[1]), 0.0, 0.0};
  f.Z = f.X;
  f.Z.atheta = kernel_theta_coefficient(m, cp, opts);
  return f;
}

Vec3 x_xdot_bracket_closed_form(const DiagonalMetric& m, const ConePoint& cp) {
  const MetricSample s = m.sample(cp.base());
  const auto& g = s.g;
  const auto& d = s.dg;
  const double c = std::cos(cp.theta()), sn = std::sin(cp.theta());
  const double A = d[0][1] / (2.0 * g[0] * std::sqrt(g[0] * g[1])) +
                   sn * d[0][2] / (2.0 * g[0] * std::sqrt(-g[0] * g[2]));
  const double B = -d[1][0] / (2.0 * g[1] * std::sqrt(g[0] * g[1])) -
                   c * d[1][2] / (2.0 * g[1] * std::sqrt(-g[1] * g[2]));
  const double C = -sn * d[2][0] / (2.0 * g[2] * std::sqrt(-g[0] * g[2])) +
                   c * d[2][1] / (2.0 * g[2] * std::sqrt(-g[1] * g[2]));
  return {A, B, C};
}

VectorField field_X(const DiagonalMetric& m) {
  return [&m](const ConePoint& cp) { return x_field(m, cp); };
}

VectorField field_Xdot(const DiagonalMetric& m) {
  return [&m](const ConePoint& cp) {
    const auto g = m.eval(cp.base());
    return Vec4{-std::sin(cp.theta()) / std::sqrt(g[0]), std::cos(cp.theta()) / std::sqrt(g[1]), 0.0,
                0.0};
  };
}

VectorField field_dtheta() {
  return [](const ConePoint&) { return Vec4{0.0, 0.0, 0.0, 1.0}; };
}

VectorField field_Z(const DiagonalMetric& m, KernelOptions opts) {
  return [&m, opts](const ConePoint& cp) {
    Vec4 z = x_field(m, cp);
    z.atheta = kernel_theta_coefficient(m, cp, opts);
    return z;
  };
}

namespace {

// Directional derivative (J F) v by central differences in each coordinate.
Vec4 jacobian_times(const VectorField& F, const ConePoint& cp, const Vec4& v) {
  Vec4 out;
  for (int j = 0; j < 4; ++j) {
    if (v[j] == 0.0) continue;
    const double h = 1e-5 * (1.0 + std::abs(cp.coordinate(j)));
    Vec4 step;
    step[j] = h;
    const Vec4 plus = F(cp.shifted(step));
    const Vec4 minus = F(cp.shifted(-1.0 * step));
    out = out + (v[j] / (2.0 * h)) * (plus - minus);
  }
  return out;
}

}  // namespace

Vec4 lie_bracket(const VectorField& V, const VectorField& W, const ConePoint& cp) {
  return jacobian_times(W, cp, V(cp)) - jacobian_times(V, cp, W(cp));
}

CheckReport engel_rank_check(const DiagonalMetric& m, int samples, Rng& rng) {
  if (samples < 1) throw Error(ErrorCode::InvalidArgument, "samples must be positive");
  const VectorField X = field_X(m), Xd = field_Xdot(m), T = field_dtheta();
  const Box box = m.sampling_box();
  ResidualTracker tracker;
  for (int n = 0; n < samples; ++n) {
    const ConePoint cp = random_cone_point(rng, box);
    const Vec4 x = X(cp), t = T(cp), xd = Xd(cp);
    const Vec4 b_xt = lie_bracket(X, T, cp);
    const Vec4 b_xxd = lie_bracket(X, Xd, cp);
    const Vec4 b_txd = lie_bracket(T, Xd, cp);
    const double c2 = condition_at(columns({x, t}), 2);
    const double c3 = condition_at(columns({x, t, b_xt}), 3);
    const double c4 = condition_at(columns({x, t, xd, b_xxd, b_txd}), 4);
    tracker.add(std::max({c2, c3, c4}), point_of(cp));
  }
  return tracker.report("engel_rank:" + m.name(), 1.0 / kRankTolerance);
}

KernelCharResult kernel_char_check(const DiagonalMetric& m, int samples, Rng& rng, KernelOptions opts) {
  if (samples < 1) throw Error(ErrorCode::InvalidArgument, "samples must be positive");
  const VectorField X = field_X(m), Xd = field_Xdot(m), T = field_dtheta(), Z = field_Z(m, opts);
  const Box box = m.sampling_box();
  ResidualTracker kernel, unique;
  for (int n = 0; n < samples; ++n) {
    const ConePoint cp = random_cone_point(rng, box);
    const Eigen::MatrixXd even = columns({X(cp), T(cp), Xd(cp)});
    auto outside = [&](const Vec4& v) {
      return distance_to_span(Eigen::Vector4d(v[0], v[1], v[2], v[3]), even);
    };
    const double rk = std::max({outside(lie_bracket(Z, X, cp)), outside(lie_bracket(Z, T, cp)),
                                outside(lie_bracket(Z, Xd, cp))});
    kernel.add(rk, point_of(cp));
    const double sep = std::max(outside(lie_bracket(T, X, cp)), outside(lie_bracket(T, Xd, cp)));
    unique.add(sep > 0.0 ? 1.0 / sep : std::numeric_limits<double>::infinity(), point_of(cp));
  }
  return {kernel.report("kernel_char:" + m.name(), 1e-6),
          unique.report("kernel_unique:" + m.name(), 1e2)};
}

Trajectory kernel_flow(const DiagonalMetric& m, const ConePoint& cp0, double T, double h,
                       KernelOptions opts) {
  const long n = step_count(T, h);
  if (!m.domain().contains(cp0.base()))
    throw Error(ErrorCode::DomainExit, "start point outside the metric domain");
  const VectorField Z = field_Z(m, opts);
  auto rhs = [&Z](const State<4>& y) {
    const Vec4 z = Z(ConePoint({y[0], y[1], y[2]}, y[3]));
    return State<4>{z.a1, z.a2, z.a3, z.atheta};
  };
  auto sample = [&m](double s, const State<4>& y) {
    TrajectorySample out;
    out.s = s;
    out.x = {y[0], y[1], y[2]};
    out.theta = wrap_angle(y[3]);
    out.velocity = cone_embed(m, ConePoint(out.x, y[3]));
    out.null_residual = std::abs(null_residual(m, out.x, out.velocity));
    return out;
  };
  Trajectory traj;
  traj.samples.reserve(static_cast<std::size_t>(n) + 1);
  State<4> y{cp0.base().x1, cp0.base().x2, cp0.base().x3, cp0.theta()};
  traj.samples.push_back(sample(0.0, y));
  for (long k = 0; k < n; ++k) {
    const double s0 = k * h;
    const double step = (k == n - 1) ? T - s0 : h;
    const State<4> next = rk4_step(rhs, y, step);
    if (!m.domain().contains(ChartPoint{next[0], next[1], next[2]})) {
      traj.truncated = true;
      break;
    }
    y = next;
    traj.samples.push_back(sample(k == n - 1 ? T : s0 + h, y));
  }
  return traj;
}

namespace {

struct SprayNode {
  double sigma;
  ChartPoint x;
  Vec3 dx_dsigma;
};

// Geodesic from the cone embedding of cp, integrated in its affine parameter
// together with the kernel parameter sigma, d sigma / d lambda = v3 sqrt(-g33).
// Returns nodes up to the first one with sigma >= sigma_end, or nothing if the
// geodesic leaves the domain first.
std::vector<SprayNode> geodesic_in_kernel_parameter(const DiagonalMetric& m, const ConePoint& cp,
                                                    double sigma_end, double h) {
  auto rhs = [&m](const State<7>& y) {
    const State<6> g = geodesic_rhs(m, {y[0], y[1], y[2], y[3], y[4], y[5]});
    const double g33 = m.eval({y[0], y[1], y[2]})[2];
    return State<7>{g[0], g[1], g[2], g[3], g[4], g[5], y[5] * std::sqrt(-g33)};
  };
  auto node = [&rhs](const State<7>& y) {
    const State<7> d = rhs(y);
    const double rate = d[6];
    return SprayNode{y[6], {y[0], y[1], y[2]}, {y[3] / rate, y[4] / rate, y[5] / rate}};
  };
  const Vec3 v = cone_embed(m, cp);
  State<7> y{cp.base().x1, cp.base().x2, cp.base().x3, v.x, v.y, v.z, 0.0};
  std::vector<SprayNode> nodes{node(y)};
  const long max_steps = 100 * static_cast<long>(std::ceil(sigma_end / h)) + 10;
  for (long k = 0; k < max_steps && nodes.back().sigma < sigma_end; ++k) {
    y = rk4_step(rhs, y, h);
    if (!m.domain().contains(ChartPoint{y[0], y[1], y[2]})) return {};
    nodes.push_back(node(y));
  }
  if (nodes.back().sigma < sigma_end) return {};
  return nodes;
}

ChartPoint hermite(const SprayNode& a, const SprayNode& b, double sigma) {
  const double dt = b.sigma - a.sigma;
  const double t = (sigma - a.sigma) / dt;
  const double t2 = t * t, t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
  ChartPoint p;
  for (int i = 0; i < 3; ++i)
    p[i] = h00 * a.x[i] + h10 * dt * a.dx_dsigma[i] + h01 * b.x[i] + h11 * dt * b.dx_dsigma[i];
  return p;
}

}  // namespace

CheckReport spray_equiv_check(const DiagonalMetric& m, int trials, Rng& rng, KernelOptions opts, double h) {
  if (trials < 1) throw Error(ErrorCode::InvalidArgument, "trials must be positive");
  constexpr double kLength = 1.0;
  constexpr int kMaxRedraws = 100;
  const Box box = m.sampling_box();
  ResidualTracker tracker;
  std::string name = "spray_equiv:" + m.name();
  if (opts.variant == KernelVariant::Perturbed) name += ":perturbed";
  if (opts.variant == KernelVariant::DropTheta) name += ":drop_theta";
  for (int t = 0; t < trials; ++t) {
    for (int attempt = 0;; ++attempt) {
      if (attempt == kMaxRedraws)
        throw Error(ErrorCode::DomainExit, "no trial start keeps both flows inside the domain");
      const ConePoint cp = random_cone_point(rng, box);
      const Trajectory flow = kernel_flow(m, cp, kLength, h, opts);
      if (flow.truncated) continue;
      const std::vector<SprayNode> geo = geodesic_in_kernel_parameter(m, cp, kLength, h);
      if (geo.empty()) continue;
      double dev = 0.0;
      std::size_t j = 0;
      for (const auto& s : flow.samples) {
        while (j + 2 < geo.size() && geo[j + 1].sigma < s.s) ++j;
        const ChartPoint g = hermite(geo[j], geo[j + 1], s.s);
        const double e = std::sqrt((g.x1 - s.x.x1) * (g.x1 - s.x.x1) + (g.x2 - s.x.x2) * (g.x2 - s.x.x2) +
                                   (g.x3 - s.x.x3) * (g.x3 - s.x.x3));
        dev = std::max(dev, std::isnan(e) ? std::numeric_limits<double>::infinity() : e);
      }
      tracker.add(dev, point_of(cp));
      break;
    }
  }
  return tracker.report(name, 1e-6);
}

CheckReport theta_ode_residual(const DiagonalMetric& m, const Trajectory& traj) {
  const auto& smp = traj.samples;
  if (smp.size() < 3) throw Error(ErrorCode::InvalidArgument, "theta residual needs at least 3 samples");
  // Unwrap theta so that differences are continuous.
  std::vector<double> theta(smp.size());
  theta[0] = smp[0].theta;
  for (std::size_t i = 1; i < smp.size(); ++i)
    theta[i] = theta[i - 1] + angle_difference(smp[i].theta, smp[i - 1].theta);
  ResidualTracker tracker;
  for (std::size_t i = 1; i + 1 < smp.size(); ++i) {
    const double h1 = smp[i].s - smp[i - 1].s;
    const double h2 = smp[i + 1].s - smp[i].s;
    if (std::min(h1, h2) < 0.1 * std::max(h1, h2)) continue;
    const double dtheta = -h2 / (h1 * (h1 + h2)) * theta[i - 1] + (h2 - h1) / (h1 * h2) * theta[i] +
                          h1 / (h2 * (h1 + h2)) * theta[i + 1];
    const ConePoint cp(smp[i].x, smp[i].theta);
    const KernelCoeffs k = kernel_coeffs(m, cp);
    const double g33 = m.eval(smp[i].x)[2];
    const double rhs = smp[i].velocity.z * std::sqrt(-g33) *
                       (k.F * std::cos(cp.theta()) + k.G * std::sin(cp.theta()) + k.H);
    tracker.add(std::abs(dtheta - rhs) / (1.0 + std::abs(dtheta)), point_of(cp));
  }
  return tracker.report("theta_ode:" + m.name(), 1e-4);
}

}  // namespace nullcone
