#include "nullcone/worked_examples.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "nullcone/engel.hpp"
#include "nullcone/error.hpp"
#include "nullcone/linalg.hpp"
#include "nullcone/metric.hpp"

namespace nullcone {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

Tangent6 pack(Vec3 dx, Vec3 du) {
  Tangent6 t;
  t << dx.x, dx.y, dx.z, du.x, du.y, du.z;
  return t;
}

Eigen::MatrixXd plane_matrix(const Tangent6& a, const Tangent6& b) {
  Eigen::MatrixXd m(6, 2);
  m.col(0) = a;
  m.col(1) = b;
  return m;
}

std::array<double, 4> as_array(Vec3 v, double w) { return {v.x, v.y, v.z, w}; }

double min_pairwise_separation(const std::vector<Eigen::VectorXd>& unit_lines) {
  double best = kInf;
  for (std::size_t a = 0; a < unit_lines.size(); ++a)
    for (std::size_t b = a + 1; b < unit_lines.size(); ++b) {
      const double c = std::min(1.0, std::abs(unit_lines[a].dot(unit_lines[b])));
      best = std::min(best, std::sqrt(std::max(0.0, 1.0 - c * c)));
    }
  return best;
}

Eigen::VectorXd principal_direction(const Eigen::MatrixXd& m) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
  return svd.matrixU().col(0);
}

}  // namespace

// ------------------------------------------------------------ S^2 x S^1

S2S1Point s2s1_eval(const S2S1Geodesic& g, double s) {
  const UnitQuaternion q = big_phi_preimage(g.start);
  return {big_phi(sts2_flow(q, s)).base(), wrap_angle(g.c * s)};
}

std::vector<TangentPoint> slice_points(const S2S1Geodesic& g) {
  if (g.c < 1) throw Error(ErrorCode::InvalidArgument, "c must be a positive integer");
  std::vector<TangentPoint> out;
  for (int j = 0; j < g.c; ++j) out.push_back(rotate_along_circle(g.start, 2.0 * kPi * j / g.c));
  return out;
}

std::vector<TangentPoint> slice_points_by_flow(const S2S1Geodesic& g) {
  if (g.c < 1) throw Error(ErrorCode::InvalidArgument, "c must be a positive integer");
  const UnitQuaternion q = big_phi_preimage(g.start);
  std::vector<TangentPoint> out;
  for (int j = 0; j < g.c; ++j) out.push_back(big_phi(sts2_flow(q, 2.0 * kPi * j / g.c)));
  return out;
}

SkyCircleParams sky_params(const TangentPoint& pt, double tau) {
  const Vec3 x = pt.base().vec(), u = pt.dir().vec();
  const double c = std::cos(tau), s = std::sin(tau);
  SkyCircleParams p;
  p.center = UnitImag::normalize(c * x + s * u);
  p.tau = tau;
  // Minus the forward velocity at the center.
  p.e = UnitImag::normalize(s * x - c * u);
  p.v = UnitImag::normalize(cross(x, u));
  return p;
}

UnitImag sky_circle(const SkyCircleParams& p, double s) {
  const Vec3 r = std::cos(p.tau) * p.center.vec() +
                 std::sin(p.tau) * (std::cos(s) * p.e.vec() + std::sin(s) * p.v.vec());
  return UnitImag::normalize(r);
}

Vec3 sky_circle_derivative(const SkyCircleParams& p, double s) {
  return std::sin(p.tau) * (-std::sin(s) * p.e.vec() + std::cos(s) * p.v.vec());
}

std::array<Tangent6, 2> contact_plane(const TangentPoint& pt) {
  const Vec3 n = cross(pt.base().vec(), pt.dir().vec());
  return {pack({}, n), pack(n, {})};
}

Tangent6 sky_tangent(const SkyCircleParams& p) {
  // Along the sky the direction at x(s) is (y - x(s) cos tau) / sin tau.
  const Vec3 dx = sky_circle_derivative(p, 0.0);
  const Vec3 du = (-std::cos(p.tau) / std::sin(p.tau)) * dx;
  return pack(dx, du);
}

Tangent6 vertical_sky_tangent(const TangentPoint& pt) {
  return pack({}, cross(pt.base().vec(), pt.dir().vec()));
}

Tangent6 rotate_tangent(const Tangent6& t, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  Tangent6 out;
  out.head<3>() = c * t.head<3>() + s * t.tail<3>();
  out.tail<3>() = -s * t.head<3>() + c * t.tail<3>();
  return out;
}

CheckReport sky_tangency_check(int c, int trials, Rng& rng) {
  if (c < 1 || trials < 1) throw Error(ErrorCode::InvalidArgument, "c and trials must be positive");
  ResidualTracker tracker;
  for (int n = 0; n < trials; ++n) {
    const TangentPoint pt = random_tangent_point(rng);
    const double tau = uniform(rng, 0.1, kPi - 0.1);
    const TangentPoint rep = big_phi(lens_canonicalize(c, big_phi_preimage(pt)).rep);
    const auto target = contact_plane(rep);
    const Eigen::MatrixXd target_m = plane_matrix(target[0], target[1]);
    double worst = 0.0;
    for (int j = 0; j < c; ++j) {
      const TangentPoint pj = rotate_along_circle(pt, 2.0 * kPi * j / c);
      // Power of the generator carrying pj onto the representative.
      int m_best = 0;
      double d_best = kInf;
      for (int m = 0; m < c; ++m) {
        const double d = distance(rotate_along_circle(pj, 2.0 * kPi * m / c), rep);
        if (d < d_best) {
          d_best = d;
          m_best = m;
        }
      }
      if (d_best > 1e-9) {
        worst = kInf;
        break;
      }
      const double angle = 2.0 * kPi * m_best / c;
      const Tangent6 a = rotate_tangent(sky_tangent(sky_params(pj, tau)), angle);
      const Tangent6 b = rotate_tangent(vertical_sky_tangent(pj), angle);
      worst = std::max({worst, distance_to_span(a, target_m), distance_to_span(b, target_m),
                        subspace_gap(plane_matrix(a, b), target_m)});
    }
    tracker.add(worst, as_array(pt.base().vec(), tau));
  }
  return tracker.report("sky_tangency:c=" + std::to_string(c), 1e-9);
}

// ------------------------------------------------------------ Minkowski

MinkP mink_p(double x, double y, double t, double theta) {
  return {x - t * std::cos(theta), y - t * std::sin(theta), theta};
}

MinkPhi mink_phi(double x, double y, double t, double theta) {
  const MinkP p = mink_p(x, y, t, theta);
  const double r = std::sqrt(1.0 + t * t);
  return {p.u, p.v, p.theta, std::atan2(1.0 / r, -t / r)};
}

Vec3 mink_cone_vector(double omega, double theta) {
  const double s = std::sin(omega);
  if (!(s >= 0.05)) throw Error(ErrorCode::DomainExit, "omega outside the cone domain (sin omega < 0.05)");
  const double s2 = s * s;
  return {-std::cos(theta) / s2, -std::sin(theta) / s2, 1.0};
}

double mink_image_metric(double omega, Vec3 w) {
  const double s2 = std::sin(omega) * std::sin(omega);
  return w.x * w.x + w.y * w.y - w.z * w.z / (s2 * s2);
}

Vec3 mink_q(const MinkPhi& p) {
  const double cot = std::cos(p.omega) / std::sin(p.omega);
  return {p.u - std::cos(p.theta) * cot, p.v - std::sin(p.theta) * cot, p.omega};
}

namespace {

Eigen::Vector4d phi_vec(const Eigen::Vector4d& a) {
  const MinkPhi p = mink_phi(a(0), a(1), a(2), a(3));
  return {p.u, p.v, p.theta, p.omega};
}

Eigen::Vector3d p_vec(const Eigen::Vector4d& a) {
  const MinkP p = mink_p(a(0), a(1), a(2), a(3));
  return {p.u, p.v, p.theta};
}

Eigen::Vector3d q_vec(const Eigen::Vector4d& a) {
  const Vec3 r = mink_q({a(0), a(1), a(2), a(3)});
  return {r.x, r.y, r.z};
}

// Central-difference Jacobian with step 1e-6 (1 + |coordinate|).
template <class F>
Eigen::MatrixXd jacobian(F&& f, const Eigen::Vector4d& a) {
  const Eigen::VectorXd f0 = f(a);
  Eigen::MatrixXd j(f0.size(), 4);
  for (int i = 0; i < 4; ++i) {
    const double h = 1e-6 * (1.0 + std::abs(a(i)));
    Eigen::Vector4d ap = a, am = a;
    ap(i) += h;
    am(i) -= h;
    j.col(i) = (f(ap) - f(am)) / (2.0 * h);
  }
  return j;
}

Eigen::Vector4d to_eigen(const Vec4& v) { return {v.a1, v.a2, v.a3, v.atheta}; }

}  // namespace

CheckReport mink_deprolong_contact_check(int samples, Rng& rng) {
  const DiagonalMetric mink = builtin_metric("minkowski3");
  const Box box = mink.sampling_box();
  ResidualTracker tracker;
  for (int n = 0; n < samples; ++n) {
    const ConePoint cp = random_cone_point(rng, box);
    const Eigen::Vector4d a(cp.base().x1, cp.base().x2, cp.base().x3, cp.theta());
    const FrameSample f = frame_fields(mink, cp);
    Eigen::MatrixXd even(4, 3);
    even << to_eigen(f.X), to_eigen(f.dTheta), to_eigen(f.Xdot);
    const Eigen::MatrixXd image = jacobian(p_vec, a) * even;
    Eigen::MatrixXd expected(3, 2);
    expected << -std::sin(cp.theta()), 0.0, std::cos(cp.theta()), 0.0, 0.0, 1.0;
    double r = kInf;
    if (numerical_rank(image) == 2) r = subspace_gap(orthonormal_basis(image, 2), expected);
    tracker.add(r, {a(0), a(1), a(2), a(3)});
  }
  return tracker.report("mink_deprolong_contact", 1e-8);
}

CheckReport mink_cone_null_check(int samples, Rng& rng) {
  const double lo = std::asin(0.05);
  ResidualTracker tracker;
  for (int n = 0; n < samples; ++n) {
    const double omega = uniform(rng, lo, kPi - lo);
    const double theta = uniform(rng, 0.0, 2.0 * kPi);
    const Vec3 v = mink_cone_vector(omega, theta);
    tracker.add(std::abs(mink_image_metric(omega, v)) / dot(v, v), {0.0, 0.0, omega, theta});
  }
  return tracker.report("mink_cone_null", 1e-9);
}

CheckReport mink_cot_pullback_check(int samples, Rng& rng) {
  const Box box = builtin_metric("minkowski3").sampling_box();
  std::normal_distribution<double> normal;
  ResidualTracker tracker;
  for (int n = 0; n < samples; ++n) {
    const ChartPoint p = random_point(rng, box);
    const Vec3 w{normal(rng), normal(rng), normal(rng)};
    // (x, y, t) -> (u, v, omega) = (x, y, omega(t)) on the slice theta = 0 of
    // the leaf space; omega'(t) by a fourth-order central difference.
    auto omega_of = [&](double t) { return mink_phi(p.x1, p.x2, t, 0.0).omega; };
    const double h = 1e-3 * (1.0 + std::abs(p.x3));
    const double domega = (8.0 * (omega_of(p.x3 + h) - omega_of(p.x3 - h)) -
                           (omega_of(p.x3 + 2.0 * h) - omega_of(p.x3 - 2.0 * h))) /
                          (12.0 * h);
    const double pulled = mink_image_metric(omega_of(p.x3), {w.x, w.y, domega * w.z});
    const double flat = w.x * w.x + w.y * w.y - w.z * w.z;
    tracker.add(std::abs(pulled - flat) / dot(w, w), {p.x1, p.x2, p.x3, 0.0});
  }
  return tracker.report("mink_cot_pullback", 1e-9);
}

// ------------------------------------------------ deprolongation of ST S^2

UnitQuaternion sts2_deprolong_p(const UnitQuaternion& q, double t) { return sts2_flow(q, -t); }

CheckReport sts2_deprolong_invariance_check(int samples, Rng& rng) {
  ResidualTracker tracker;
  for (int n = 0; n < samples; ++n) {
    const UnitQuaternion q = random_unit_quaternion(rng);
    const double t = uniform(rng, 0.0, 2.0 * kPi);
    const double s = uniform(rng, -2.0 * kPi, 2.0 * kPi);
    const TangentPoint moved = big_phi(sts2_deprolong_p(sts2_flow(q, s), t + s));
    const TangentPoint fixed = big_phi(sts2_deprolong_p(q, t));
    tracker.add(distance(moved, fixed), {q.value().x, q.value().y, q.value().z, t});
  }
  return tracker.report("sts2_deprolong_invariance", 1e-12);
}

// --------------------------------------------------------- foliations

namespace {

struct FoliationMeasure {
  double det = 0.0;         // transversality of leaf and kernel inside D, normalized
  double membership = 0.0;  // distance of leaf and kernel directions from D
  double condition = 0.0;   // sigma_1 / sigma_3 of the quotient Jacobian
  double separation = kInf; // smallest angle between quotient lines along the leaf
  double nullity = 0.0;     // largest |g(l, l)| for unit quotient lines
  std::array<double, 4> point{};

  double residual() const {
    return std::max({1e-6 / std::abs(det), membership / 1e-8, condition / 1e7, 1e-6 / separation,
                     nullity / 1e-8});
  }
};

// Coordinates of leaf and kernel in an orthonormal basis D of the plane field.
void transversality(const Eigen::MatrixXd& D, const Eigen::Vector4d& leaf, const Eigen::Vector4d& kernel,
                    FoliationMeasure& out) {
  const Eigen::Vector2d cl = D.transpose() * leaf.normalized();
  const Eigen::Vector2d ck = D.transpose() * kernel.normalized();
  out.det = cl(0) * ck(1) - cl(1) * ck(0);
  out.membership = std::max((leaf.normalized() - D * cl).norm(), (kernel.normalized() - D * ck).norm());
}

// Minkowski: Q = R^3 x S^1 mapped by Phi into (u, v, theta, omega); D is
// span{Y, d/domega}, the kernel is Phi_* Z, the leaves are Phi-images of the
// theta circles, and q is the leaf-space map.
Eigen::MatrixXd mink_plane(double theta, double omega) {
  Eigen::MatrixXd d(4, 2);
  d << -std::cos(omega) * std::sin(theta), 0.0, std::cos(omega) * std::cos(theta), 0.0, std::sin(omega),
      0.0, 0.0, 1.0;
  return d;
}

FoliationMeasure measure_minkowski(const DiagonalMetric& mink, const ConePoint& cp, bool control) {
  FoliationMeasure m;
  const Eigen::Vector4d a(cp.base().x1, cp.base().x2, cp.base().x3, cp.theta());
  m.point = {a(0), a(1), a(2), a(3)};
  const Eigen::Vector4d P = phi_vec(a);
  const Eigen::MatrixXd dphi = jacobian(phi_vec, a);
  const Eigen::Vector4d kernel = dphi * to_eigen(frame_fields(mink, cp).Z);
  const Eigen::Vector4d leaf = control ? kernel : Eigen::Vector4d(dphi.col(3));
  transversality(mink_plane(P(2), P(3)), leaf, kernel, m);
  m.condition = condition_at(jacobian(q_vec, P), 3);

  constexpr int kLeafPoints = 64;
  std::vector<Eigen::VectorXd> lines;
  for (int k = 0; k < kLeafPoints; ++k) {
    const Eigen::Vector4d ak(a(0), a(1), a(2), 2.0 * kPi * k / kLeafPoints);
    const Eigen::Vector4d Pk = phi_vec(ak);
    const Eigen::VectorXd l = principal_direction(jacobian(q_vec, Pk) * mink_plane(Pk(2), Pk(3)));
    m.nullity = std::max(m.nullity, std::abs(mink_image_metric(Pk(3), {l(0), l(1), l(2)})));
    lines.push_back(l);
  }
  m.separation = min_pairwise_separation(lines);
  return m;
}

// S^2 x S^1: Q = S^3 x S^1 with tangent coordinates (a1, a2, a3, dt) for
// dq = (a1 i + a2 j + a3 k) q. The leaf-space map is (q, t) -> (q^-1 k q, t),
// D is the preimage of the null line (dir, c), leaves are e^{k alpha} q, and
// the kernel is u + d/dt, i.e. (1/2, 0, 0, c).
Eigen::Vector4d s2s1_projection(const UnitQuaternion& q, double t) {
  const Vec3 x = conjugate_by(q, kImagK).vec();
  return {x.x, x.y, x.z, t};
}

Eigen::Matrix4d s2s1_jacobian(const UnitQuaternion& q, double t) {
  constexpr double h = 1e-6;
  const UnitImag axes[3] = {kImagI, kImagJ, kImagK};
  Eigen::Matrix4d j;
  for (int i = 0; i < 3; ++i)
    j.col(i) = (s2s1_projection(quat_exp(axes[i], h) * q, t) -
                s2s1_projection(quat_exp(axes[i], -h) * q, t)) /
               (2.0 * h);
  j.col(3) = (s2s1_projection(q, t + h) - s2s1_projection(q, t - h)) / (2.0 * h);
  return j;
}

struct S2S1Plane {
  Eigen::Matrix4d J;
  Eigen::MatrixXd D;
  bool ok = false;
};

S2S1Plane s2s1_plane(const UnitQuaternion& q, double t, int c) {
  S2S1Plane out;
  out.J = s2s1_jacobian(q, t);
  const Vec3 u = conjugate_by(q, kImagJ).vec();
  const Eigen::Vector4d n(u.x, u.y, u.z, static_cast<double>(c));
  const Eigen::Matrix4d P = Eigen::Matrix4d::Identity() - n * n.transpose() / n.squaredNorm();
  const Eigen::MatrixXd M = P * out.J;
  out.ok = numerical_rank(M) == 2;
  out.D = null_space(M, 2);
  return out;
}

FoliationMeasure measure_s2s1(const UnitQuaternion& q, double t, int c, bool control) {
  FoliationMeasure m;
  m.point = {q.value().x, q.value().y, q.value().z, t};
  const S2S1Plane plane = s2s1_plane(q, t, c);
  if (!plane.ok) {
    m.membership = kInf;
    return m;
  }
  const Eigen::Vector4d kernel(0.5, 0.0, 0.0, static_cast<double>(c));
  const Eigen::Vector4d leaf = control ? kernel : Eigen::Vector4d(0.0, 0.0, 1.0, 0.0);
  transversality(plane.D, leaf, kernel, m);
  m.condition = condition_at(plane.J, 3);

  constexpr int kLeafPoints = 64;
  std::vector<Eigen::VectorXd> lines;
  for (int k = 0; k < kLeafPoints; ++k) {
    const UnitQuaternion qk = quat_exp(kImagK, kPi * k / kLeafPoints) * q;
    const S2S1Plane pk = s2s1_plane(qk, t, c);
    const Eigen::VectorXd l = principal_direction(pk.J * pk.D);
    const double g = l.head<3>().squaredNorm() - l(3) * l(3) / (c * c);
    m.nullity = std::max(m.nullity, pk.ok ? std::abs(g) : kInf);
    lines.push_back(l);
  }
  m.separation = min_pairwise_separation(lines);
  return m;
}

template <class Visit>
void sample_foliation(FoliationExample example, int samples, Rng& rng, bool control, Visit&& visit) {
  if (samples < 1) throw Error(ErrorCode::InvalidArgument, "samples must be positive");
  if (example == FoliationExample::Minkowski) {
    const DiagonalMetric mink = builtin_metric("minkowski3");
    const Box box = mink.sampling_box();
    for (int n = 0; n < samples; ++n) visit(measure_minkowski(mink, random_cone_point(rng, box), control));
  } else {
    for (int n = 0; n < samples; ++n) {
      const UnitQuaternion q = random_unit_quaternion(rng);
      const double t = uniform(rng, 0.0, 2.0 * kPi);
      visit(measure_s2s1(q, t, 1 + n % 4, control));
    }
  }
}

std::string example_name(FoliationExample e) {
  return e == FoliationExample::Minkowski ? "minkowski" : "s2s1";
}

}  // namespace

CheckReport foliation_check(FoliationExample example, int samples, Rng& rng) {
  ResidualTracker tracker;
  sample_foliation(example, samples, rng, false,
                   [&](const FoliationMeasure& m) { tracker.add(m.residual(), m.point); });
  return tracker.report("foliation:" + example_name(example), 1.0);
}

CheckReport foliation_control(FoliationExample example, int samples, Rng& rng) {
  ResidualTracker tracker;
  sample_foliation(example, samples, rng, true,
                   [&](const FoliationMeasure& m) { tracker.add(std::abs(m.det), m.point); });
  return tracker.report("foliation_control:" + example_name(example), 1e-6);
}

// ------------------------------------------------------ lens checks

CheckReport slice_consistency_check(int samples, Rng& rng) {
  ResidualTracker tracker;
  for (int c = 1; c <= 6; ++c)
    for (int n = 0; n < samples; ++n) {
      const S2S1Geodesic g{random_tangent_point(rng), c};
      const auto a = slice_points(g);
      const auto b = slice_points_by_flow(g);
      double worst = 0.0;
      for (int j = 0; j < c; ++j) worst = std::max(worst, distance(a[j], b[j]));
      tracker.add(worst, as_array(g.start.base().vec(), c));
    }
  return tracker.report("slice_consistency", 1e-10);
}

CheckReport s2s1_closure_check(int samples, Rng& rng) {
  ResidualTracker tracker;
  for (int c = 1; c <= 4; ++c)
    for (int n = 0; n < samples; ++n) {
      const S2S1Geodesic g{random_tangent_point(rng), c};
      const S2S1Point end = s2s1_eval(g, 2.0 * kPi);
      const double r = norm(end.point.vec() - g.start.base().vec()) + std::abs(angle_difference(end.t, 0.0));
      tracker.add(r, as_array(g.start.base().vec(), c));
    }
  return tracker.report("s2s1_closure", 1e-10);
}

LensIdentification lens_identification_check(int c, int geodesics, Rng& rng) {
  if (c < 1 || geodesics < 2) throw Error(ErrorCode::InvalidArgument, "need c >= 1 and at least two geodesics");
  ResidualTracker ident;
  std::vector<UnitQuaternion> classes;
  std::vector<std::array<double, 4>> where;
  for (int n = 0; n < geodesics; ++n) {
    const S2S1Geodesic g{random_tangent_point(rng), c};
    std::vector<UnitQuaternion> reps;
    for (const auto& pt : slice_points(g)) reps.push_back(lens_canonicalize(c, big_phi_preimage(pt)).rep);
    double spread = 0.0;
    for (const auto& r : reps) spread = std::max(spread, distance(r.value(), reps.front().value()));
    const auto at = as_array(g.start.base().vec(), c);
    ident.add(spread, at);
    classes.push_back(reps.front());
    where.push_back(at);
  }
  double closest = kInf;
  std::array<double, 4> closest_at{};
  for (std::size_t a = 0; a < classes.size(); ++a)
    for (std::size_t b = a + 1; b < classes.size(); ++b) {
      const double d = distance(classes[a].value(), classes[b].value());
      if (d < closest) {
        closest = d;
        closest_at = where[a];
      }
    }
  const std::string suffix = ":c=" + std::to_string(c);
  return {ident.report("lens_identification" + suffix, 1e-10),
          make_report("lens_distinct" + suffix, geodesics, closest > 0.0 ? 1.0 / closest : kInf, 1e6,
                      closest_at)};
}

nlohmann::json orbit_table(int c, const UnitQuaternion& q) {
  if (c < 1) throw Error(ErrorCode::InvalidArgument, "c must be a positive integer");
  auto quat = [](const Quaternion& v) { return nlohmann::json::array({v.w, v.x, v.y, v.z}); };
  auto vec = [](Vec3 v) { return nlohmann::json::array({v.x, v.y, v.z}); };
  nlohmann::json out;
  out["c"] = c;
  out["q"] = quat(q.value());
  nlohmann::json lens = nlohmann::json::array();
  const auto orbit = lens_orbit(c, q);
  for (std::size_t k = 0; k < orbit.size(); ++k)
    lens.push_back({{"k", k}, {"q", quat(orbit[k].value())}});
  out["z2c_orbit"] = lens;
  nlohmann::json sts2 = nlohmann::json::array();
  TangentPoint pt = big_phi(q);
  for (int m = 0; m < c; ++m) {
    sts2.push_back({{"m", m}, {"base", vec(pt.base().vec())}, {"dir", vec(pt.dir().vec())}});
    pt = zc_act_sts2(c, pt);
  }
  out["zc_orbit"] = sts2;
  out["canonical"] = quat(lens_canonicalize(c, q).rep.value());
  return out;
}

}  // namespace nullcone
