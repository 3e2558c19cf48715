#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nullcone/error.hpp"
#include "nullcone/worked_examples.hpp"

using namespace nullcone;

namespace {

constexpr double kPi = std::numbers::pi;

double vdist(const UnitImag& a, const UnitImag& b) { return norm(a.vec() - b.vec()); }

S2S1Geodesic random_geodesic(Rng& rng, int c) { return {random_tangent_point(rng), c}; }

}  // namespace

TEST(S2S1Eval, ClosesAfterOnePeriod) {
  Rng rng(61);
  for (int c = 1; c <= 4; ++c) {
    const S2S1Geodesic g = random_geodesic(rng, c);
    const S2S1Point a = s2s1_eval(g, 0.0);
    EXPECT_LE(vdist(a.point, g.start.base()), 1e-12);
    EXPECT_EQ(a.t, 0.0);
    const S2S1Point b = s2s1_eval(g, 2 * kPi);
    EXPECT_LE(vdist(b.point, g.start.base()), 1e-12);
    EXPECT_LT(std::abs(angle_difference(b.t, 0.0)), 1e-12);
  }
}

TEST(S2S1Eval, HalfPeriodIsAntipodal) {
  Rng rng(62);
  const S2S1Geodesic g = random_geodesic(rng, 1);
  const S2S1Point p = s2s1_eval(g, kPi);
  EXPECT_LE(norm(p.point.vec() + g.start.base().vec()), 1e-12);
  EXPECT_NEAR(p.t, kPi, 1e-12);
  // Unit-speed great circle: cos(s) x + sin(s) u.
  const S2S1Point q = s2s1_eval(g, 0.8);
  const Vec3 expected = std::cos(0.8) * g.start.base().vec() + std::sin(0.8) * g.start.dir().vec();
  EXPECT_LE(norm(q.point.vec() - expected), 1e-12);
}

TEST(SlicePoints, Examples) {
  Rng rng(63);
  const TangentPoint start = random_tangent_point(rng);
  const auto one = slice_points({start, 1});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_LE(distance(one[0], start), 1e-15);
  const auto two = slice_points({start, 2});
  EXPECT_LE(norm(two[1].base().vec() + start.base().vec()), 1e-15);
  EXPECT_LE(norm(two[1].dir().vec() + start.dir().vec()), 1e-15);
  const auto four = slice_points({start, 4});
  ASSERT_EQ(four.size(), 4u);
  for (int j = 0; j < 4; ++j) {
    const double arc = std::acos(std::clamp(dot(four[j].base().vec(), four[(j + 1) % 4].base().vec()), -1.0, 1.0));
    EXPECT_NEAR(arc, kPi / 2, 1e-12);
  }
}

TEST(SlicePoints, RotationAndFlowAgree) {
  Rng rng(64);
  for (int c = 1; c <= 6; ++c)
    for (int n = 0; n < 100; ++n) {
      const S2S1Geodesic g = random_geodesic(rng, c);
      const auto a = slice_points(g), b = slice_points_by_flow(g);
      ASSERT_EQ(a.size(), static_cast<std::size_t>(c));
      for (int j = 0; j < c; ++j) EXPECT_LE(distance(a[j], b[j]), 1e-10);
    }
}

TEST(SkyCircle, Examples) {
  Rng rng(65);
  const TangentPoint pt = random_tangent_point(rng);
  for (double tau : {0.3, kPi / 2, 2.5}) {
    const SkyCircleParams p = sky_params(pt, tau);
    EXPECT_LE(vdist(sky_circle(p, 0.0), pt.base()), 1e-12);
    const Vec3 d = sky_circle_derivative(p, 0.0);
    EXPECT_LE(norm(d - std::sin(tau) * p.v.vec()), 1e-12);
    EXPECT_NEAR(dot(d, pt.dir().vec()), 0.0, 1e-12);
    // Frame orthonormality.
    EXPECT_NEAR(dot(p.center.vec(), p.e.vec()), 0.0, 1e-10);
    EXPECT_NEAR(dot(p.center.vec(), p.v.vec()), 0.0, 1e-10);
    EXPECT_NEAR(dot(p.e.vec(), p.v.vec()), 0.0, 1e-10);
    for (double s : {0.0, 1.0, 4.0}) {
      const UnitImag y = sky_circle(p, s);
      EXPECT_NEAR(dot(y.vec(), p.center.vec()), std::cos(tau), 1e-12);
    }
  }
  const SkyCircleParams great = sky_params(pt, kPi / 2);
  for (double s : {0.3, 2.0}) EXPECT_NEAR(dot(sky_circle(great, s).vec(), great.center.vec()), 0.0, 1e-12);
}

TEST(ContactPlane, ProjectsIntoDirComplement) {
  Rng rng(66);
  for (int n = 0; n < 100; ++n) {
    const TangentPoint pt = random_tangent_point(rng);
    const auto plane = contact_plane(pt);
    // Base projection of the fiber direction is zero.
    EXPECT_LE(plane[0].head<3>().norm(), 0.0);
    const Vec3 u = pt.dir().vec();
    const Eigen::Vector3d ue(u.x, u.y, u.z);
    for (const auto& t : plane) EXPECT_LE(std::abs(t.head<3>().dot(ue)), 1e-15);
  }
  const auto at_kj = contact_plane(TangentPoint(kImagK, kImagJ));
  EXPECT_NEAR(std::abs(at_kj[1](0)), 1.0, 1e-15);
}

TEST(SkyTangency, PassesForSmallLensOrders) {
  for (int c = 1; c <= 4; ++c) {
    Rng rng(67);
    const CheckReport r = sky_tangency_check(c, 100, rng);
    EXPECT_TRUE(r.pass) << c << " " << r.max_residual;
  }
}

TEST(MinkP, Examples) {
  const MinkP a = mink_p(1.5, -2.0, 0.0, 0.4);
  EXPECT_EQ(a.u, 1.5);
  EXPECT_EQ(a.v, -2.0);
  EXPECT_EQ(a.theta, 0.4);
  const MinkP b = mink_p(0, 0, 1, 0);
  EXPECT_EQ(b.u, -1.0);
  EXPECT_EQ(b.v, 0.0);
}

TEST(MinkP, ConstantAlongKernel) {
  Rng rng(68);
  for (int n = 0; n < 1000; ++n) {
    const double x = uniform(rng, -3, 3), y = uniform(rng, -3, 3), t = uniform(rng, -3, 3);
    const double th = uniform(rng, 0, 2 * kPi), s = uniform(rng, -3, 3);
    const MinkP a = mink_p(x, y, t, th);
    const MinkP b = mink_p(x + s * std::cos(th), y + s * std::sin(th), t + s, th);
    EXPECT_NEAR(a.u, b.u, 1e-12);
    EXPECT_NEAR(a.v, b.v, 1e-12);
    EXPECT_EQ(a.theta, b.theta);
  }
}

TEST(MinkPhi, OmegaExamples) {
  EXPECT_NEAR(mink_phi(0, 0, 0, 1).omega, kPi / 2, 1e-15);
  EXPECT_NEAR(mink_phi(0, 0, 1, 1).omega, 3 * kPi / 4, 1e-15);
  EXPECT_NEAR(mink_phi(0, 0, -1, 1).omega, kPi / 4, 1e-15);
  const MinkPhi far = mink_phi(0, 0, 1e6, 0);
  EXPECT_GT(far.omega, 0.0);
  EXPECT_LT(far.omega, kPi);
}

TEST(MinkPhi, OmegaDirectionMatchesPushforwardOfDtheta) {
  Rng rng(69);
  for (int n = 0; n < 200; ++n) {
    const double t = uniform(rng, -5, 5), th = uniform(rng, 0, 2 * kPi);
    const MinkPhi p = mink_phi(0.3, -0.2, t, th);
    // Oracle: p_* d/dtheta = t sin(theta) du - t cos(theta) dv + dtheta.
    const double along = -t;  // component along (-sin theta du + cos theta dv)
    const double r = std::hypot(along, 1.0);
    EXPECT_NEAR(std::cos(p.omega), along / r, 1e-10);
    EXPECT_NEAR(std::sin(p.omega), 1.0 / r, 1e-10);
  }
}

TEST(MinkConeVector, ExamplesAndNullity) {
  const Vec3 v = mink_cone_vector(kPi / 2, 0.6);
  EXPECT_NEAR(v.x, -std::cos(0.6), 1e-15);
  EXPECT_NEAR(v.y, -std::sin(0.6), 1e-15);
  EXPECT_EQ(v.z, 1.0);
  EXPECT_THROW(mink_cone_vector(0.01, 0.0), Error);
  EXPECT_THROW(mink_cone_vector(4.0, 0.0), Error);
  Rng rng(70);
  for (int n = 0; n < 1000; ++n) {
    const double om = uniform(rng, 0.1, kPi - 0.1), th = uniform(rng, 0, 2 * kPi);
    const Vec3 w = mink_cone_vector(om, th);
    EXPECT_LE(std::abs(mink_image_metric(om, w)), 1e-9 * dot(w, w));
    // The positive-power sin^4 variant is not null.
    const double s4 = std::pow(std::sin(om), 4);
    if (s4 < 0.9) EXPECT_GT(std::abs(w.x * w.x + w.y * w.y - s4 * w.z * w.z), 1e-3);
  }
  const Vec3 a = mink_cone_vector(1.0, 0.2), b = mink_cone_vector(1.0, 0.9);
  EXPECT_GT(norm(cross(a, b)), 1e-3);
}

TEST(MinkQ, RecoversBasePoint) {
  Rng rng(71);
  for (int n = 0; n < 100; ++n) {
    const double x = uniform(rng, -3, 3), y = uniform(rng, -3, 3), t = uniform(rng, -3, 3);
    const double th = uniform(rng, 0, 2 * kPi);
    const Vec3 q = mink_q(mink_phi(x, y, t, th));
    EXPECT_NEAR(q.x, x, 1e-12);
    EXPECT_NEAR(q.y, y, 1e-12);
    EXPECT_NEAR(1.0 / std::tan(q.z), -t, 1e-9 * (1 + t * t));
  }
}

TEST(MinkChecks, Pass) {
  Rng rng(72);
  EXPECT_TRUE(mink_deprolong_contact_check(100, rng).pass);
  EXPECT_TRUE(mink_cone_null_check(1000, rng).pass);
  const CheckReport pull = mink_cot_pullback_check(1000, rng);
  EXPECT_TRUE(pull.pass) << pull.max_residual;
}

TEST(Sts2Deprolong, Examples) {
  Rng rng(73);
  const UnitQuaternion q = random_unit_quaternion(rng);
  EXPECT_EQ(sts2_deprolong_p(q, 0.0).value(), q.value());
  const UnitQuaternion r = sts2_deprolong_p(q, 2 * kPi);
  EXPECT_LE(distance(r.value(), (-q).value()), 1e-15);
  EXPECT_LE(distance(big_phi(r), big_phi(q)), 1e-15);
  const double s = 0.7, t = 1.9;
  EXPECT_LE(distance(sts2_deprolong_p(sts2_flow(q, s), t + s).value(), sts2_deprolong_p(q, t).value()),
            1e-15);
  EXPECT_TRUE(sts2_deprolong_invariance_check(1000, rng).pass);
}

TEST(Foliation, BothExamplesPassAndControlsFail) {
  for (auto ex : {FoliationExample::Minkowski, FoliationExample::S2S1}) {
    Rng rng(74);
    const CheckReport r = foliation_check(ex, 100, rng);
    EXPECT_TRUE(r.pass) << r.check << " " << r.max_residual;
    Rng rng2(75);
    const CheckReport c = foliation_control(ex, 100, rng2);
    EXPECT_TRUE(c.pass) << c.check << " " << c.max_residual;
    EXPECT_LE(c.max_residual, 1e-6);
  }
}

TEST(Lens, SliceConsistencyAndClosure) {
  Rng rng(76);
  EXPECT_TRUE(slice_consistency_check(50, rng).pass);
  EXPECT_TRUE(s2s1_closure_check(50, rng).pass);
}

TEST(Lens, IdentificationAndDistinctness) {
  for (int c = 1; c <= 4; ++c) {
    Rng rng(77);
    const LensIdentification r = lens_identification_check(c, 100, rng);
    EXPECT_TRUE(r.identification.pass) << c << " " << r.identification.max_residual;
    EXPECT_TRUE(r.distinct.pass) << c << " " << r.distinct.max_residual;
    EXPECT_EQ(r.identification.samples, 100);
  }
}

TEST(OrbitTable, Structure) {
  Rng rng(78);
  const auto j = orbit_table(3, random_unit_quaternion(rng));
  EXPECT_EQ(j.at("c").get<int>(), 3);
  EXPECT_EQ(j.at("z2c_orbit").size(), 6u);
  EXPECT_EQ(j.at("zc_orbit").size(), 3u);
  EXPECT_TRUE(j.contains("canonical"));
  EXPECT_TRUE(j.contains("q"));
}
