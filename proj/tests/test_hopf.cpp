#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "nullcone/hopf.hpp"
#include "nullcone/sampling.hpp"

using namespace nullcone;

namespace {

constexpr double kPi = std::numbers::pi;

double vdist(const UnitImag& a, Vec3 b) { return norm(a.vec() - b); }

}  // namespace

TEST(HopfTau, Examples) {
  EXPECT_LE(vdist(hopf_tau(kImagI, UnitQuaternion{}), {1, 0, 0}), 0.0);
  EXPECT_LE(vdist(hopf_tau(kImagK, quat_exp(kImagK, kPi / 3)), {0, 0, 1}), 1e-15);
  EXPECT_LE(vdist(hopf_tau(kImagI, quat_exp(kImagJ, kPi / 4)), {0, 0, 1}), 1e-15);
}

TEST(HopfTau, ConstantAlongFibers) {
  Rng rng(21);
  for (int i = 0; i < 1000; ++i) {
    const UnitImag w = random_unit_imag(rng);
    const UnitQuaternion q = random_unit_quaternion(rng);
    const double theta = uniform(rng, 0, 2 * kPi);
    EXPECT_LE(vdist(hopf_tau(w, quat_exp(w, theta) * q), hopf_tau(w, q).vec()), 1e-12);
  }
}

TEST(HopfSection, CollinearBranches) {
  EXPECT_EQ(hopf_section(kImagI, kImagI).value(), kQuatOne);
  const UnitQuaternion q = hopf_section(kImagI, -kImagI);
  EXPECT_NEAR(q.value().w, 0.0, 1e-15);
  EXPECT_NEAR(q.value().x, 0.0, 1e-15);  // e^{u pi/2} = u with u orthogonal to i
  EXPECT_LE(vdist(hopf_tau(kImagI, q), {-1, 0, 0}), 1e-15);
}

TEST(HopfSection, KToI) {
  const UnitQuaternion q = hopf_section(kImagK, kImagI);
  const UnitQuaternion expected = quat_exp(kImagJ, -kPi / 4);
  EXPECT_LE(distance(q.value(), expected.value()), 1e-15);
  EXPECT_LE(vdist(conjugate_by(q, kImagK), {1, 0, 0}), 1e-15);
}

TEST(HopfSection, RoundTrip) {
  Rng rng(22);
  for (int i = 0; i < 1000; ++i) {
    const UnitImag w = random_unit_imag(rng), p = random_unit_imag(rng);
    EXPECT_LE(vdist(hopf_tau(w, hopf_section(w, p)), p.vec()), 1e-10);
  }
}

TEST(BigPhi, Examples) {
  const TangentPoint one = big_phi(UnitQuaternion{});
  EXPECT_LE(vdist(one.base(), {0, 0, 1}), 0.0);
  EXPECT_LE(vdist(one.dir(), {0, 1, 0}), 0.0);
  const TangentPoint at_i = big_phi(UnitQuaternion(kQuatI));
  EXPECT_LE(vdist(at_i.base(), {0, 0, -1}), 1e-15);
  EXPECT_LE(vdist(at_i.dir(), {0, -1, 0}), 1e-15);
}

TEST(BigPhi, TwoToOne) {
  Rng rng(23);
  for (int i = 0; i < 1000; ++i) {
    const UnitQuaternion q = random_unit_quaternion(rng);
    EXPECT_EQ(distance(big_phi(q), big_phi(-q)), 0.0);
    const UnitQuaternion p = big_phi_preimage(big_phi(q));
    EXPECT_LE(std::min(distance(p.value(), q.value()), distance(p.value(), (-q).value())), 1e-12);
  }
}

TEST(LensAct, Examples) {
  Rng rng(24);
  const UnitQuaternion q = random_unit_quaternion(rng);
  EXPECT_LE(distance(lens_act(1, 1, q).value(), (-q).value()), 1e-15);
  EXPECT_LE(distance(lens_act(2, 1, UnitQuaternion{}).value(), kQuatI), 1e-15);
  EXPECT_LE(distance(lens_act(3, 6, q).value(), q.value()), 1e-14);
}

TEST(LensAct, GenericOrbitHasTwoCElements) {
  Rng rng(25);
  const auto orbit = lens_orbit(3, random_unit_quaternion(rng));
  ASSERT_EQ(orbit.size(), 6u);
  for (std::size_t a = 0; a < orbit.size(); ++a)
    for (std::size_t b = a + 1; b < orbit.size(); ++b)
      EXPECT_GT(distance(orbit[a].value(), orbit[b].value()), 1e-6);
}

TEST(ZcAct, Examples) {
  Rng rng(26);
  const TangentPoint pt = random_tangent_point(rng);
  const TangentPoint half = zc_act_sts2(2, pt);
  EXPECT_LE(vdist(half.base(), -1.0 * pt.base().vec()), 1e-15);
  EXPECT_LE(vdist(half.dir(), -1.0 * pt.dir().vec()), 1e-15);
  const TangentPoint quarter = zc_act_sts2(4, TangentPoint(kImagI, kImagJ));
  EXPECT_LE(vdist(quarter.base(), {0, 1, 0}), 1e-15);
  EXPECT_LE(vdist(quarter.dir(), {-1, 0, 0}), 1e-15);
  TangentPoint p = pt;
  std::vector<TangentPoint> orbit;
  for (int m = 0; m < 4; ++m, p = zc_act_sts2(4, p)) orbit.push_back(p);
  EXPECT_LE(distance(p, pt), 1e-14);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b) EXPECT_GT(distance(orbit[a], orbit[b]), 1e-6);
}

TEST(Sts2Flow, Examples) {
  Rng rng(27);
  const UnitQuaternion q = random_unit_quaternion(rng);
  EXPECT_LE(distance(sts2_flow(q, 4 * kPi).value(), q.value()), 1e-14);
  const UnitQuaternion half = sts2_flow(UnitQuaternion{}, kPi);
  EXPECT_LE(distance(half.value(), kQuatI), 1e-15);
  EXPECT_LE(vdist(big_phi(half).base(), {0, 0, -1}), 1e-15);
  EXPECT_LE(vdist(big_phi(half).dir(), {0, -1, 0}), 1e-15);
}

TEST(Sts2Flow, DescendsToZcAction) {
  Rng rng(28);
  for (int c = 1; c <= 6; ++c)
    for (int i = 0; i < 100; ++i) {
      const UnitQuaternion q = random_unit_quaternion(rng);
      EXPECT_LE(distance(big_phi(sts2_flow(q, 2 * kPi / c)), zc_act_sts2(c, big_phi(q))), 1e-12);
      EXPECT_LE(distance(big_phi(lens_act(c, 1, q)), zc_act_sts2(c, big_phi(q))), 1e-12);
    }
}

TEST(LensCanonicalize, TwoElementOrbitOfI) {
  const LensClass cls = lens_canonicalize(1, UnitQuaternion(kQuatI));
  EXPECT_EQ(cls.c, 1);
  EXPECT_LE(distance(cls.rep.value(), kQuatI), 0.0);
}

TEST(LensCanonicalize, OrbitElementsShareRepresentative) {
  Rng rng(29);
  const UnitQuaternion q = random_unit_quaternion(rng);
  EXPECT_LE(distance(lens_canonicalize(2, q).rep.value(),
                     lens_canonicalize(2, quat_exp(kImagI, kPi / 2) * q).rep.value()),
            1e-15);
  const LensClass base = lens_canonicalize(3, q);
  for (const auto& e : lens_orbit(3, q)) {
    const LensClass cls = lens_canonicalize(3, e);
    EXPECT_LE(distance(cls.rep.value(), base.rep.value()), 1e-15);
    // Idempotent.
    EXPECT_LE(distance(lens_canonicalize(3, cls.rep).rep.value(), cls.rep.value()), 0.0);
  }
  // The representative maximizes the real part over the orbit.
  for (const auto& e : lens_orbit(3, q)) EXPECT_LE(e.value().w, base.rep.value().w + 1e-12);
}
