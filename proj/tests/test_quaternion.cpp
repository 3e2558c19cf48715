#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "nullcone/error.hpp"
#include "nullcone/quaternion.hpp"
#include "nullcone/sampling.hpp"

using namespace nullcone;

namespace {

constexpr double kPi = std::numbers::pi;

void expect_quat_near(const Quaternion& a, const Quaternion& b, double tol) {
  EXPECT_NEAR(a.w, b.w, tol);
  EXPECT_NEAR(a.x, b.x, tol);
  EXPECT_NEAR(a.y, b.y, tol);
  EXPECT_NEAR(a.z, b.z, tol);
}

}  // namespace

TEST(QuatMul, BasisRelations) {
  EXPECT_EQ(quat_mul(kQuatI, kQuatJ), kQuatK);
  EXPECT_EQ(quat_mul(kQuatJ, kQuatK), kQuatI);
  EXPECT_EQ(quat_mul(kQuatK, kQuatI), kQuatJ);
  EXPECT_EQ(quat_mul(kQuatJ, kQuatI), -kQuatK);
  EXPECT_EQ(quat_mul(kQuatI, kQuatI), Quaternion::real(-1.0));
}

TEST(QuatMul, ExpandsBilinearly) {
  const Quaternion a{1, 1, 0, 0}, b{1, 0, 1, 0};
  EXPECT_EQ(quat_mul(a, b), (Quaternion{1, 1, 1, 1}));
}

TEST(QuatMul, InverseGivesOne) {
  const Quaternion q{0.5, 0.5, 0.5, 0.5};
  expect_quat_near(quat_mul(q, q.inverse()), kQuatOne, 1e-15);
}

TEST(QuatMul, NormIsMultiplicativeAndProductAssociative) {
  Rng rng(11);
  std::normal_distribution<double> n;
  for (int i = 0; i < 1000; ++i) {
    const Quaternion a{n(rng), n(rng), n(rng), n(rng)};
    const Quaternion b{n(rng), n(rng), n(rng), n(rng)};
    const Quaternion c{n(rng), n(rng), n(rng), n(rng)};
    EXPECT_NEAR(quat_mul(a, b).norm(), a.norm() * b.norm(), 1e-12 * (1 + a.norm() * b.norm()));
    const double scale = a.norm() * b.norm() * c.norm();
    EXPECT_LE(distance(quat_mul(quat_mul(a, b), c), quat_mul(a, quat_mul(b, c))), 1e-12 * (1 + scale));
  }
}

TEST(QuatExp, Examples) {
  expect_quat_near(quat_exp(kImagI, kPi / 2).value(), kQuatI, 1e-15);
  EXPECT_EQ(quat_exp(kImagJ, 0.0).value(), kQuatOne);
  const double h = std::sqrt(2.0) / 2.0;
  expect_quat_near(quat_exp(kImagJ, kPi / 4).value(), Quaternion{h, 0, h, 0}, 1e-15);
}

TEST(ImagProducts, Examples) {
  const ImagProducts ij = imag_products(kImagI, kImagJ);
  expect_quat_near(ij.cross, kQuatK, 0.0);
  EXPECT_EQ(ij.inner, 0.0);
  const ImagProducts ii = imag_products(kImagI, kImagI);
  expect_quat_near(ii.cross, Quaternion{}, 0.0);
  EXPECT_EQ(ii.inner, 1.0);
  const UnitImag d = UnitImag::normalize({1.0, 1.0, 0.0});
  EXPECT_NEAR(imag_products(d, kImagI).inner, 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(ImagProducts, AgreeWithEuclideanOperations) {
  Rng rng(12);
  for (int i = 0; i < 1000; ++i) {
    const UnitImag u = random_unit_imag(rng), v = random_unit_imag(rng);
    const ImagProducts p = imag_products(u, v);
    EXPECT_EQ(p.cross.w, 0.0);
    EXPECT_LE(norm(p.cross.imag() - cross(u.vec(), v.vec())), 1e-12);
    EXPECT_NEAR(p.inner, dot(u.vec(), v.vec()), 1e-12);
  }
}

TEST(ConjugateBy, Examples) {
  EXPECT_LE(norm(conjugate_by(UnitQuaternion{}, kImagK).vec() - kImagK.vec()), 0.0);
  // Oracle: (1/2)(1 - j) k (1 + j) expanded by hand.
  const Quaternion half_turn_oracle = 0.5 * quat_mul(quat_mul({1, 0, -1, 0}, kQuatK), {1, 0, 1, 0});
  const UnitQuaternion q = quat_exp(kImagJ, kPi / 4);
  EXPECT_LE(norm(conjugate_by(q, kImagK).vec() - half_turn_oracle.imag()), 1e-15);
  EXPECT_LE(norm(conjugate_by(q, kImagK).vec() - Vec3{-1, 0, 0}), 1e-15);
  EXPECT_LE(norm(conjugate_by(q, kImagI).vec() - Vec3{0, 0, 1}), 1e-15);
}

TEST(ConjugateBy, RotatesByMinusTheta) {
  // q = e^{eta theta/2} rotates w by -theta about eta.
  const double theta = 0.9;
  const UnitQuaternion q = quat_exp(kImagK, theta / 2);
  const Vec3 r = conjugate_by(q, kImagI).vec();
  EXPECT_NEAR(r.x, std::cos(-theta), 1e-15);
  EXPECT_NEAR(r.y, std::sin(-theta), 1e-15);
}

TEST(ConjugateBy, ResultIsUnitImaginary) {
  Rng rng(13);
  for (int i = 0; i < 10000; ++i) {
    const UnitQuaternion q = random_unit_quaternion(rng);
    const UnitImag w = random_unit_imag(rng);
    const Quaternion raw = quat_mul(quat_mul(q.inverse().value(), w.value()), q.value());
    EXPECT_LE(std::abs(raw.w), 1e-12);
    EXPECT_LE(std::abs(raw.norm() - 1.0), 1e-12);
  }
}

TEST(UnitTypes, ConstructorsEnforceInvariants) {
  EXPECT_THROW(UnitQuaternion(Quaternion{1.0, 1e-5, 0, 0}), Error);
  EXPECT_NO_THROW(UnitQuaternion(Quaternion{0.5, 0.5, 0.5, 0.5}));
  EXPECT_THROW(UnitImag(Quaternion{1e-6, 1, 0, 0}), Error);
  EXPECT_THROW(UnitImag(Vec3{1.1, 0, 0}), Error);
  EXPECT_THROW(TangentPoint(kImagI, UnitImag::normalize({1, 1e-6, 0})), Error);
  EXPECT_NO_THROW(TangentPoint(kImagI, kImagJ));
}

TEST(UnitTypes, LongProductChainsStayNormalized) {
  UnitQuaternion q;
  const UnitQuaternion step = quat_exp(UnitImag::normalize({1, 2, 3}), 0.1);
  for (int i = 0; i < 10000; ++i) q = q * step;
  EXPECT_LE(std::abs(q.value().norm() - 1.0), 1e-12);
  EXPECT_LE(q.chain_length(), UnitQuaternion::kMaxChain);
}
