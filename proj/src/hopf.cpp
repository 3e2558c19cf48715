#include "nullcone/hopf.hpp"

#include <cmath>
#include <numbers>

#include "nullcone/error.hpp"

namespace nullcone {

namespace {

void require_positive(int c) {
  if (c < 1) throw Error(ErrorCode::InvalidArgument, "c must be a positive integer");
}

// Any unit vector orthogonal to w.
Vec3 orthogonal_unit(Vec3 w) {
  const Vec3 ax = std::abs(w.x) < 0.9 ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 1.0, 0.0};
  return normalized(cross(w, ax));
}

}  // namespace

UnitImag hopf_tau(const UnitImag& w, const UnitQuaternion& q) { return conjugate_by(q, w); }

UnitQuaternion hopf_section(const UnitImag& w, const UnitImag& p) {
  const Vec3 wv = w.vec();
  const Vec3 pv = p.vec();
  const Vec3 pxw = cross(pv, wv);
  const double s = norm(pxw);
  if (s < 1e-12) {
    if (dot(pv, wv) > 0.0) return UnitQuaternion{};
    // p = -w: a half turn about any axis orthogonal to w.
    return quat_exp(UnitImag::normalize(orthogonal_unit(wv)), std::numbers::pi / 2.0);
  }
  const double theta = std::atan2(s, dot(wv, pv));
  const UnitImag eta = UnitImag::normalize(pxw);
  return quat_exp(eta, theta / 2.0);
}

TangentPoint big_phi(const UnitQuaternion& q) {
  const UnitImag base = conjugate_by(q, kImagK);
  const UnitImag dir = conjugate_by(q, kImagJ);
  return TangentPoint(base, dir);
}

UnitQuaternion big_phi_preimage(const TangentPoint& pt) {
  // q^-1 a q is the rotation R a with R = rotation matrix of q^-1, so we need
  // R k = base, R j = dir, R i = dir x base. Recover p = q^-1 from R.
  const Vec3 c2 = pt.base().vec();
  const Vec3 c1 = pt.dir().vec();
  const Vec3 c0 = cross(c1, c2);
  const double m00 = c0.x, m10 = c0.y, m20 = c0.z;
  const double m01 = c1.x, m11 = c1.y, m21 = c1.z;
  const double m02 = c2.x, m12 = c2.y, m22 = c2.z;
  const double trace = m00 + m11 + m22;
  Quaternion p;
  if (trace > 0.0) {
    const double s = 2.0 * std::sqrt(1.0 + trace);
    p = {0.25 * s, (m21 - m12) / s, (m02 - m20) / s, (m10 - m01) / s};
  } else if (m00 > m11 && m00 > m22) {
    const double s = 2.0 * std::sqrt(1.0 + m00 - m11 - m22);
    p = {(m21 - m12) / s, 0.25 * s, (m01 + m10) / s, (m02 + m20) / s};
  } else if (m11 > m22) {
    const double s = 2.0 * std::sqrt(1.0 + m11 - m00 - m22);
    p = {(m02 - m20) / s, (m01 + m10) / s, 0.25 * s, (m12 + m21) / s};
  } else {
    const double s = 2.0 * std::sqrt(1.0 + m22 - m00 - m11);
    p = {(m10 - m01) / s, (m02 + m20) / s, (m12 + m21) / s, 0.25 * s};
  }
  return UnitQuaternion::normalize(p.conj());
}

UnitQuaternion lens_act(int c, int k, const UnitQuaternion& q) {
  require_positive(c);
  const double angle = std::numbers::pi * static_cast<double>(k) / static_cast<double>(c);
  return quat_exp(kImagI, angle) * q;
}

TangentPoint rotate_along_circle(const TangentPoint& pt, double angle) {
  const double ca = std::cos(angle), sa = std::sin(angle);
  const Vec3 y = pt.base().vec();
  const Vec3 v = pt.dir().vec();
  return TangentPoint(UnitImag::normalize(ca * y + sa * v), UnitImag::normalize(-sa * y + ca * v));
}

TangentPoint zc_act_sts2(int c, const TangentPoint& pt) {
  require_positive(c);
  return rotate_along_circle(pt, 2.0 * std::numbers::pi / static_cast<double>(c));
}

UnitQuaternion sts2_flow(const UnitQuaternion& q, double theta) {
  return quat_exp(kImagI, theta / 2.0) * q;
}

std::vector<UnitQuaternion> lens_orbit(int c, const UnitQuaternion& q) {
  require_positive(c);
  std::vector<UnitQuaternion> orbit;
  orbit.reserve(static_cast<std::size_t>(2 * c));
  for (int k = 0; k < 2 * c; ++k) orbit.push_back(lens_act(c, k, q));
  return orbit;
}

namespace {

// +1 if a is lexicographically greater than b beyond tolerance, -1 if less,
// 0 on a full tie.
int lex_compare(const Quaternion& a, const Quaternion& b, double tol) {
  const double av[4] = {a.w, a.x, a.y, a.z};
  const double bv[4] = {b.w, b.x, b.y, b.z};
  for (int i = 0; i < 4; ++i) {
    if (av[i] > bv[i] + tol) return 1;
    if (av[i] < bv[i] - tol) return -1;
  }
  return 0;
}

}  // namespace

LensClass lens_canonicalize(int c, const UnitQuaternion& q) {
  constexpr double kTieTolerance = 1e-12;
  const auto orbit = lens_orbit(c, q);
  std::size_t best = 0;
  for (std::size_t k = 1; k < orbit.size(); ++k) {
    const int cmp = lex_compare(orbit[k].value(), orbit[best].value(), kTieTolerance);
    if (cmp == 0)
      throw Error(ErrorCode::DegenerateOrbit,
                  "orbit elements tie within 1e-12 in every component");
    if (cmp > 0) best = k;
  }
  return LensClass{c, orbit[best]};
}

}  // namespace nullcone
