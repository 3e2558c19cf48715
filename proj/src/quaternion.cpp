#include "nullcone/quaternion.hpp"

#include <cmath>
#include <string>

#include "nullcone/error.hpp"

namespace nullcone {

double Quaternion::norm() const { return std::sqrt(norm_sq()); }

Quaternion Quaternion::inverse() const {
  const double n2 = norm_sq();
  if (n2 == 0.0) throw Error(ErrorCode::InvalidArgument, "inverse of the zero quaternion");
  return (1.0 / n2) * conj();
}

double distance(const Quaternion& a, const Quaternion& b) { return (a - b).norm(); }

UnitQuaternion::UnitQuaternion(const Quaternion& q) : q_(q) {
  if (!(std::abs(q.norm() - 1.0) <= kTolerance))
    throw Error(ErrorCode::InvalidArgument,
                "quaternion is not of unit norm (|q| = " + std::to_string(q.norm()) + ")");
}

UnitQuaternion UnitQuaternion::normalize(const Quaternion& q) {
  const double n = q.norm();
  if (!(n > 0.0) || !std::isfinite(n))
    throw Error(ErrorCode::InvalidArgument, "cannot normalize a zero or non-finite quaternion");
  return UnitQuaternion((1.0 / n) * q, 0, Unchecked{});
}

UnitQuaternion UnitQuaternion::inverse() const { return UnitQuaternion(q_.conj(), chain_, Unchecked{}); }

UnitQuaternion UnitQuaternion::operator-() const { return UnitQuaternion(-q_, chain_, Unchecked{}); }

UnitQuaternion operator*(const UnitQuaternion& a, const UnitQuaternion& b) {
  const int chain = a.chain_ + b.chain_ + 1;
  const Quaternion p = a.q_ * b.q_;
  if (chain > UnitQuaternion::kMaxChain) return UnitQuaternion::normalize(p);
  return UnitQuaternion(p, chain, UnitQuaternion::Unchecked{});
}

UnitImag::UnitImag(const Quaternion& q) : UnitImag(q.imag()) {
  if (q.w != 0.0) throw Error(ErrorCode::InvalidArgument, "quaternion has a nonzero real part");
}

UnitImag::UnitImag(Vec3 v) : v_(v) {
  if (!(std::abs(norm(v) - 1.0) <= kTolerance))
    throw Error(ErrorCode::InvalidArgument, "imaginary quaternion is not of unit norm");
}

UnitImag UnitImag::normalize(Vec3 v) {
  const double n = norm(v);
  if (!(n > 0.0) || !std::isfinite(n))
    throw Error(ErrorCode::InvalidArgument, "cannot normalize a zero or non-finite vector");
  return UnitImag((1.0 / n) * v, Unchecked{});
}

UnitImag UnitImag::operator-() const { return UnitImag(-v_, Unchecked{}); }

TangentPoint::TangentPoint(UnitImag base, UnitImag dir) : base_(base), dir_(dir) {
  if (!(std::abs(dot(base.vec(), dir.vec())) <= kTolerance))
    throw Error(ErrorCode::InvalidArgument, "tangent direction is not orthogonal to the base point");
}

double distance(const TangentPoint& a, const TangentPoint& b) {
  const Vec3 db = a.base().vec() - b.base().vec();
  const Vec3 dd = a.dir().vec() - b.dir().vec();
  return std::sqrt(dot(db, db) + dot(dd, dd));
}

Quaternion quat_mul(const Quaternion& a, const Quaternion& b) { return a * b; }

UnitQuaternion quat_exp(const UnitImag& u, double theta) {
  const Vec3 v = u.vec();
  const double s = std::sin(theta);
  return UnitQuaternion::normalize({std::cos(theta), s * v.x, s * v.y, s * v.z});
}

ImagProducts imag_products(const Quaternion& u, const Quaternion& v) {
  const Quaternion uv = u * v;
  const Quaternion vu = v * u;
  ImagProducts out;
  out.cross = 0.5 * (uv - vu);
  out.inner = -0.5 * (uv + vu).w;
  return out;
}

UnitImag conjugate_by(const UnitQuaternion& q, const UnitImag& w) {
  const Quaternion r = q.value().conj() * w.value() * q.value();
  // Real part is O(1e-16) in exact unit arithmetic; dropping it and
  // renormalizing keeps the invariant exact.
  return UnitImag::normalize(r.imag());
}

}  // namespace nullcone
