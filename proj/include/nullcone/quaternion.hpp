#pragma once

#include "nullcone/geometry.hpp"

namespace nullcone {

/// Quaternion w + x i + y j + z k.
struct Quaternion {
  double w = 0.0, x = 0.0, y = 0.0, z = 0.0;

  static constexpr Quaternion real(double a) { return {a, 0.0, 0.0, 0.0}; }
  static constexpr Quaternion pure(Vec3 v) { return {0.0, v.x, v.y, v.z}; }

  constexpr Vec3 imag() const { return {x, y, z}; }
  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }
  double norm() const;
  Quaternion inverse() const;

  friend constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend constexpr Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
  friend constexpr Quaternion operator*(double s, const Quaternion& a) {
    return {s * a.w, s * a.x, s * a.y, s * a.z};
  }
  // Hamilton product.
  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
  }
  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

inline constexpr Quaternion kQuatOne{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion kQuatI{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kQuatJ{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kQuatK{0.0, 0.0, 0.0, 1.0};

double distance(const Quaternion& a, const Quaternion& b);

/// Element of the unit sphere S^3 in H. Constructors check the norm to 1e-12;
/// products renormalize once a chain exceeds 16 multiplications.
class UnitQuaternion {
 public:
  static constexpr double kTolerance = 1e-12;
  static constexpr int kMaxChain = 16;

  UnitQuaternion() : q_(kQuatOne) {}
  explicit UnitQuaternion(const Quaternion& q);

  static UnitQuaternion normalize(const Quaternion& q);

  const Quaternion& value() const { return q_; }
  operator const Quaternion&() const { return q_; }
  UnitQuaternion inverse() const;
  UnitQuaternion operator-() const;
  int chain_length() const { return chain_; }

  friend UnitQuaternion operator*(const UnitQuaternion& a, const UnitQuaternion& b);

 private:
  struct Unchecked {};
  UnitQuaternion(const Quaternion& q, int chain, Unchecked) : q_(q), chain_(chain) {}

  Quaternion q_;
  int chain_ = 0;
};

/// Unit pure-imaginary quaternion, i.e. a point of S^2 in the imaginary
/// quaternions. The real part is exactly zero.
class UnitImag {
 public:
  static constexpr double kTolerance = 1e-12;

  UnitImag() : v_{1.0, 0.0, 0.0} {}
  explicit UnitImag(const Quaternion& q);
  explicit UnitImag(Vec3 v);

  static UnitImag normalize(Vec3 v);

  Vec3 vec() const { return v_; }
  Quaternion value() const { return Quaternion::pure(v_); }
  UnitImag operator-() const;

 private:
  struct Unchecked {};
  UnitImag(Vec3 v, Unchecked) : v_(v) {}
  Vec3 v_;
};

inline const UnitImag kImagI{Vec3{1.0, 0.0, 0.0}};
inline const UnitImag kImagJ{Vec3{0.0, 1.0, 0.0}};
inline const UnitImag kImagK{Vec3{0.0, 0.0, 1.0}};

/// Point (base, dir) of the unit tangent bundle of S^2.
class TangentPoint {
 public:
  static constexpr double kTolerance = 1e-10;

  TangentPoint(UnitImag base, UnitImag dir);

  const UnitImag& base() const { return base_; }
  const UnitImag& dir() const { return dir_; }

 private:
  UnitImag base_;
  UnitImag dir_;
};

double distance(const TangentPoint& a, const TangentPoint& b);

Quaternion quat_mul(const Quaternion& a, const Quaternion& b);

/// cos(theta) + u sin(theta).
UnitQuaternion quat_exp(const UnitImag& u, double theta);

struct ImagProducts {
  Quaternion cross;
  double inner = 0.0;
};

/// Cross product (uv - vu)/2 and inner product -(uv + vu)/2 of pure
/// imaginary quaternions, computed in the algebra.
ImagProducts imag_products(const Quaternion& u, const Quaternion& v);
inline ImagProducts imag_products(const UnitImag& u, const UnitImag& v) {
  return imag_products(u.value(), v.value());
}

/// q^-1 w q.
UnitImag conjugate_by(const UnitQuaternion& q, const UnitImag& w);

}  // namespace nullcone
