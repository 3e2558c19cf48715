#pragma once

#include <array>
#include <cmath>
#include <numbers>

namespace nullcone {

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  constexpr double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  constexpr double& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  friend constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend constexpr Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
  friend constexpr Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
  friend constexpr Vec3 operator*(Vec3 a, double s) { return s * a; }
  friend constexpr bool operator==(Vec3, Vec3) = default;
};

constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(Vec3 a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalized(Vec3 a) { return (1.0 / norm(a)) * a; }

/// Coordinates (x1, x2, x3) of a point of the Lorentzian 3-manifold in a
/// diagonalizing chart; x3 is the timelike coordinate.
struct ChartPoint {
  double x1 = 0.0, x2 = 0.0, x3 = 0.0;

  constexpr double operator[](int i) const { return i == 0 ? x1 : (i == 1 ? x2 : x3); }
  constexpr double& operator[](int i) { return i == 0 ? x1 : (i == 1 ? x2 : x3); }
  friend constexpr bool operator==(ChartPoint, ChartPoint) = default;
};

inline ChartPoint operator+(ChartPoint p, Vec3 v) { return {p.x1 + v.x, p.x2 + v.y, p.x3 + v.z}; }

/// Components in the coordinate frame (d/dx1, d/dx2, d/dx3, d/dtheta) of the
/// projectivized null-cone bundle.
struct Vec4 {
  double a1 = 0.0, a2 = 0.0, a3 = 0.0, atheta = 0.0;

  constexpr double operator[](int i) const {
    return i == 0 ? a1 : (i == 1 ? a2 : (i == 2 ? a3 : atheta));
  }
  constexpr double& operator[](int i) {
    return i == 0 ? a1 : (i == 1 ? a2 : (i == 2 ? a3 : atheta));
  }
  constexpr Vec3 spatial() const { return {a1, a2, a3}; }

  friend constexpr Vec4 operator+(Vec4 a, Vec4 b) {
    return {a.a1 + b.a1, a.a2 + b.a2, a.a3 + b.a3, a.atheta + b.atheta};
  }
  friend constexpr Vec4 operator-(Vec4 a, Vec4 b) {
    return {a.a1 - b.a1, a.a2 - b.a2, a.a3 - b.a3, a.atheta - b.atheta};
  }
  friend constexpr Vec4 operator*(double s, Vec4 a) {
    return {s * a.a1, s * a.a2, s * a.a3, s * a.atheta};
  }
  friend constexpr bool operator==(Vec4, Vec4) = default;
};

inline double norm(Vec4 a) {
  return std::sqrt(a.a1 * a.a1 + a.a2 * a.a2 + a.a3 * a.a3 + a.atheta * a.atheta);
}

inline double wrap_angle(double theta) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double t = std::fmod(theta, two_pi);
  if (t < 0.0) t += two_pi;
  if (t >= two_pi) t -= two_pi;
  return t;
}

/// Signed difference a - b reduced to (-pi, pi].
inline double angle_difference(double a, double b) {
  constexpr double pi = std::numbers::pi;
  double d = std::remainder(a - b, 2.0 * pi);
  if (d <= -pi) d += 2.0 * pi;
  return d;
}

/// A point of the projectivized cone bundle: base point plus fiber angle.
class ConePoint {
 public:
  ConePoint() = default;
  ConePoint(ChartPoint base, double theta) : base_(base), theta_(wrap_angle(theta)) {}

  const ChartPoint& base() const { return base_; }
  double theta() const { return theta_; }

  /// Shift all four coordinates; used by finite-difference stencils.
  ConePoint shifted(Vec4 d) const {
    return ConePoint({base_.x1 + d.a1, base_.x2 + d.a2, base_.x3 + d.a3}, theta_ + d.atheta);
  }
  double coordinate(int i) const { return i < 3 ? base_[i] : theta_; }

 private:
  ChartPoint base_{};
  double theta_ = 0.0;
};

/// Axis-aligned box [lo_i, hi_i] in chart coordinates.
struct Box {
  std::array<double, 3> lo{};
  std::array<double, 3> hi{};

  bool contains(const ChartPoint& p) const {
    for (int i = 0; i < 3; ++i)
      if (!(p[i] >= lo[i] && p[i] <= hi[i])) return false;
    return true;
  }
};

}  // namespace nullcone
