#pragma once

#include <array>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "json.hpp"
#include "nullcone/hopf.hpp"
#include "nullcone/report.hpp"
#include "nullcone/sampling.hpp"

namespace nullcone {

// ------------------------------------------------------------ S^2 x S^1

/// Null geodesic of (S^2 x S^1, g_c) through time 0, in the quaternion model.
struct S2S1Geodesic {
  TangentPoint start;
  int c = 1;
};

struct S2S1Point {
  UnitImag point;
  double t = 0.0;  // in [0, 2 pi)
};

S2S1Point s2s1_eval(const S2S1Geodesic& g, double s);

/// The c points where the geodesic meets the slice t = 0, via the rotation
/// (x_j, u_j) = R(2 pi j / c)(x, u).
std::vector<TangentPoint> slice_points(const S2S1Geodesic& g);

/// The same points via big_phi(sts2_flow(q, 2 pi j / c)).
std::vector<TangentPoint> slice_points_by_flow(const S2S1Geodesic& g);

/// Circle of radius tau about y: y cos(tau) + (e cos(s) + v sin(s)) sin(tau).
struct SkyCircleParams {
  UnitImag center;
  double tau = 0.0;
  UnitImag e;  // unit tangent at center pointing back to the geodesic's base point
  UnitImag v;
};

/// Sky of the point at parameter tau along the geodesic through pt: the
/// circle whose s = 0 point is pt's base.
SkyCircleParams sky_params(const TangentPoint& pt, double tau);

UnitImag sky_circle(const SkyCircleParams& p, double s);
Vec3 sky_circle_derivative(const SkyCircleParams& p, double s);

/// Tangent vectors of ST S^2 at (x, u) are pairs (dx, du) in R^6.
using Tangent6 = Eigen::Matrix<double, 6, 1>;

/// Basis {fiber direction (0, x cross u), horizontal lift (x cross u, 0)} of
/// the contact plane at pt.
std::array<Tangent6, 2> contact_plane(const TangentPoint& pt);

/// Tangent of the curve of geodesics in the sky circle at s = 0.
Tangent6 sky_tangent(const SkyCircleParams& p);

/// Tangent of the vertical sky (all directions at the base point).
Tangent6 vertical_sky_tangent(const TangentPoint& pt);

/// Differential of the rotation R(angle) acting on (x, u).
Tangent6 rotate_tangent(const Tangent6& t, double angle);

CheckReport sky_tangency_check(int c, int trials, Rng& rng);

// ------------------------------------------------------------ Minkowski

struct MinkP {
  double u, v, theta;
};
struct MinkPhi {
  double u, v, theta, omega;
};

MinkP mink_p(double x, double y, double t, double theta);
MinkPhi mink_phi(double x, double y, double t, double theta);

/// (du, dv, domega) components of the cone generator at (omega, theta);
/// requires sin(omega) >= 0.05.
Vec3 mink_cone_vector(double omega, double theta);

/// du^2 + dv^2 - sin(omega)^-4 domega^2 applied to w twice.
double mink_image_metric(double omega, Vec3 w);

/// Leaf-space map (u, v, theta, omega) -> (u - cos(theta) cot(omega),
/// v - sin(theta) cot(omega), omega).
Vec3 mink_q(const MinkPhi& p);

CheckReport mink_deprolong_contact_check(int samples, Rng& rng);
CheckReport mink_cone_null_check(int samples, Rng& rng);
CheckReport mink_cot_pullback_check(int samples, Rng& rng);

// ------------------------------------------------ deprolongation of ST S^2

UnitQuaternion sts2_deprolong_p(const UnitQuaternion& q, double t);

CheckReport sts2_deprolong_invariance_check(int samples, Rng& rng);

// --------------------------------------------------------- foliations

enum class FoliationExample { Minkowski, S2S1 };

/// Residual is the largest of the normalized condition ratios (measured /
/// bound for upper bounds, bound / measured for lower bounds), threshold 1:
/// transversality |det| > 1e-6 and membership in D within 1e-8 for (i),
/// quotient Jacobian rank 3 for (ii), pairwise line separation > 1e-6 and
/// nullity within 1e-8 along a 64-point leaf for (iii).
CheckReport foliation_check(FoliationExample example, int samples, Rng& rng);

/// Same sampling with the leaf direction replaced by the kernel. Reports
/// the largest |det| seen; it passes when (i) fails everywhere.
CheckReport foliation_control(FoliationExample example, int samples, Rng& rng);

// ------------------------------------------------------ lens checks

CheckReport slice_consistency_check(int samples, Rng& rng);
CheckReport s2s1_closure_check(int samples, Rng& rng);

struct LensIdentification {
  /// Largest distance between canonical representatives of one geodesic's
  /// slice points; threshold 1e-10.
  CheckReport identification;
  /// Reciprocal of the smallest distance between classes of distinct
  /// geodesics; threshold 1e6.
  CheckReport distinct;
};

LensIdentification lens_identification_check(int c, int geodesics, Rng& rng);

/// Z_2c orbit of q and Z_c orbit of big_phi(q).
nlohmann::json orbit_table(int c, const UnitQuaternion& q);

}  // namespace nullcone
