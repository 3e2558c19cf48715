#pragma once

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "nullcone/geometry.hpp"
#include "nullcone/metric.hpp"
#include "nullcone/rk4.hpp"

namespace nullcone {

/// gamma[k][i][j] = Gamma^k_ij.
using Christoffel = std::array<std::array<std::array<double, 3>, 3>, 3>;

Christoffel christoffel(const DiagonalMetric& m, const ChartPoint& p);

/// g(v, v) = v1^2 g11 + v2^2 g22 + v3^2 g33.
double null_residual(const DiagonalMetric& m, const ChartPoint& p, Vec3 v);

/// Fiber angle of the null line through v, without precondition checks.
double cone_angle(const DiagonalMetric& m, const ChartPoint& p, Vec3 v);

/// Fiber angle of a future-pointing null vector. Throws NonNull when
/// |g(v,v)| > 1e-8 |v|^2 and PastPointing when v3 <= 0.
ConePoint cone_lift(const DiagonalMetric& m, const ChartPoint& p, Vec3 v);

/// The null vector (cos(theta)/sqrt(g11), sin(theta)/sqrt(g22), 1/sqrt(-g33)).
Vec3 cone_embed(const DiagonalMetric& m, const ConePoint& cp);

struct TrajectorySample {
  double s = 0.0;
  ChartPoint x;
  Vec3 velocity;
  double theta = 0.0;
  double null_residual = 0.0;  // |g(velocity, velocity)|
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  bool truncated = false;  // stopped at the domain boundary before reaching T
};

/// Right-hand side of the first-order geodesic system in (x, v).
State<6> geodesic_rhs(const DiagonalMetric& m, const State<6>& y);

/// Fixed-step RK4 on the geodesic equation from (p0, v0) over [0, T]; the
/// last step is shortened to land on T. v0 must be null within 1e-10 |v0|^2.
/// Stops early, with truncated set, when the next state leaves the domain.
Trajectory integrate_geodesic(const DiagonalMetric& m, const ChartPoint& p0, Vec3 v0, double T,
                              double h = 1e-3);

/// Number of fixed steps covering [0, T] with step h; throws StepUnderflow
/// for unusable steps.
long step_count(double T, double h);

/// Header `s,x1,x2,x3,theta,null_residual`, 17 significant digits.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

}  // namespace nullcone
