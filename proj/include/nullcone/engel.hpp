#pragma once

#include <functional>

#include "nullcone/lorentz.hpp"
#include "nullcone/metric.hpp"
#include "nullcone/report.hpp"
#include "nullcone/sampling.hpp"

namespace nullcone {

/// Coefficients of the kernel field Z = X + (F cos(theta) + G sin(theta) + H) d/dtheta.
struct KernelCoeffs {
  double F = 0.0, G = 0.0, H = 0.0;
};

struct FrameSample {
  Vec4 X;
  Vec4 Xdot;
  Vec4 dTheta{0.0, 0.0, 0.0, 1.0};
  Vec4 Z;
};

/// Which field plays the role of the kernel. DropTheta uses X itself;
/// Perturbed adds `perturbation` to the d/dtheta coefficient. The last two
/// exist as negative controls.
enum class KernelVariant { Exact, DropTheta, Perturbed };

struct KernelOptions {
  KernelVariant variant = KernelVariant::Exact;
  double perturbation = 0.1;
};

KernelCoeffs kernel_coeffs(const DiagonalMetric& m, const ConePoint& cp);

FrameSample frame_fields(const DiagonalMetric& m, const ConePoint& cp, KernelOptions opts = {});

/// Components (A, B, C) of [X, Xdot] from the closed-form expressions.
Vec3 x_xdot_bracket_closed_form(const DiagonalMetric& m, const ConePoint& cp);

using VectorField = std::function<Vec4(const ConePoint&)>;

VectorField field_X(const DiagonalMetric& m);
VectorField field_Xdot(const DiagonalMetric& m);
VectorField field_dtheta();
VectorField field_Z(const DiagonalMetric& m, KernelOptions opts = {});

/// [V, W] = (JW) V - (JV) W with central-difference Jacobians,
/// step 1e-5 (1 + |coordinate|).
Vec4 lie_bracket(const VectorField& V, const VectorField& W, const ConePoint& cp);

/// Ranks (2, 3, 4) of span{X, dtheta}, plus [X, dtheta], plus [X, Xdot] and
/// [dtheta, Xdot]. The residual is the worst condition number
/// sigma_1 / sigma_k of the three frames, so the pass threshold 1e7
/// matches the relative rank cut-off 1e-7.
CheckReport engel_rank_check(const DiagonalMetric& m, int samples, Rng& rng);

struct KernelCharResult {
  /// Largest component of [Z, e], e in {X, dtheta, Xdot}, orthogonal to
  /// span{X, dtheta, Xdot}; threshold 1e-6.
  CheckReport kernel;
  /// Reciprocal of the smallest separation achieved by the non-kernel
  /// direction dtheta; threshold 1e2, i.e. separation at least 1e-2.
  CheckReport uniqueness;
};

KernelCharResult kernel_char_check(const DiagonalMetric& m, int samples, Rng& rng,
                                   KernelOptions opts = {});

/// RK4 integration of the kernel field on the cone bundle over [0, T].
Trajectory kernel_flow(const DiagonalMetric& m, const ConePoint& cp0, double T, double h = 1e-3,
                       KernelOptions opts = {});

/// Compares kernel-flow base curves with geodesics started at the cone
/// embedding of the same point, reparametrized to the kernel parameter,
/// over parameter length 1. Threshold 1e-6.
CheckReport spray_equiv_check(const DiagonalMetric& m, int trials, Rng& rng, KernelOptions opts = {},
                              double h = 1e-3);

/// |theta' - x3' sqrt(-g33) (F cos + G sin + H)| / (1 + |theta'|) along a
/// geodesic, with theta' from second-order differences. Threshold 1e-4.
CheckReport theta_ode_residual(const DiagonalMetric& m, const Trajectory& traj);

}  // namespace nullcone
