#pragma once

#include <vector>

#include <Eigen/Dense>

#include "nullcone/geometry.hpp"

namespace nullcone {

/// Relative singular-value threshold below which a direction does not count
/// toward numerical rank.
inline constexpr double kRankTolerance = 1e-7;

Eigen::MatrixXd columns(const std::vector<Vec4>& vs);

/// Singular values in decreasing order.
Eigen::VectorXd singular_values(const Eigen::MatrixXd& m);

/// Number of singular values with sigma_k / sigma_1 > rel_tol.
int numerical_rank(const Eigen::MatrixXd& m, double rel_tol = kRankTolerance);
int numerical_rank(const std::vector<Vec4>& vs, double rel_tol = kRankTolerance);

/// sigma_1 / sigma_k for the k-th singular value (1-based); infinity when it
/// vanishes or k exceeds the column count.
double condition_at(const Eigen::MatrixXd& m, int k);

/// Orthonormal basis (as columns) of the column space, at the given rank.
Eigen::MatrixXd orthonormal_basis(const Eigen::MatrixXd& m, int rank);

/// Norm of the component of v orthogonal to the column span of basis.
double distance_to_span(const Eigen::VectorXd& v, const Eigen::MatrixXd& basis);

/// Orthonormal basis of the null space of m, at the given rank of m.
Eigen::MatrixXd null_space(const Eigen::MatrixXd& m, int rank);

/// Largest sine of the principal angles between two column spans of equal
/// dimension; 0 when they coincide.
double subspace_gap(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

}  // namespace nullcone
