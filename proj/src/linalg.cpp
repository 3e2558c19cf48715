#include "nullcone/linalg.hpp"

#include <algorithm>
#include <limits>

namespace nullcone {

Eigen::MatrixXd columns(const std::vector<Vec4>& vs) {
  Eigen::MatrixXd m(4, static_cast<Eigen::Index>(vs.size()));
  for (std::size_t c = 0; c < vs.size(); ++c)
    for (int r = 0; r < 4; ++r) m(r, static_cast<Eigen::Index>(c)) = vs[c][r];
  return m;
}

Eigen::VectorXd singular_values(const Eigen::MatrixXd& m) {
  return Eigen::JacobiSVD<Eigen::MatrixXd>(m).singularValues();
}

int numerical_rank(const Eigen::MatrixXd& m, double rel_tol) {
  const Eigen::VectorXd s = singular_values(m);
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k)
    if (s(k) / s(0) > rel_tol) ++rank;
  return rank;
}

int numerical_rank(const std::vector<Vec4>& vs, double rel_tol) {
  return numerical_rank(columns(vs), rel_tol);
}

double condition_at(const Eigen::MatrixXd& m, int k) {
  const Eigen::VectorXd s = singular_values(m);
  if (k < 1 || k > s.size() || s(k - 1) == 0.0) return std::numeric_limits<double>::infinity();
  return s(0) / s(k - 1);
}

Eigen::MatrixXd orthonormal_basis(const Eigen::MatrixXd& m, int rank) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU);
  return svd.matrixU().leftCols(rank);
}

double distance_to_span(const Eigen::VectorXd& v, const Eigen::MatrixXd& basis) {
  const Eigen::MatrixXd q = orthonormal_basis(basis, numerical_rank(basis));
  return (v - q * (q.transpose() * v)).norm();
}

Eigen::MatrixXd null_space(const Eigen::MatrixXd& m, int rank) {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  return svd.matrixV().rightCols(m.cols() - rank);
}

double subspace_gap(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  const Eigen::MatrixXd qa = orthonormal_basis(a, static_cast<int>(a.cols()));
  const Eigen::MatrixXd qb = orthonormal_basis(b, static_cast<int>(b.cols()));
  const Eigen::MatrixXd residual = qb - qa * (qa.transpose() * qb);
  return residual.cols() == 0 ? 0.0 : singular_values(residual)(0);
}

}  // namespace nullcone
