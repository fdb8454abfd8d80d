#pragma once

#include <Eigen/Dense>

namespace nlr {

/// Matrix exponential by scaling and squaring with a truncated Taylor series.
Eigen::MatrixXd expm(const Eigen::MatrixXd& a);

/// Principal logarithm of a rotation matrix, returned as a skew-symmetric matrix.
///
/// Rotation angles are read off the 2x2 blocks of the real Schur form.
/// Throws BranchError when some angle is pi (the logarithm is not unique there)
/// and DimensionError when the input is not square.
Eigen::MatrixXd log_rotation(const Eigen::MatrixXd& rho, double branch_tol = 1e-9);

/// max |a_ij - b_ij|
double max_abs_diff(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// diag(+1, -1, ..., -1) of size n
Eigen::MatrixXd minkowski_metric(int n);

} // namespace nlr
