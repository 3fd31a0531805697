#pragma once

#include <Eigen/Dense>

namespace jordan {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Matrix exponential (scaling and squaring with Pade approximants).
Mat expm(const Mat& a);

/// Number of singular values above cutoff.
int numerical_rank(const Mat& a, double cutoff);

/// Minimum-norm least-squares solution of a x = b.
Vec solve_min_norm(const Mat& a, const Vec& b);

}  // namespace jordan
