#include "jordan/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace jordan {

Mat expm(const Mat& a) { return a.exp(); }

int numerical_rank(const Mat& a, double cutoff) {
  Eigen::JacobiSVD<Mat> svd(a);
  const Vec& s = svd.singularValues();
  int r = 0;
  for (Eigen::Index k = 0; k < s.size(); ++k) {
    if (s[k] > cutoff) ++r;
  }
  return r;
}

Vec solve_min_norm(const Mat& a, const Vec& b) { return a.completeOrthogonalDecomposition().solve(b); }

}  // namespace jordan
