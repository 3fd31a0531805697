#pragma once

#include "jordan/algebra.hpp"

namespace jordan {

/// Residuals recorded when a linear map is certified as an automorphism.
struct Certificate {
  double unit_residual = 0.0;              // ||T(1) - 1||
  double multiplicativity_residual = 0.0;  // max over basis pairs of ||T(e_i o e_j) - T e_i o T e_j||
  double inverse_unit_residual = 0.0;
  double inverse_multiplicativity_residual = 0.0;

  double worst() const;
};

/// Residuals of a matrix as a candidate automorphism; never throws.
Certificate measure_certificate(const JordanAlgebra& algebra, const Mat& t, const Mat& t_inverse);

/// Invertible unital multiplicative map, stored as a matrix on coefficient
/// vectors together with its inverse and certification record.
class Automorphism {
 public:
  static constexpr double kUnitTolerance = 1e-9;
  static constexpr double kProductTolerance = 1e-8;

  /// Throws CertificationError when the unit residual exceeds unit_tol or the
  /// multiplicativity residual (of T or its inverse) exceeds product_tol.
  static Automorphism certify(AlgebraHandle algebra, Mat t, double unit_tol = kUnitTolerance,
                              double product_tol = kProductTolerance);
  static Automorphism identity(AlgebraHandle algebra);

  const AlgebraHandle& algebra() const { return alg_; }
  const Mat& matrix() const { return t_; }
  const Mat& inverse_matrix() const { return inv_; }
  const Certificate& certificate() const { return cert_; }

  JordanElement apply(const JordanElement& a) const;
  Atom apply(const Atom& a) const;

  /// (this * other)(x) = this(other(x)); re-certified at product_tol.
  Automorphism compose(const Automorphism& other, double product_tol = 1e-7) const;
  Automorphism inverse(double product_tol = 1e-7) const;

 private:
  Automorphism(AlgebraHandle alg, Mat t, Mat inv, Certificate cert)
      : alg_(std::move(alg)), t_(std::move(t)), inv_(std::move(inv)), cert_(cert) {}

  AlgebraHandle alg_;
  Mat t_;
  Mat inv_;
  Certificate cert_;
};

/// exp(t [L_a, L_b]).
Automorphism derivation_exponential(const JordanElement& a, const JordanElement& b, double t);

/// a -> U a U* on H(n, K) for K in {R, C, H}. Throws PreconditionError for
/// octonions, other families, or U with ||U*U - I|| > 1e-10.
Automorphism conjugation_automorphism(const AlgebraHandle& algebra, const HyperMatrix& u);

/// (s, x) -> (s, R x) on spin(n). Throws PreconditionError unless R^T R = I to 1e-10.
Automorphism spin_automorphism(const AlgebraHandle& algebra, const Mat& r);

/// exp of a random element of the inner derivation algebra, with parameters
/// drawn from a standard normal scaled by scale / dimension.
Automorphism random_derivation_automorphism(const AlgebraHandle& algebra, Rng& rng, double scale = 1.0);

/// Haar-like random element: a random orthogonal R on spin(n), a random
/// unitary conjugation on H(n, R/C/H), composed with a derivation flow.
Automorphism random_automorphism(const AlgebraHandle& algebra, Rng& rng);

/// Unitary with Gaussian columns orthonormalized over K (right scalars).
HyperMatrix random_unitary(Field field, std::size_t n, Rng& rng);

/// Orthonormal basis of the inner derivation algebra span{[L_ei, L_ej]}.
std::vector<Mat> derivation_basis(const JordanAlgebra& algebra);

}  // namespace jordan
