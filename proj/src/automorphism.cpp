#include "jordan/automorphism.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "jordan/errors.hpp"

namespace jordan {

namespace {

double multiplicativity(const JordanAlgebra& alg, const Mat& t) {
  double worst = 0.0;
  const int n = alg.dimension();
  for (int i = 0; i < n; ++i) {
    const Vec ti = t.col(i);
    const Mat lti = alg.left_multiplication(ti);
    for (int j = i; j < n; ++j) {
      const Vec lhs = t * alg.product(alg.basis_vector(i), alg.basis_vector(j));
      const Vec rhs = lti * t.col(j);
      worst = std::max(worst, alg.norm(lhs - rhs));
    }
  }
  return worst;
}

}  // namespace

double Certificate::worst() const {
  return std::max({unit_residual, multiplicativity_residual, inverse_unit_residual, inverse_multiplicativity_residual});
}

Certificate measure_certificate(const JordanAlgebra& algebra, const Mat& t, const Mat& t_inverse) {
  Certificate c;
  c.unit_residual = algebra.norm(t * algebra.unit() - algebra.unit());
  c.multiplicativity_residual = multiplicativity(algebra, t);
  c.inverse_unit_residual = algebra.norm(t_inverse * algebra.unit() - algebra.unit());
  c.inverse_multiplicativity_residual = multiplicativity(algebra, t_inverse);
  return c;
}

Automorphism Automorphism::certify(AlgebraHandle algebra, Mat t, double unit_tol, double product_tol) {
  const int n = algebra->dimension();
  if (t.rows() != n || t.cols() != n) throw DimensionError("automorphism matrix does not match algebra dimension");
  Eigen::FullPivLU<Mat> lu(t);
  if (!lu.isInvertible()) throw CertificationError("linear map is singular");
  Mat inv = lu.inverse();
  const Certificate cert = measure_certificate(*algebra, t, inv);
  if (cert.unit_residual > unit_tol || cert.inverse_unit_residual > unit_tol) {
    throw CertificationError("map does not preserve the unit (residual " + std::to_string(cert.unit_residual) + ")");
  }
  if (cert.multiplicativity_residual > product_tol || cert.inverse_multiplicativity_residual > product_tol) {
    throw CertificationError("map is not multiplicative (residual " +
                             std::to_string(std::max(cert.multiplicativity_residual,
                                                     cert.inverse_multiplicativity_residual)) +
                             ")");
  }
  return Automorphism(std::move(algebra), std::move(t), std::move(inv), cert);
}

Automorphism Automorphism::identity(AlgebraHandle algebra) {
  const int n = algebra->dimension();
  return Automorphism(std::move(algebra), Mat::Identity(n, n), Mat::Identity(n, n), Certificate{});
}

JordanElement Automorphism::apply(const JordanElement& a) const {
  if (a.algebra() != alg_) throw AlgebraMismatch("automorphism applied to an element of another algebra");
  return {alg_, t_ * a.coeffs()};
}

Atom Automorphism::apply(const Atom& a) const { return Atom(apply(a.element())); }

Automorphism Automorphism::compose(const Automorphism& other, double product_tol) const {
  if (other.alg_ != alg_) throw AlgebraMismatch("composing automorphisms of different algebras");
  return certify(alg_, t_ * other.t_, product_tol, product_tol);
}

Automorphism Automorphism::inverse(double product_tol) const { return certify(alg_, inv_, product_tol, product_tol); }

Automorphism derivation_exponential(const JordanElement& a, const JordanElement& b, double t) {
  require_same_algebra(a, b);
  const AlgebraHandle& alg = a.algebra();
  return Automorphism::certify(alg, expm(t * inner_derivation(*alg, a.coeffs(), b.coeffs())));
}

Automorphism conjugation_automorphism(const AlgebraHandle& algebra, const HyperMatrix& u) {
  const auto& d = algebra->descriptor();
  if (d.kind != AlgebraDescriptor::Kind::Matrix) throw PreconditionError("conjugation requires an H(n,K) algebra");
  if (d.field == Field::Octonion) {
    throw PreconditionError("conjugation is not defined over the octonions (non-associative)");
  }
  if (u.field() != d.field || u.rows() != static_cast<std::size_t>(d.n) || u.cols() != u.rows()) {
    throw DimensionError("conjugating matrix does not match the algebra");
  }
  const HyperMatrix gram = u.adjoint() * u - HyperMatrix::identity(d.field, u.rows());
  if (std::sqrt(gram.frobenius_norm_sq()) > 1e-10) throw PreconditionError("conjugating matrix is not unitary");
  const HyperMatrix u_adj = u.adjoint();
  const int n = algebra->dimension();
  Mat t(n, n);
  for (int k = 0; k < n; ++k) {
    const HyperMatrix m = to_hyper_matrix(*algebra, algebra->basis_vector(k));
    t.col(k) = from_hyper_matrix(*algebra, u * m * u_adj);
  }
  return Automorphism::certify(algebra, std::move(t));
}

Automorphism spin_automorphism(const AlgebraHandle& algebra, const Mat& r) {
  const auto& d = algebra->descriptor();
  if (d.kind != AlgebraDescriptor::Kind::Spin) throw PreconditionError("spin_automorphism requires a spin factor");
  if (r.rows() != d.n || r.cols() != d.n) throw DimensionError("rotation size differs from spin factor rank");
  if ((r.transpose() * r - Mat::Identity(d.n, d.n)).norm() > 1e-10) {
    throw PreconditionError("spin_automorphism: matrix is not orthogonal");
  }
  Mat t = Mat::Zero(d.n + 1, d.n + 1);
  t(0, 0) = 1.0;
  t.bottomRightCorner(d.n, d.n) = r;
  return Automorphism::certify(algebra, std::move(t));
}

std::vector<Mat> derivation_basis(const JordanAlgebra& algebra) {
  static std::mutex mutex;
  static std::map<std::string, std::vector<Mat>> cache;
  const std::string key = algebra.descriptor().to_string();
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const int n = algebra.dimension();
  std::vector<Vec> flat;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Mat d = inner_derivation(algebra, algebra.basis_vector(i), algebra.basis_vector(j));
      Vec v = Eigen::Map<const Vec>(d.data(), d.size());
      const double original = v.norm();
      if (original < 1e-12) continue;
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& b : flat) v -= b.dot(v) * b;
      }
      if (v.norm() > 1e-8 * original) flat.push_back(v / v.norm());
    }
  }
  std::vector<Mat> basis;
  for (const auto& v : flat) basis.push_back(Eigen::Map<const Mat>(v.data(), n, n));
  std::lock_guard lock(mutex);
  cache.emplace(key, basis);
  return basis;
}

Automorphism random_derivation_automorphism(const AlgebraHandle& algebra, Rng& rng, double scale) {
  const std::vector<Mat> basis = derivation_basis(*algebra);
  const int n = algebra->dimension();
  Mat d = Mat::Zero(n, n);
  for (const auto& b : basis) d += (scale * standard_normal(rng)) * b;
  return Automorphism::certify(algebra, expm(d * std::sqrt(static_cast<double>(n))));
}

HyperMatrix random_unitary(Field field, std::size_t n, Rng& rng) {
  HyperMatrix u(field, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    HyperMatrix v(field, n, 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < v(i, 0).dim(); ++c) v(i, 0)[c] = standard_normal(rng);
    }
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        const HyperMatrix col = u.column(k);
        v -= col.right_scaled(hermitian_inner(col, v));
      }
    }
    v *= 1.0 / std::sqrt(v.frobenius_norm_sq());
    u.set_column(j, v);
  }
  return u;
}

Automorphism random_automorphism(const AlgebraHandle& algebra, Rng& rng) {
  const auto& d = algebra->descriptor();
  Automorphism flow = random_derivation_automorphism(algebra, rng);
  if (d.kind == AlgebraDescriptor::Kind::Spin) {
    Mat g(d.n, d.n);
    for (int i = 0; i < d.n; ++i) {
      for (int j = 0; j < d.n; ++j) g(i, j) = standard_normal(rng);
    }
    const Mat q = g.householderQr().householderQ();
    return spin_automorphism(algebra, q).compose(flow);
  }
  if (d.kind == AlgebraDescriptor::Kind::Matrix && d.field != Field::Octonion) {
    return conjugation_automorphism(algebra, random_unitary(d.field, static_cast<std::size_t>(d.n), rng)).compose(flow);
  }
  return flow;
}

}  // namespace jordan
