#pragma once

#include <cstddef>
#include <vector>

#include "jordan/hypercomplex.hpp"

namespace jordan {

/// Dense matrix with entries in one Cayley-Dickson level. Products are the
/// plain entrywise sums of products, so they are well defined for octonions
/// as well, though not associative there.
class HyperMatrix {
 public:
  HyperMatrix(Field f, std::size_t rows, std::size_t cols);

  static HyperMatrix identity(Field f, std::size_t n);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Hypercomplex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Hypercomplex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  HyperMatrix& operator+=(const HyperMatrix& o);
  HyperMatrix& operator-=(const HyperMatrix& o);
  HyperMatrix& operator*=(double s);
  friend HyperMatrix operator+(HyperMatrix a, const HyperMatrix& b) { return a += b; }
  friend HyperMatrix operator-(HyperMatrix a, const HyperMatrix& b) { return a -= b; }
  friend HyperMatrix operator*(HyperMatrix a, double s) { return a *= s; }
  friend HyperMatrix operator*(const HyperMatrix& a, const HyperMatrix& b);

  /// Column vector scaled on the right by a scalar: x -> x s.
  HyperMatrix right_scaled(const Hypercomplex& s) const;

  HyperMatrix column(std::size_t j) const;
  void set_column(std::size_t j, const HyperMatrix& v);

  /// Conjugate transpose.
  HyperMatrix adjoint() const;

  /// Sum of squared coordinates of all entries.
  double frobenius_norm_sq() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Hypercomplex> data_;
};

/// (ab + ba) / 2.
HyperMatrix jordan_matrix_product(const HyperMatrix& a, const HyperMatrix& b);

/// x^dagger y, conjugate-linear in x, right-linear in y.
Hypercomplex hermitian_inner(const HyperMatrix& x, const HyperMatrix& y);

}  // namespace jordan
