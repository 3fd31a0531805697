#include "jordan/hyper_matrix.hpp"

#include "jordan/errors.hpp"

namespace jordan {

HyperMatrix::HyperMatrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Hypercomplex(f)) {}

HyperMatrix HyperMatrix::identity(Field f, std::size_t n) {
  HyperMatrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Hypercomplex::real(f, 1.0);
  return m;
}

HyperMatrix& HyperMatrix::operator+=(const HyperMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

HyperMatrix& HyperMatrix::operator-=(const HyperMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

HyperMatrix& HyperMatrix::operator*=(double s) {
  for (auto& x : data_) x *= s;
  return *this;
}

HyperMatrix operator*(const HyperMatrix& a, const HyperMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  if (a.field() != b.field()) throw DimensionError("matrix product level mismatch");
  HyperMatrix out(a.field(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Hypercomplex s(a.field());
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  }
  return out;
}

HyperMatrix HyperMatrix::right_scaled(const Hypercomplex& s) const {
  HyperMatrix out = *this;
  for (auto& x : out.data_) x = x * s;
  return out;
}

HyperMatrix HyperMatrix::column(std::size_t j) const {
  HyperMatrix v(field_, rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) v(i, 0) = (*this)(i, j);
  return v;
}

void HyperMatrix::set_column(std::size_t j, const HyperMatrix& v) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v(i, 0);
}

HyperMatrix HyperMatrix::adjoint() const {
  HyperMatrix out(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = conjugate((*this)(i, j));
  }
  return out;
}

double HyperMatrix::frobenius_norm_sq() const {
  double s = 0.0;
  for (const auto& x : data_) s += norm_form(x);
  return s;
}

HyperMatrix jordan_matrix_product(const HyperMatrix& a, const HyperMatrix& b) {
  return (a * b + b * a) * 0.5;
}

Hypercomplex hermitian_inner(const HyperMatrix& x, const HyperMatrix& y) {
  if (x.cols() != 1 || y.cols() != 1 || x.rows() != y.rows()) {
    throw DimensionError("hermitian_inner expects column vectors of equal length");
  }
  Hypercomplex s(x.field());
  for (std::size_t i = 0; i < x.rows(); ++i) s += conjugate(x(i, 0)) * y(i, 0);
  return s;
}

}  // namespace jordan
