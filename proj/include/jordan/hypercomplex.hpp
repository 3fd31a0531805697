#pragma once

// Cayley-Dickson tower R -> C -> H -> O.
//
// Canonical labeling: e0 = 1 and e_k for k = 1..7, where at each doubling the
// pair (a, b) stores a in the low half and b in the high half of the
// coordinate vector. With this labeling e1 = i, e2 = j, e3 = e1 e2 = k, and
// e4 is the unit adjoined when passing from H to O. Products follow
//   (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)).

#include <array>
#include <cstddef>
#include <span>
#include <string>

namespace jordan {

/// Level in the Cayley-Dickson tower; the coordinate count is 2^level.
enum class Field : int { Real = 0, Complex = 1, Quaternion = 2, Octonion = 3 };

constexpr std::size_t field_dimension(Field f) { return std::size_t{1} << static_cast<int>(f); }

char field_tag(Field f);
Field field_from_tag(char tag);

class Hypercomplex {
 public:
  static constexpr std::size_t kMaxDim = 8;

  constexpr Hypercomplex() = default;
  explicit constexpr Hypercomplex(Field f) : field_(f) {}
  Hypercomplex(Field f, std::span<const double> coords);

  static Hypercomplex real(Field f, double value);
  /// Basis unit e_k at the given level.
  static Hypercomplex unit(Field f, std::size_t k);

  Field field() const { return field_; }
  std::size_t dim() const { return field_dimension(field_); }

  double operator[](std::size_t k) const { return c_[k]; }
  double& operator[](std::size_t k) { return c_[k]; }
  std::span<const double> coords() const { return {c_.data(), dim()}; }
  std::span<double> coords() { return {c_.data(), dim()}; }

  double real_part() const { return c_[0]; }

  Hypercomplex& operator+=(const Hypercomplex& o);
  Hypercomplex& operator-=(const Hypercomplex& o);
  Hypercomplex& operator*=(double s);

  friend Hypercomplex operator+(Hypercomplex a, const Hypercomplex& b) { return a += b; }
  friend Hypercomplex operator-(Hypercomplex a, const Hypercomplex& b) { return a -= b; }
  friend Hypercomplex operator-(Hypercomplex a) { return a *= -1.0; }
  friend Hypercomplex operator*(Hypercomplex a, double s) { return a *= s; }
  friend Hypercomplex operator*(double s, Hypercomplex a) { return a *= s; }
  /// Algebra product; see cd_multiply.
  friend Hypercomplex operator*(const Hypercomplex& a, const Hypercomplex& b);

  bool operator==(const Hypercomplex& o) const;

 private:
  Field field_ = Field::Real;
  std::array<double, kMaxDim> c_{};
};

/// Product by direct Cayley-Dickson recursion. Throws DimensionError on level mismatch.
Hypercomplex cd_multiply(const Hypercomplex& x, const Hypercomplex& y);

/// Negates every non-real coordinate.
Hypercomplex conjugate(const Hypercomplex& x);

/// Sum of squared coordinates.
double norm_form(const Hypercomplex& x);
double abs(const Hypercomplex& x);

/// Euclidean pairing Re(x conj(y)).
double real_inner(const Hypercomplex& x, const Hypercomplex& y);

/// (xy)z - x(yz).
Hypercomplex associator(const Hypercomplex& x, const Hypercomplex& y, const Hypercomplex& z);

/// e_i e_j = sign * e_index for the canonical octonion labeling.
struct UnitProduct {
  int sign;
  std::size_t index;
};
/// Octonion unit table, generated once from the recursion. Lower levels are
/// the leading square blocks of the same table.
const std::array<std::array<UnitProduct, 8>, 8>& unit_table();

std::string to_string(const Hypercomplex& x);

}  // namespace jordan
