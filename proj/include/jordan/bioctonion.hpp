#pragma once

#include <complex>

#include "jordan/hypercomplex.hpp"

namespace jordan {

/// Element re (x) 1 + im (x) i of C (x) O. The complex unit i commutes with
/// every octonion unit, so the algebra is the complexification of O. It is
/// alternative but has zero divisors.
struct Bioctonion {
  Hypercomplex re{Field::Octonion};
  Hypercomplex im{Field::Octonion};

  static Bioctonion from_octonion(const Hypercomplex& o);
  static Bioctonion from_complex(std::complex<double> z);
  static Bioctonion one() { return from_complex(1.0); }

  Bioctonion& operator+=(const Bioctonion& o);
  Bioctonion& operator-=(const Bioctonion& o);
  Bioctonion& operator*=(double s);

  friend Bioctonion operator+(Bioctonion a, const Bioctonion& b) { return a += b; }
  friend Bioctonion operator-(Bioctonion a, const Bioctonion& b) { return a -= b; }
  friend Bioctonion operator-(Bioctonion a) { return a *= -1.0; }
  friend Bioctonion operator*(Bioctonion a, double s) { return a *= s; }
  friend Bioctonion operator*(double s, Bioctonion a) { return a *= s; }
  friend Bioctonion operator*(const Bioctonion& a, const Bioctonion& b);

  bool operator==(const Bioctonion& o) const = default;
};

/// (a + b i)(c + d i) = (ac - bd) + (ad + bc) i with octonion juxtaposition.
Bioctonion bioct_multiply(const Bioctonion& x, const Bioctonion& y);

/// Complex scalar action (c0 + c1 i) x.
Bioctonion scale(std::complex<double> c, const Bioctonion& x);

/// Octonion conjugation applied to both components (C-linear).
Bioctonion octonion_conjugate(const Bioctonion& x);
/// Negates the imaginary tensor component.
Bioctonion complex_conjugate(const Bioctonion& x);
/// Composition of both conjugations; the scalar part of the matrix star.
Bioctonion bioct_star(const Bioctonion& x);

/// Scalar (e0) part of both components as a complex number.
std::complex<double> complex_part(const Bioctonion& x);

/// Euclidean norm form |re|^2 + |im|^2 on the 16 real coordinates.
double euclidean_norm_form(const Bioctonion& x);

/// C-valued quadratic form x conj_O(x) = (|re|^2 - |im|^2) + 2<re, im> i.
std::complex<double> complex_norm_form(const Bioctonion& x);

}  // namespace jordan
