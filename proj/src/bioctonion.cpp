#include "jordan/bioctonion.hpp"

namespace jordan {

Bioctonion Bioctonion::from_octonion(const Hypercomplex& o) {
  Bioctonion b;
  for (std::size_t k = 0; k < o.dim(); ++k) b.re[k] = o[k];
  return b;
}

Bioctonion Bioctonion::from_complex(std::complex<double> z) {
  Bioctonion b;
  b.re[0] = z.real();
  b.im[0] = z.imag();
  return b;
}

Bioctonion& Bioctonion::operator+=(const Bioctonion& o) {
  re += o.re;
  im += o.im;
  return *this;
}

Bioctonion& Bioctonion::operator-=(const Bioctonion& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

Bioctonion& Bioctonion::operator*=(double s) {
  re *= s;
  im *= s;
  return *this;
}

Bioctonion bioct_multiply(const Bioctonion& x, const Bioctonion& y) {
  Bioctonion out;
  out.re = x.re * y.re - x.im * y.im;
  out.im = x.re * y.im + x.im * y.re;
  return out;
}

Bioctonion operator*(const Bioctonion& a, const Bioctonion& b) { return bioct_multiply(a, b); }

Bioctonion scale(std::complex<double> c, const Bioctonion& x) {
  Bioctonion out;
  out.re = x.re * c.real() - x.im * c.imag();
  out.im = x.im * c.real() + x.re * c.imag();
  return out;
}

Bioctonion octonion_conjugate(const Bioctonion& x) { return {conjugate(x.re), conjugate(x.im)}; }

Bioctonion complex_conjugate(const Bioctonion& x) { return {x.re, -x.im}; }

Bioctonion bioct_star(const Bioctonion& x) { return complex_conjugate(octonion_conjugate(x)); }

std::complex<double> complex_part(const Bioctonion& x) { return {x.re[0], x.im[0]}; }

double euclidean_norm_form(const Bioctonion& x) { return norm_form(x.re) + norm_form(x.im); }

std::complex<double> complex_norm_form(const Bioctonion& x) {
  return {norm_form(x.re) - norm_form(x.im), 2.0 * real_inner(x.re, x.im)};
}

}  // namespace jordan
