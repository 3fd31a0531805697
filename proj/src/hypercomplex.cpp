#include "jordan/hypercomplex.hpp"

#include <cmath>
#include <sstream>

#include "jordan/errors.hpp"

namespace jordan {

namespace {

using Coords = std::array<double, Hypercomplex::kMaxDim>;

void conj_into(const double* x, std::size_t n, double* out) {
  out[0] = x[0];
  for (std::size_t k = 1; k < n; ++k) out[k] = -x[k];
}

// (a, b)(c, d) = (ac - conj(d) b, d a + b conj(c)) on blocks of length n / 2.
void recursive_product(const double* x, const double* y, std::size_t n, double* out) {
  if (n == 1) {
    out[0] = x[0] * y[0];
    return;
  }
  const std::size_t h = n / 2;
  const double* a = x;
  const double* b = x + h;
  const double* c = y;
  const double* d = y + h;

  Coords conj_c{}, conj_d{}, t1{}, t2{};
  conj_into(c, h, conj_c.data());
  conj_into(d, h, conj_d.data());

  recursive_product(a, c, h, t1.data());
  recursive_product(conj_d.data(), b, h, t2.data());
  for (std::size_t k = 0; k < h; ++k) out[k] = t1[k] - t2[k];

  recursive_product(d, a, h, t1.data());
  recursive_product(b, conj_c.data(), h, t2.data());
  for (std::size_t k = 0; k < h; ++k) out[h + k] = t1[k] + t2[k];
}

std::array<std::array<UnitProduct, 8>, 8> build_unit_table() {
  std::array<std::array<UnitProduct, 8>, 8> table{};
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      Coords ei{}, ej{}, out{};
      ei[i] = 1.0;
      ej[j] = 1.0;
      recursive_product(ei.data(), ej.data(), 8, out.data());
      for (std::size_t k = 0; k < 8; ++k) {
        if (out[k] != 0.0) table[i][j] = UnitProduct{out[k] > 0 ? 1 : -1, k};
      }
    }
  }
  return table;
}

void require_same_level(const Hypercomplex& x, const Hypercomplex& y) {
  if (x.field() != y.field()) {
    throw DimensionError("hypercomplex operands at different Cayley-Dickson levels");
  }
}

}  // namespace

char field_tag(Field f) {
  switch (f) {
    case Field::Real: return 'R';
    case Field::Complex: return 'C';
    case Field::Quaternion: return 'H';
    case Field::Octonion: return 'O';
  }
  return '?';
}

Field field_from_tag(char tag) {
  switch (tag) {
    case 'R': return Field::Real;
    case 'C': return Field::Complex;
    case 'H': return Field::Quaternion;
    case 'O': return Field::Octonion;
    default: throw ParseError(std::string("unknown division algebra tag '") + tag + "'");
  }
}

Hypercomplex::Hypercomplex(Field f, std::span<const double> coords) : field_(f) {
  if (coords.size() != dim()) throw DimensionError("coordinate count does not match level");
  for (std::size_t k = 0; k < coords.size(); ++k) c_[k] = coords[k];
}

Hypercomplex Hypercomplex::real(Field f, double value) {
  Hypercomplex x(f);
  x.c_[0] = value;
  return x;
}

Hypercomplex Hypercomplex::unit(Field f, std::size_t k) {
  Hypercomplex x(f);
  if (k >= x.dim()) throw DimensionError("unit index exceeds level dimension");
  x.c_[k] = 1.0;
  return x;
}

Hypercomplex& Hypercomplex::operator+=(const Hypercomplex& o) {
  require_same_level(*this, o);
  for (std::size_t k = 0; k < dim(); ++k) c_[k] += o.c_[k];
  return *this;
}

Hypercomplex& Hypercomplex::operator-=(const Hypercomplex& o) {
  require_same_level(*this, o);
  for (std::size_t k = 0; k < dim(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Hypercomplex& Hypercomplex::operator*=(double s) {
  for (std::size_t k = 0; k < dim(); ++k) c_[k] *= s;
  return *this;
}

bool Hypercomplex::operator==(const Hypercomplex& o) const {
  if (field_ != o.field_) return false;
  for (std::size_t k = 0; k < dim(); ++k) {
    if (c_[k] != o.c_[k]) return false;
  }
  return true;
}

const std::array<std::array<UnitProduct, 8>, 8>& unit_table() {
  static const auto table = build_unit_table();
  return table;
}

// Table-driven product; the table is the recursion evaluated on basis units.
Hypercomplex operator*(const Hypercomplex& a, const Hypercomplex& b) {
  require_same_level(a, b);
  const auto& table = unit_table();
  const std::size_t n = a.dim();
  Hypercomplex out(a.field());
  for (std::size_t i = 0; i < n; ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      const UnitProduct& u = table[i][j];
      out[u.index] += u.sign * ai * b[j];
    }
  }
  return out;
}

Hypercomplex cd_multiply(const Hypercomplex& x, const Hypercomplex& y) {
  require_same_level(x, y);
  Coords out{};
  Coords xs{}, ys{};
  for (std::size_t k = 0; k < x.dim(); ++k) {
    xs[k] = x[k];
    ys[k] = y[k];
  }
  recursive_product(xs.data(), ys.data(), x.dim(), out.data());
  return Hypercomplex(x.field(), std::span<const double>(out.data(), x.dim()));
}

Hypercomplex conjugate(const Hypercomplex& x) {
  Hypercomplex out = x;
  for (std::size_t k = 1; k < x.dim(); ++k) out[k] = -x[k];
  return out;
}

double norm_form(const Hypercomplex& x) {
  double s = 0.0;
  for (double v : x.coords()) s += v * v;
  return s;
}

double abs(const Hypercomplex& x) { return std::sqrt(norm_form(x)); }

double real_inner(const Hypercomplex& x, const Hypercomplex& y) {
  require_same_level(x, y);
  double s = 0.0;
  for (std::size_t k = 0; k < x.dim(); ++k) s += x[k] * y[k];
  return s;
}

Hypercomplex associator(const Hypercomplex& x, const Hypercomplex& y, const Hypercomplex& z) {
  return (x * y) * z - x * (y * z);
}

std::string to_string(const Hypercomplex& x) {
  std::ostringstream os;
  os << field_tag(x.field()) << '(';
  for (std::size_t k = 0; k < x.dim(); ++k) {
    if (k) os << ", ";
    os << x[k];
  }
  os << ')';
  return os.str();
}

}  // namespace jordan
