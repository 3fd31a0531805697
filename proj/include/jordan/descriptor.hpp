#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jordan/hypercomplex.hpp"

namespace jordan {

/// Names a finite-dimensional Euclidean Jordan algebra: a spin factor
/// spin(n) = R + R^n, a Hermitian matrix algebra H(n, K), or a direct sum.
struct AlgebraDescriptor {
  enum class Kind { Spin, Matrix, Sum };

  Kind kind = Kind::Spin;
  int n = 0;
  Field field = Field::Real;
  std::vector<AlgebraDescriptor> summands;

  static AlgebraDescriptor spin(int n);
  static AlgebraDescriptor matrix(int n, Field field);
  static AlgebraDescriptor sum(std::vector<AlgebraDescriptor> parts);

  int dimension() const;
  int rank() const;
  /// Spin factors with n >= 2 and all H(n, K); sums are never simple.
  bool is_simple() const;
  /// The one-dimensional algebra R (H(1, K) or a degenerate spin(0)).
  bool is_real_line() const;

  /// Canonical form accepted by parse_descriptor, e.g. "sum(spin(3),H(3,O))".
  std::string to_string() const;

  bool operator==(const AlgebraDescriptor&) const = default;
};

/// Parses "spin(n)", "H(n,R|C|H|O)" and "sum(d1,d2,...)"; whitespace is ignored.
/// Throws ParseError on malformed text and UnsupportedStructure for H(n>3, O).
AlgebraDescriptor parse_descriptor(std::string_view text);

/// Throws UnsupportedStructure when the descriptor is not a Euclidean Jordan algebra.
void validate(const AlgebraDescriptor& d);

}  // namespace jordan
