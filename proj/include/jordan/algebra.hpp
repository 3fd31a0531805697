#pragma once

// Euclidean Jordan algebras realized as R^N with a precomputed structure
// tensor against a fixed basis that is orthogonal for the trace form.
//
//   spin(n):  basis 1, f1..fn;   (s, x) o (t, y) = (st + <x, y>, sy + tx)
//   H(n, K):  basis E_ii (i < n), then X_ij^u = u E_ij + conj(u) E_ji for
//             i < j in lexicographic order and u over the units of K;
//             a o b = (ab + ba) / 2
//   sum(...): block concatenation of the summand bases.
//
// The trace is normalized so that every atom has trace 1; hence
// trace(unit) = rank. For spin(n), trace(s, x) = 2s.

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "jordan/descriptor.hpp"
#include "jordan/hyper_matrix.hpp"
#include "jordan/linalg.hpp"
#include "jordan/random.hpp"

namespace jordan {

namespace tol {
/// Idempotency: ||p o p - p|| in the trace norm.
inline constexpr double kIdempotent = 1e-9;
/// Singular-value cutoff for rank decisions on y -> {p, y, p}.
inline constexpr double kRankCutoff = 1e-8;
}  // namespace tol

/// e_i o e_j contains c e_k.
struct StructureEntry {
  int i;
  int j;
  int k;
  double c;
};

/// Position of a basis vector inside an H(n, K) model. Diagonal units have
/// row == col and unit == 0.
struct MatrixBasisRole {
  int row;
  int col;
  int unit;
};

class JordanAlgebra;
using AlgebraHandle = std::shared_ptr<const JordanAlgebra>;

struct SummandBlock {
  std::size_t offset;
  AlgebraHandle algebra;
};

class JordanAlgebra {
 public:
  /// Throws UnsupportedStructure for invalid descriptors.
  static AlgebraHandle build(const AlgebraDescriptor& descriptor);

  const AlgebraDescriptor& descriptor() const { return desc_; }
  int dimension() const { return static_cast<int>(unit_.size()); }
  int rank() const { return desc_.rank(); }
  bool is_simple() const { return desc_.is_simple(); }

  const std::vector<std::string>& labels() const { return labels_; }
  std::span<const StructureEntry> structure() const { return entries_; }

  Vec product(const Vec& a, const Vec& b) const;
  /// Matrix of y -> a o y.
  Mat left_multiplication(const Vec& a) const;
  /// Matrix of y -> {x, y, x} = 2 x o (x o y) - x^2 o y.
  Mat quadratic_representation(const Vec& x) const;

  double trace(const Vec& a) const { return trace_.dot(a); }
  /// trace(a o b); diagonal in the basis.
  double inner(const Vec& a, const Vec& b) const { return a.dot(weights_.cwiseProduct(b)); }
  double norm(const Vec& a) const;

  const Vec& unit() const { return unit_; }
  const Vec& trace_functional() const { return trace_; }
  /// trace(e_k o e_k) for each basis vector.
  const Vec& weights() const { return weights_; }

  Vec basis_vector(int k) const;

  /// Summands of a direct sum; empty for a simple algebra.
  const std::vector<SummandBlock>& blocks() const { return blocks_; }
  /// Index of the summand containing basis vector k (0 for simple algebras).
  std::size_t block_of(int k) const;

  /// Non-empty for H(n, K) only.
  const std::vector<MatrixBasisRole>& matrix_roles() const { return roles_; }

  /// Gaussian element, isotropic in the trace inner product.
  Vec random_vector(Rng& rng) const;

 private:
  JordanAlgebra() = default;
  void finalize();

  AlgebraDescriptor desc_;
  std::vector<std::string> labels_;
  std::vector<StructureEntry> entries_;
  Vec unit_;
  Vec trace_;
  Vec weights_;
  std::vector<SummandBlock> blocks_;
  std::vector<MatrixBasisRole> roles_;
};

/// Real coefficient vector of an element against its algebra's basis.
class JordanElement {
 public:
  JordanElement(AlgebraHandle algebra, Vec coeffs);

  static JordanElement zero(const AlgebraHandle& algebra);
  static JordanElement unit(const AlgebraHandle& algebra);
  static JordanElement basis(const AlgebraHandle& algebra, int k);

  const AlgebraHandle& algebra() const { return alg_; }
  const Vec& coeffs() const { return c_; }

  JordanElement& operator+=(const JordanElement& o);
  JordanElement& operator-=(const JordanElement& o);
  JordanElement& operator*=(double s);
  friend JordanElement operator+(JordanElement a, const JordanElement& b) { return a += b; }
  friend JordanElement operator-(JordanElement a, const JordanElement& b) { return a -= b; }
  friend JordanElement operator*(JordanElement a, double s) { return a *= s; }
  friend JordanElement operator*(double s, JordanElement a) { return a *= s; }
  friend JordanElement operator/(JordanElement a, double s) { return a *= 1.0 / s; }

 private:
  AlgebraHandle alg_;
  Vec c_;
};

/// Throws AlgebraMismatch unless both elements share one algebra.
void require_same_algebra(const JordanElement& a, const JordanElement& b);

JordanElement jordan_product(const JordanElement& a, const JordanElement& b);
JordanElement square(const JordanElement& a);
/// {x, y, x} = 2 x o (x o y) - x^2 o y.
JordanElement triple_product(const JordanElement& x, const JordanElement& y);
double trace(const JordanElement& a);
double inner(const JordanElement& a, const JordanElement& b);
double norm(const JordanElement& a);
/// ||a - b|| in the trace norm.
double distance(const JordanElement& a, const JordanElement& b);

bool is_idempotent(const JordanElement& a, double tolerance = tol::kIdempotent);
/// Idempotent, and y -> {p, y, p} has rank exactly one.
bool is_atom(const JordanElement& a, double tolerance = tol::kIdempotent);

/// An idempotent, checked on construction.
class Idempotent {
 public:
  /// Throws PreconditionError if a is not idempotent.
  explicit Idempotent(JordanElement a);
  const JordanElement& element() const { return e_; }
  operator const JordanElement&() const { return e_; }

 private:
  JordanElement e_;
};

/// A minimal non-zero idempotent, checked on construction.
class Atom {
 public:
  /// Throws PreconditionError if a is not an atom.
  explicit Atom(JordanElement a);
  static std::optional<Atom> try_make(JordanElement a);

  const JordanElement& element() const { return e_; }
  operator const JordanElement&() const { return e_; }
  Idempotent as_idempotent() const { return Idempotent(e_); }

 private:
  struct Unchecked {};
  Atom(JordanElement a, Unchecked) : e_(std::move(a)) {}
  JordanElement e_;
};

/// The derivation [L_a, L_b] as a matrix on coefficient vectors.
Mat inner_derivation(const JordanAlgebra& algebra, const Vec& a, const Vec& b);

/// Random atom. For a direct sum the atom lies in a uniformly chosen summand.
Atom random_atom(const AlgebraHandle& algebra, Rng& rng);
Atom random_atom(const AlgebraHandle& algebra, std::uint64_t seed);

/// Embeds a summand's coefficient vector into the full algebra.
Vec embed_block(const JordanAlgebra& algebra, std::size_t block, const Vec& local);

// Matrix model of H(n, K); both throw PreconditionError for other kinds.
HyperMatrix to_hyper_matrix(const JordanAlgebra& algebra, const Vec& coeffs);
/// Coefficients of the Hermitian part of m.
Vec from_hyper_matrix(const JordanAlgebra& algebra, const HyperMatrix& m);

}  // namespace jordan
