#pragma once

// The projective plane over the bioctonions C (x) O, modelled inside the
// 3x3 matrices Hermitian for octonion conjugation (complex diagonal).
//
//   <x|y>  = Re trace(x o y* + y o x*) / 2, x* = entrywise complex conjugate
//            (the full star transposed, which is what remains on these
//            matrices); it equals the Euclidean pairing of the entries.
//   x x x  = x^2 - x tr(x) - (tr(x^2) - tr(x)^2) / 2 I, tr = Re trace.
//   points: <p|p> = 1 and p x p = 0, up to the sign of p.

#include <array>
#include <complex>
#include <cstdint>
#include <optional>

#include "jordan/algebra.hpp"
#include "jordan/bioctonion.hpp"
#include "jordan/transition.hpp"

namespace jordan {

class BioctMatrix {
 public:
  BioctMatrix() = default;
  static BioctMatrix identity();
  /// E_ii.
  static BioctMatrix unit(int i);

  const Bioctonion& operator()(int i, int j) const { return e_[static_cast<std::size_t>(3 * i + j)]; }
  Bioctonion& operator()(int i, int j) { return e_[static_cast<std::size_t>(3 * i + j)]; }

  BioctMatrix& operator+=(const BioctMatrix& o);
  BioctMatrix& operator-=(const BioctMatrix& o);
  BioctMatrix& operator*=(double s);
  friend BioctMatrix operator+(BioctMatrix a, const BioctMatrix& b) { return a += b; }
  friend BioctMatrix operator-(BioctMatrix a, const BioctMatrix& b) { return a -= b; }
  friend BioctMatrix operator-(BioctMatrix a) { return a *= -1.0; }
  friend BioctMatrix operator*(BioctMatrix a, double s) { return a *= s; }
  friend BioctMatrix operator*(double s, BioctMatrix a) { return a *= s; }

 private:
  std::array<Bioctonion, 9> e_{};
};

/// Complex scalar multiple c x.
BioctMatrix scale(std::complex<double> c, const BioctMatrix& x);
/// Plain matrix product with bioctonion entries.
BioctMatrix matrix_product(const BioctMatrix& a, const BioctMatrix& b);
/// Entrywise complex conjugation.
BioctMatrix complex_conjugate(const BioctMatrix& x);

/// Size of x_ji - conj_O(x_ij) plus octonion-imaginary parts on the diagonal.
double hermiticity_residual(const BioctMatrix& x);
inline constexpr double kHermitianTolerance = 1e-10;
/// Throws PreconditionError when hermiticity_residual(x) > kHermitianTolerance.
void require_hermitian(const BioctMatrix& x);

/// (xy + yx) / 2.
BioctMatrix bioct_jordan_product(const BioctMatrix& x, const BioctMatrix& y);
std::complex<double> complex_trace(const BioctMatrix& x);

/// Literal Re trace(x o y* + y o x*) / 2. Throws PreconditionError when an
/// input is not Hermitian or the imaginary part of the trace fails to vanish.
double bioct_inner(const BioctMatrix& x, const BioctMatrix& y);
/// Sum of entrywise Euclidean pairings; equals bioct_inner on Hermitian input.
double entry_pairing(const BioctMatrix& x, const BioctMatrix& y);
/// sqrt(<x|x>) via entry_pairing.
double bioct_norm(const BioctMatrix& x);

BioctMatrix freudenthal_square(const BioctMatrix& x);

inline constexpr double kPointTolerance = 1e-9;
/// |<p|p> - 1| and ||p x p|| both within tolerance.
bool is_point(const BioctMatrix& p, double tolerance = kPointTolerance);

/// 27 complex coordinates: the three diagonal entries, then the entries
/// (0,1), (0,2), (1,2) as eight octonion coordinates each, paired (re, im).
std::array<std::complex<double>, 27> plane_coordinates(const BioctMatrix& x);

/// A point of the plane: the representative with the first coordinate of
/// modulus above 1e-12 having positive real part, or positive imaginary
/// part when its real part vanishes.
class PlanePoint {
 public:
  /// Throws PreconditionError unless p is Hermitian and is_point(p).
  static PlanePoint certify(const BioctMatrix& p);
  const BioctMatrix& representative() const { return p_; }
  /// p1 = p2 or p1 = -p2 within kPointTolerance.
  bool operator==(const PlanePoint& o) const;

 private:
  explicit PlanePoint(BioctMatrix p) : p_(std::move(p)) {}
  BioctMatrix p_;
};

/// zero, point(p), line(p) = p-perp, unit.
class LogicElement {
 public:
  enum class Kind { Zero, Point, Line, Unit };
  static LogicElement zero() { return LogicElement(Kind::Zero, std::nullopt); }
  static LogicElement unit() { return LogicElement(Kind::Unit, std::nullopt); }
  static LogicElement point(const PlanePoint& p) { return LogicElement(Kind::Point, p); }
  static LogicElement line(const PlanePoint& p) { return LogicElement(Kind::Line, p); }

  Kind kind() const { return kind_; }
  /// The tagging point of a point or a line.
  const PlanePoint& anchor() const;
  LogicElement orthocomplement() const;
  bool operator==(const LogicElement& o) const;

 private:
  LogicElement(Kind k, std::optional<PlanePoint> p) : kind_(k), p_(std::move(p)) {}
  Kind kind_;
  std::optional<PlanePoint> p_;
};

LogicElement line_of(const PlanePoint& p);
/// |<p|q>| <= 1e-9.
bool on_line(const PlanePoint& q, const LogicElement& line);

struct PlaneState {
  PlanePoint anchor;
};
/// mu(0) = 0, mu(1) = 1, mu(q) = |<p|q>|, mu(q-perp) = 1 - |<p|q>|.
double state_eval(const PlaneState& state, const LogicElement& v);

/// |<q|p>|.
TransitionValue plane_transition(const PlanePoint& p, const PlanePoint& q);
/// arccos(sqrt(|<p|q>|)) in [0, pi/2], evaluated as an arctangent.
double plane_metric(const PlanePoint& p, const PlanePoint& q);

/// Sampler coordinates: v in (C (x) O)^3 whose entry at complex_slot is a
/// complex number, flattened to 16 + 16 + 2 reals in slot order.
struct PointParameters {
  int complex_slot = 2;
  std::array<double, 34> theta{};
};

/// p = v v^dagger with v rotated by a complex phase so that trace(p) is real
/// and non-negative, normalized to <p|p> = 1. Not certified.
BioctMatrix point_from_parameters(const PointParameters& params);
/// Inverse of point_from_parameters up to phase and scale, read off one
/// column of p; nullopt when no column reproduces p to 1e-9.
std::optional<PointParameters> parameters_of(const BioctMatrix& p);

struct PointSampling {
  /// Real octonion entries only: lands in the embedded H3(O) plane.
  bool real_octonion = false;
};
/// Throws SearchExhausted when 16 draws all fail certification.
PlanePoint random_point(Rng& rng, PointSampling sampling = {});
PlanePoint random_point(std::uint64_t seed, PointSampling sampling = {});

/// How the complex unit of H3(C) enters C (x) O.
enum class ComplexEmbedding {
  OctonionUnit,  // i -> e1 in the octonion factor
  TensorUnit,    // i -> 1 (x) i; breaks octonion-Hermiticity off the diagonal
};
/// Entrywise inclusion of an element of H3(R/C/H/O). Throws
/// PreconditionError for other algebras.
BioctMatrix embed_matrix(const JordanAlgebra& algebra, const Vec& coeffs,
                         ComplexEmbedding complex_embedding = ComplexEmbedding::OctonionUnit);
/// Image of an H3(K) atom as a plane point.
PlanePoint subplane_embedding(const Atom& atom);
/// Coordinates in H3(O) of a matrix with real octonion entries; throws
/// PreconditionError when an imaginary tensor component is present.
Vec restrict_to_octonions(const JordanAlgebra& h3o, const BioctMatrix& x);

struct PlaneMidpointResult {
  PlanePoint point;
  double defect;          // max |d(p,e) - d(p,q)/2|, |d(e,q) - d(p,q)/2|
  double between_defect;  // |d(p,e) + d(e,q) - d(p,q)|
  long evaluations;
};
inline constexpr long kMidpointBudget = 50000;
/// Multi-start descent with central-difference gradients over
/// PointParameters, minimizing the squared halving defects. An optional seed
/// point is tried first. Best effort: returns the best certified candidate.
PlaneMidpointResult plane_midpoint_search(const PlanePoint& p, const PlanePoint& q, Rng& rng,
                                          long budget = kMidpointBudget,
                                          const std::optional<PlanePoint>& seed = std::nullopt);

struct FormalRealityWitness {
  bool found = false;
  BioctMatrix x;
  double trace_square = 0.0;  // Re trace(x o x)
  double norm = 0.0;          // sqrt(<x|x>)
  int tried = 0;
};
/// Bounded search for Hermitian x != 0 with Re trace(x o x) <= 0 along
/// complex-imaginary diagonal directions and off-diagonal zero divisors.
FormalRealityWitness formal_reality_counterexample(Rng& rng, int budget = 1000);

}  // namespace jordan
