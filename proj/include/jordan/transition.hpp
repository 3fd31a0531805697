#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jordan/algebra.hpp"

namespace jordan {

/// Value of P(q|p), in [0, 1].
class TransitionValue {
 public:
  /// Clamps round-off excursions of at most 1e-9 outside [0, 1]; throws
  /// PreconditionError beyond that.
  explicit TransitionValue(double v);
  double value() const { return v_; }
  operator double() const { return v_; }

 private:
  double v_;
};

/// Normalized metric value in [0, 1].
class MetricValue {
 public:
  explicit MetricValue(double v);
  double value() const { return v_; }
  operator double() const { return v_; }

 private:
  double v_;
};

/// P(q|p) = trace(p o q) for an atom p and an idempotent q.
TransitionValue transition_probability(const Atom& p, const Idempotent& q);

/// s with {p, q, p} = s p when it exists: least-squares coefficient of
/// {p, q, p} on p, accepted when the residual is at most 1e-8 ||p||.
std::optional<TransitionValue> transition_exists(const Idempotent& p, const Idempotent& q);

/// 1 - trace(p o q), computed as ||p - q||^2 / 2 so that it keeps full
/// relative accuracy for nearby atoms.
double separation(const Atom& p, const Atom& q);

/// (2 / pi) arccos(sqrt(trace(p o q))), evaluated as an arctangent of square
/// roots that stay accurate for nearly equal and nearly orthogonal atoms.
MetricValue geodesic_distance(const Atom& p, const Atom& q);

/// Pairs with separation at most this are treated as equal by midpoint().
inline constexpr double kEqualSeparation = 1e-20;

/// Element v of the joint Peirce-1/2 space of orthogonal atoms p, q with
/// v o v = p + q. Throws PreconditionError if p, q are not orthogonal and
/// NoSymmetryError if no such v is found (p, q in different summands).
JordanElement find_symmetry(const Atom& p, const Atom& q, Rng& rng);

/// Atom e with d(p, e) = d(e, q) = d(p, q) / 2, where c = trace(p o q).
///   p = q:      e = p
///   c >= 1/2:   e = (p + q + 2 c^{-1/2} p o q) / (2 + 2 sqrt(c))
///   c < 1/2:    half-angle atom in the Peirce frame (p, p', v) of the pair,
///               which for c = 0 is (v + p + q) / 2 with v from find_symmetry
/// Throws NoMidpointError for orthogonal atoms in different summands.
Atom midpoint(const Atom& p, const Atom& q, Rng& rng);

struct ConvexityRecord {
  std::uint64_t trial;
  double transition;     // trace(p o q)
  double d_pq;
  double d_pe;
  double d_eq;
  double between_defect;  // |d(p,e) + d(e,q) - d(p,q)|
  double halving_defect;  // max |d(p,e) - d/2|, |d(e,q) - d/2|
  double atom_residual;   // ||e o e - e||
};

struct ConvexityReport {
  std::vector<ConvexityRecord> records;
  double max_between_defect = 0.0;
  double max_halving_defect = 0.0;
  double max_atom_residual = 0.0;
};

/// How an atom pair is drawn in a convexity campaign.
enum class PairKind { Random, Orthogonal, NearEqual };

/// Draws a pair of atoms; orthogonal pairs come from a greedy chain and
/// near-equal pairs from a small automorphic perturbation.
std::pair<Atom, Atom> sample_atom_pair(const AlgebraHandle& algebra, PairKind kind, Rng& rng);

ConvexityRecord check_midpoint(const Atom& p, const Atom& q, Rng& rng, std::uint64_t trial = 0);

/// Samples pairs per kind with seeds derived from (seed, trial index), and
/// checks the between-point equation through midpoint(). Requires a simple
/// algebra (PreconditionError otherwise).
ConvexityReport convexity_check(const AlgebraHandle& algebra, int trials, std::uint64_t seed,
                                PairKind kind = PairKind::Random);

}  // namespace jordan
