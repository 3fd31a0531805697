#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "jordan/automorphism.hpp"
#include "jordan/transition.hpp"

namespace jordan {

/// Two atom pairs (p1, q1), (p2, q2) with equal transition values.
struct WitnessProblem {
  Atom p1;
  Atom q1;
  Atom p2;
  Atom q2;
  double tolerance = 1e-9;
};

/// max(||T p1 - p2||, ||T q1 - q2||).
double witness_residual(const Automorphism& t, const WitnessProblem& problem);

inline constexpr double kWitnessTolerance = 1e-8;

struct SearchOptions {
  int restarts = 12;
  int iterations = 40;
  double target = 1e-11;
  /// Start from the identity before anything else.
  bool include_identity = true;
  /// Extra starting points (e.g. summand swaps) tried before random restarts.
  std::vector<Automorphism> starts;
};

struct SearchOutcome {
  std::optional<Automorphism> witness;
  double best_residual = 0.0;
  int restarts_used = 0;
};

/// Damped Gauss-Newton over products of derivation exponentials minimizing
/// sum_k ||T x_k - y_k||^2; each accepted step multiplies T by exp(D) with D
/// in the inner derivation algebra. Best effort: returns the best residual
/// and a witness only when every pair maps within kWitnessTolerance.
SearchOutcome orbit_search(const AlgebraHandle& algebra, const std::vector<std::pair<Vec, Vec>>& pairs, Rng& rng,
                           const SearchOptions& options = {});

/// Automorphism T with T p1 = p2 and T q1 = q2.
///   spin(n):          rotation aligning orthonormal frames built from the pairs
///   H(n, R/C/H):      u1 carries phi1 to phi2, then u2 fixes phi2 and carries
///                     u1 psi1 to psi2; T a = (u2 u1) a (u2 u1)*
///   H(3, O) and sums: orbit_search (best effort; SearchExhausted on failure)
/// Throws IllPosedError when the transition values differ beyond the
/// problem tolerance.
Automorphism homogeneity_witness(const WitnessProblem& problem, std::uint64_t seed = 0);

/// As homogeneity_witness for two orthogonal pairs. Throws PreconditionError
/// when a pair is not orthogonal.
Automorphism bit_symmetry_witness(const Atom& p1, const Atom& q1, const Atom& p2, const Atom& q2,
                                  std::uint64_t seed = 0);

/// (p2, q2) = (T0 p1, T0 q1) for a random T0; orthogonal pairs when requested.
WitnessProblem plant_problem(const AlgebraHandle& algebra, Rng& rng, bool orthogonal = false);

struct ReducibleDemoReport {
  AlgebraDescriptor algebra;
  double transition_q1 = 0.0;  // P(q1 | p)
  double transition_q2 = 0.0;  // P(q2 | p)
  int samples = 0;
  int certified = 0;
  int fixing_p = 0;
  int block_preserved = 0;
  int witnesses_found = 0;
  double max_leak = 0.0;  // largest A2-component of T q1 over automorphisms fixing p
  int searches = 0;           // bounded orbit searches from random starts
  int search_witnesses = 0;   // searches that returned a witness
  bool search_found_witness = false;
  double search_best_residual = 0.0;
  bool demonstrated = false;
};

/// In A = A1 + A2 takes orthogonal atoms p, q1 in A1 and an atom q2 in A2, then
/// samples automorphisms (stabilizers of p, general flows, summand swaps) and
/// checks that none fixing p carries q1 outside A1; then runs `samples`
/// bounded orbit searches for a bit-symmetry witness (p, q1) -> (p, q2), each
/// from one random start. Throws PreconditionError unless
/// A1 is simple and not R.
ReducibleDemoReport reducible_nonhomogeneity_demo(const AlgebraDescriptor& a1, const AlgebraDescriptor& a2,
                                                  std::uint64_t seed, int samples = 10000);

}  // namespace jordan
