#pragma once

#include <cstdint>
#include <vector>

#include "jordan/algebra.hpp"

namespace jordan {

/// Projections onto the eigenspaces of L_p for eigenvalues 1, 1/2, 0.
struct PeirceProjections {
  Mat one;
  Mat half;
  Mat zero;
};

/// Lagrange interpolation in L_p:
///   P1 = L(2L - I),  P1/2 = 4L(I - L),  P0 = (2L - I)(L - I).
/// Throws PreconditionError when p is not idempotent.
PeirceProjections peirce_projections(const Idempotent& p);

/// An atom e <= r, taken as a spectral idempotent of a random element of
/// the Peirce-1 subalgebra {r, A, r}. Throws SearchExhausted if no
/// certified atom appears within the attempt budget.
Atom atom_under(const Idempotent& r, Rng& rng);

/// Greedy chain of pairwise orthogonal atoms p_1, p_2, ... where p_{k+1} is
/// an atom under unit - (p_1 + ... + p_k).
std::vector<Atom> orthogonal_atom_chain(const AlgebraHandle& algebra, std::uint64_t seed);

/// Length of the greedy chain; equals the descriptor's rank.
int orthogonal_rank(const AlgebraHandle& algebra, std::uint64_t seed = 0);

}  // namespace jordan
