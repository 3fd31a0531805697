#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jordan/errors.hpp"
#include "jordan/homogeneity.hpp"

using namespace jordan;

namespace {

AlgebraHandle alg(const char* d) { return JordanAlgebra::build(parse_descriptor(d)); }

}  // namespace

TEST_CASE("constructive witnesses") {
  for (const char* d : {"spin(2)", "spin(3)", "spin(8)", "H(2,R)", "H(3,R)", "H(3,C)", "H(4,C)", "H(3,H)", "H(4,H)"}) {
    CAPTURE(d);
    const AlgebraHandle a = alg(d);
    for (int t = 0; t < 10; ++t) {
      Rng rng(derive_seed(1, static_cast<std::uint64_t>(t)));
      const WitnessProblem problem = plant_problem(a, rng, t % 2 == 1);
      const Automorphism w = homogeneity_witness(problem);
      CHECK(witness_residual(w, problem) <= kWitnessTolerance);
      CHECK(w.certificate().worst() <= 1e-8);
    }
  }
}

TEST_CASE("witness for unplanted pairs with equal transition") {
  // diagonal pairs (E11, E22) and (E33, E11) in H(3,C)
  const AlgebraHandle a = alg("H(3,C)");
  const Atom e11(JordanElement::basis(a, 0)), e22(JordanElement::basis(a, 1)), e33(JordanElement::basis(a, 2));
  const WitnessProblem problem{e11, e22, e33, e11};
  CHECK(witness_residual(homogeneity_witness(problem), problem) <= 1e-12);
  CHECK(witness_residual(bit_symmetry_witness(e11, e22, e33, e11), problem) <= 1e-12);
}

TEST_CASE("octonionic and reducible witnesses by search") {
  for (const char* d : {"H(3,O)", "H(2,O)", "sum(spin(3),H(2,C))"}) {
    CAPTURE(d);
    const AlgebraHandle a = alg(d);
    for (int t = 0; t < 5; ++t) {
      Rng rng(derive_seed(2, static_cast<std::uint64_t>(t)));
      const WitnessProblem problem = plant_problem(a, rng, t % 2 == 0);
      const Automorphism w = homogeneity_witness(problem, static_cast<std::uint64_t>(t));
      CHECK(witness_residual(w, problem) <= kWitnessTolerance);
    }
  }
}

TEST_CASE("ill-posed problems are rejected") {
  const AlgebraHandle a = alg("H(3,R)");
  const Atom p = random_atom(a, 1), q = random_atom(a, 2);
  const Atom e11(JordanElement::basis(a, 0)), e22(JordanElement::basis(a, 1));
  CHECK_THROWS_AS(homogeneity_witness(WitnessProblem{p, q, e11, e22}), IllPosedError);
  CHECK_THROWS_AS(bit_symmetry_witness(p, q, e11, e22), PreconditionError);
  const Atom other = random_atom(alg("H(3,R)"), 3);
  CHECK_THROWS_AS(homogeneity_witness(WitnessProblem{p, q, p, other}), AlgebraMismatch);
}

TEST_CASE("orbit search reports failure on impossible targets") {
  // q1 in the first summand cannot be carried to q2 in the second while p stays fixed
  const AlgebraHandle a = alg("sum(H(2,R),H(3,R))");
  const Vec p = embed_block(*a, 0, Vec::Unit(3, 0));
  const Vec q1 = embed_block(*a, 0, Vec::Unit(3, 1));
  const Vec q2 = embed_block(*a, 1, Vec::Unit(6, 0));
  Rng rng(0);
  SearchOptions options;
  options.restarts = 3;
  const SearchOutcome out = orbit_search(a, {{p, p}, {q1, q2}}, rng, options);
  CHECK_FALSE(out.witness.has_value());
  CHECK(out.best_residual > 1.0);
}

TEST_CASE("reducible demo") {
  const ReducibleDemoReport r =
      reducible_nonhomogeneity_demo(parse_descriptor("H(2,R)"), parse_descriptor("H(2,R)"), 3, 400);
  CHECK(r.transition_q1 <= 1e-12);
  CHECK(r.transition_q2 <= 1e-12);
  CHECK(r.fixing_p > 0);
  CHECK(r.block_preserved == r.fixing_p);
  CHECK(r.witnesses_found == 0);
  CHECK_FALSE(r.search_found_witness);
  CHECK(r.demonstrated);

  const ReducibleDemoReport mixed =
      reducible_nonhomogeneity_demo(parse_descriptor("spin(3)"), parse_descriptor("H(3,C)"), 4, 200);
  CHECK(mixed.demonstrated);
  CHECK_THROWS_AS(reducible_nonhomogeneity_demo(parse_descriptor("H(1,R)"), parse_descriptor("H(2,R)"), 0, 10),
                  PreconditionError);
}
