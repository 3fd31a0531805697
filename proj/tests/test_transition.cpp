#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "jordan/automorphism.hpp"
#include "jordan/errors.hpp"
#include "jordan/transition.hpp"

using namespace jordan;

namespace {

AlgebraHandle alg(const char* d) { return JordanAlgebra::build(parse_descriptor(d)); }

// e_t = [[cos^2 t, cos t sin t], [cos t sin t, sin^2 t]] in H(2,R); basis E11, E22, X12.
Atom e_t(const AlgebraHandle& h2, double t) {
  Vec v(3);
  v << std::cos(t) * std::cos(t), std::sin(t) * std::sin(t), std::cos(t) * std::sin(t);
  return Atom(JordanElement(h2, v));
}

}  // namespace

TEST_CASE("transition values on diagonal atoms") {
  const AlgebraHandle a = alg("H(3,C)");
  const Atom e11(JordanElement::basis(a, 0));
  const Atom e22(JordanElement::basis(a, 1));
  CHECK(transition_probability(e11, e11.as_idempotent()) == 1.0);
  CHECK(transition_probability(e11, e22.as_idempotent()) == 0.0);
  CHECK(transition_probability(e11, Idempotent(JordanElement::unit(a))) == doctest::Approx(1.0));
  CHECK(geodesic_distance(e11, e22) == doctest::Approx(1.0));
  CHECK(geodesic_distance(e11, e11) == 0.0);
}

TEST_CASE("transition value wrapper clamps round-off only") {
  CHECK(TransitionValue(1.0 + 5e-10).value() == 1.0);
  CHECK(TransitionValue(-5e-10).value() == 0.0);
  CHECK_THROWS_AS(TransitionValue(1.1), PreconditionError);
  CHECK_THROWS_AS(MetricValue(-0.01), PreconditionError);
}

TEST_CASE("e_t family: transition is cos^2(s - t)") {
  const AlgebraHandle h2 = alg("H(2,R)");
  for (double s : {0.0, 0.3, 1.1, 2.5}) {
    for (double t : {0.0, 0.7, -0.4, 3.0}) {
      const double c = transition_probability(e_t(h2, s), e_t(h2, t).as_idempotent());
      CHECK(std::abs(c - std::pow(std::cos(s - t), 2)) <= 1e-12);
    }
  }
}

TEST_CASE("transition_exists matches {p,q,p} = s p") {
  const AlgebraHandle a = alg("H(3,H)");
  const Atom p = random_atom(a, 1);
  const Atom q = random_atom(a, 2);
  const auto s = transition_exists(p.as_idempotent(), q.as_idempotent());
  REQUIRE(s.has_value());
  CHECK(s->value() == doctest::Approx(transition_probability(p, q.as_idempotent()).value()).epsilon(1e-12));
  // p = E11 + E22 is not an atom: {p, q, p} is not a multiple of p in general
  const Idempotent big(JordanElement::basis(a, 0) + JordanElement::basis(a, 1));
  CHECK_FALSE(transition_exists(big, q.as_idempotent()).has_value());
}

TEST_CASE("closed-form midpoint in H(2,R) is e_{(s+t)/2}") {
  const AlgebraHandle h2 = alg("H(2,R)");
  Rng rng(0);
  for (double s : {0.0, 0.2, -0.5}) {
    for (double t : {0.1, 0.6, 1.2}) {
      // e_t has period pi, so (s+t)/2 is the nearer midpoint only when |s-t| < pi/2
      if (std::abs(s - t) >= std::numbers::pi / 2) continue;
      const Atom e = midpoint(e_t(h2, s), e_t(h2, t), rng);
      CHECK(distance(e, e_t(h2, 0.5 * (s + t))) <= 1e-12);
    }
  }
}

TEST_CASE("orthogonal midpoint is (v + p + q)/2") {
  const AlgebraHandle a = alg("H(3,R)");
  Rng rng(1);
  const Atom p(JordanElement::basis(a, 0));
  const Atom q(JordanElement::basis(a, 1));
  const JordanElement v = find_symmetry(p, q, rng);
  CHECK(distance(square(v), p.element() + q.element()) <= 1e-12);
  const Atom e = midpoint(p, q, rng);
  CHECK(geodesic_distance(p, e) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(geodesic_distance(e, q) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(is_atom((v + p.element() + q.element()) / 2.0));
  // e = (w + p + q)/2 for some symmetry w between p and q
  const JordanElement w = 2.0 * e.element() - p.element() - q.element();
  CHECK(distance(square(w), p.element() + q.element()) <= 1e-12);
  CHECK_THROWS_AS(find_symmetry(p, p, rng), PreconditionError);
}

TEST_CASE("midpoint across summands is refused") {
  const AlgebraHandle a = alg("sum(H(2,R),H(2,R))");
  const Atom p(JordanElement(a, embed_block(*a, 0, Vec::Unit(3, 0))));
  const Atom q(JordanElement(a, embed_block(*a, 1, Vec::Unit(3, 0))));
  Rng rng(0);
  CHECK(transition_probability(p, q.as_idempotent()) == 0.0);
  CHECK_THROWS_AS(find_symmetry(p, q, rng), NoSymmetryError);
  CHECK_THROWS_AS(midpoint(p, q, rng), NoMidpointError);
}

TEST_CASE("midpoint campaigns") {
  for (const char* d : {"spin(2)", "spin(6)", "H(3,C)", "H(4,H)", "H(3,O)"}) {
    CAPTURE(d);
    const AlgebraHandle a = alg(d);
    for (PairKind kind : {PairKind::Random, PairKind::Orthogonal, PairKind::NearEqual}) {
      const ConvexityReport r = convexity_check(a, 30, 17, kind);
      CHECK(r.max_halving_defect <= 1e-9);
      CHECK(r.max_between_defect <= 1e-9);
      CHECK(r.max_atom_residual <= 1e-9);
    }
  }
  CHECK_THROWS_AS(convexity_check(alg("sum(spin(3),spin(3))"), 1, 0), PreconditionError);
}

TEST_CASE("equal atoms give themselves as midpoint") {
  const AlgebraHandle a = alg("H(3,O)");
  const Atom p = random_atom(a, 4);
  Rng rng(0);
  CHECK(distance(midpoint(p, p, rng), p) == 0.0);
}

TEST_CASE("metric axioms on samples") {
  const AlgebraHandle a = alg("H(3,H)");
  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    const Atom x = random_atom(a, rng), y = random_atom(a, rng), z = random_atom(a, rng);
    const double xy = geodesic_distance(x, y), yz = geodesic_distance(y, z), xz = geodesic_distance(x, z);
    CHECK(xy + yz - xz >= -1e-12);
    CHECK(xy == doctest::Approx(geodesic_distance(y, x).value()).epsilon(1e-14));
  }
}

TEST_CASE("transition is invariant under automorphisms") {
  for (const char* d : {"spin(4)", "H(3,C)", "H(3,O)"}) {
    CAPTURE(d);
    const AlgebraHandle a = alg(d);
    Rng rng(6);
    for (int t = 0; t < 10; ++t) {
      const Automorphism g = random_automorphism(a, rng);
      const Atom p = random_atom(a, rng), q = random_atom(a, rng);
      CHECK(std::abs(transition_probability(g.apply(p), g.apply(q).as_idempotent()) -
                     transition_probability(p, q.as_idempotent())) <= 1e-10);
    }
  }
}
