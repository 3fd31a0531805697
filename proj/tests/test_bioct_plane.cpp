#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "jordan/bioct_plane.hpp"
#include "jordan/errors.hpp"

using namespace jordan;

namespace {

Bioctonion random_bioct(Rng& rng) {
  Bioctonion b;
  for (std::size_t k = 0; k < 8; ++k) b.re[k] = standard_normal(rng);
  for (std::size_t k = 0; k < 8; ++k) b.im[k] = standard_normal(rng);
  return b;
}

BioctMatrix random_hermitian(Rng& rng) {
  BioctMatrix x;
  for (int i = 0; i < 3; ++i) {
    x(i, i) = Bioctonion::from_complex({standard_normal(rng), standard_normal(rng)});
    for (int j = i + 1; j < 3; ++j) {
      x(i, j) = random_bioct(rng);
      x(j, i) = octonion_conjugate(x(i, j));
    }
  }
  return x;
}

AlgebraHandle h3(Field f) { return JordanAlgebra::build(AlgebraDescriptor::matrix(3, f)); }

PlanePoint diag_point(int i) { return PlanePoint::certify(BioctMatrix::unit(i)); }

}  // namespace

TEST_CASE("Jordan product basics") {
  Rng rng(1);
  const BioctMatrix x = random_hermitian(rng);
  CHECK(bioct_norm(bioct_jordan_product(BioctMatrix::identity(), x) - x) == 0.0);
  CHECK(bioct_norm(bioct_jordan_product(BioctMatrix::unit(0), BioctMatrix::unit(1))) == 0.0);
}

TEST_CASE("real-octonion restriction matches the H(3,O) structure tensor") {
  const AlgebraHandle a = h3(Field::Octonion);
  double worst = 0.0;
  for (int i = 0; i < a->dimension(); ++i) {
    const BioctMatrix bi = embed_matrix(*a, a->basis_vector(i));
    for (int j = 0; j < a->dimension(); ++j) {
      const BioctMatrix bj = embed_matrix(*a, a->basis_vector(j));
      const Vec got = restrict_to_octonions(*a, bioct_jordan_product(bi, bj));
      worst = std::max(worst, (got - a->product(a->basis_vector(i), a->basis_vector(j))).cwiseAbs().maxCoeff());
    }
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("inner product") {
  CHECK(bioct_inner(BioctMatrix::unit(0), BioctMatrix::unit(0)) == 1.0);
  CHECK(bioct_inner(BioctMatrix::unit(0), BioctMatrix::unit(1)) == 0.0);
  Rng rng(2);
  for (int t = 0; t < 1000; ++t) {
    const BioctMatrix x = random_hermitian(rng);
    const BioctMatrix y = random_hermitian(rng);
    REQUIRE(bioct_inner(x, x) > 0.0);
    CHECK(std::abs(bioct_inner(x, y) - entry_pairing(x, y)) <= 1e-10 * bioct_norm(x) * bioct_norm(y));
    CHECK(bioct_inner(x, y) == doctest::Approx(bioct_inner(y, x)).epsilon(1e-12));
  }
  BioctMatrix bad;
  bad(0, 1) = Bioctonion::one();
  CHECK_THROWS_AS(bioct_inner(bad, bad), PreconditionError);
}

TEST_CASE("Hermiticity is closed under the products") {
  Rng rng(3);
  for (int t = 0; t < 1000; ++t) {
    const BioctMatrix x = random_hermitian(rng);
    const BioctMatrix y = random_hermitian(rng);
    CHECK(hermiticity_residual(bioct_jordan_product(x, y)) <= 1e-10);
    CHECK(hermiticity_residual(freudenthal_square(x)) <= 1e-10);
  }
}

TEST_CASE("Freudenthal square examples") {
  CHECK(bioct_norm(freudenthal_square(BioctMatrix::unit(0))) == 0.0);
  CHECK(bioct_norm(freudenthal_square(BioctMatrix::identity()) - BioctMatrix::identity()) == 0.0);
  // diag(1,1,0): x^2 = x, tr = 2, tr(x^2) = 2, so x - 2x - (2 - 4)/2 I = E33
  const BioctMatrix d = BioctMatrix::unit(0) + BioctMatrix::unit(1);
  CHECK(bioct_norm(freudenthal_square(d) - BioctMatrix::unit(2)) == 0.0);
}

TEST_CASE("point predicate") {
  CHECK(is_point(BioctMatrix::unit(0)));
  CHECK_FALSE(is_point(BioctMatrix::identity() * (1.0 / std::sqrt(3.0))));
  CHECK_FALSE(is_point(BioctMatrix{}));
  CHECK_THROWS_AS(PlanePoint::certify(BioctMatrix::identity()), PreconditionError);
  // a complex phase other than ±1 leaves the point set
  CHECK_FALSE(is_point(scale(std::polar(1.0, 0.3), BioctMatrix::unit(0))));
}

TEST_CASE("random points certify") {
  Rng rng(4);
  for (int t = 0; t < 1000; ++t) {
    const PlanePoint point = random_point(rng);
    const BioctMatrix& p = point.representative();
    CHECK(std::abs(bioct_inner(p, p) - 1.0) <= 1e-10);
    CHECK(bioct_norm(freudenthal_square(p)) <= 1e-9);
  }
}

TEST_CASE("real-octonion sampler lands on H(3,O) atoms") {
  const AlgebraHandle a = h3(Field::Octonion);
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const PlanePoint p = random_point(rng, {.real_octonion = true});
    const Vec v = restrict_to_octonions(*a, p.representative());
    CHECK((is_atom(JordanElement(a, v)) || is_atom(JordanElement(a, -v))));
  }
}

TEST_CASE("sampler parameters round trip") {
  Rng rng(6);
  for (int t = 0; t < 50; ++t) {
    const PlanePoint p = random_point(rng);
    const auto params = parameters_of(p.representative());
    REQUIRE(params.has_value());
    CHECK(PlanePoint::certify(point_from_parameters(*params)) == p);
  }
}

TEST_CASE("canonical sign and class equality") {
  Rng rng(7);
  const PlanePoint p = random_point(rng);
  const PlanePoint n = PlanePoint::certify(-p.representative());
  CHECK(n == p);
  CHECK(bioct_norm(n.representative() - p.representative()) == 0.0);
  CHECK_FALSE(random_point(rng) == p);
}

TEST_CASE("coordinates") {
  const auto c = plane_coordinates(BioctMatrix::unit(1));
  CHECK(c.size() == 27);
  CHECK(c[1] == std::complex<double>(1.0, 0.0));
  BioctMatrix x;
  x(1, 2).im[3] = 2.0;
  CHECK(plane_coordinates(x)[3 + 16 + 3] == std::complex<double>(0.0, 2.0));
}

TEST_CASE("logic and states") {
  const PlanePoint e1 = diag_point(0), e2 = diag_point(1), e3 = diag_point(2);
  const LogicElement l1 = line_of(e1);
  CHECK(on_line(e2, l1));
  CHECK(on_line(e3, l1));
  CHECK_FALSE(on_line(e1, l1));
  CHECK(on_line(PlanePoint::certify(-e2.representative()), l1));

  for (const LogicElement& v : {LogicElement::zero(), LogicElement::unit(), LogicElement::point(e1), l1}) {
    CHECK(v.orthocomplement().orthocomplement() == v);
    CHECK(v.orthocomplement().kind() != v.kind());
  }
  CHECK(LogicElement::point(e1).orthocomplement() == l1);

  const PlaneState mu{e1};
  CHECK(state_eval(mu, LogicElement::point(e1)) == 1.0);
  CHECK(state_eval(mu, LogicElement::point(e2)) == 0.0);
  CHECK(state_eval(mu, line_of(e2)) == 1.0);
  CHECK(state_eval(mu, LogicElement::zero()) == 0.0);
  CHECK(state_eval(mu, LogicElement::unit()) == 1.0);

  Rng rng(8);
  for (int t = 0; t < 200; ++t) {
    const PlaneState s{random_point(rng)};
    const LogicElement q = LogicElement::point(random_point(rng));
    const double a = state_eval(s, q);
    CHECK(a >= 0.0);
    CHECK(a <= 1.0);
    CHECK(a + state_eval(s, q.orthocomplement()) == 1.0);
  }
}

TEST_CASE("transition and metric") {
  const PlanePoint e1 = diag_point(0), e2 = diag_point(1);
  CHECK(plane_transition(e1, e1) == 1.0);
  CHECK(plane_transition(e2, e1) == 0.0);
  CHECK(plane_metric(e1, e2) == doctest::Approx(std::numbers::pi / 2));
  CHECK(plane_metric(e1, e1) == 0.0);

  Rng rng(9);
  double sup = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const PlanePoint x = random_point(rng), y = random_point(rng), z = random_point(rng);
    const double xy = plane_metric(x, y), yz = plane_metric(y, z), xz = plane_metric(x, z);
    CHECK(xy + yz - xz >= -1e-9);
    CHECK(xy == plane_metric(y, x));
    CHECK(plane_transition(x, y) == plane_transition(y, x));
    CHECK(plane_metric(x, x) <= 1e-7);
    sup = std::max(sup, 2.0 / std::numbers::pi * xy);
  }
  CHECK(sup <= 1.0);
}

TEST_CASE("subplane embeddings") {
  const AlgebraHandle r = h3(Field::Real);
  for (int i = 0; i < 3; ++i) CHECK(subplane_embedding(Atom(JordanElement::basis(r, i))) == diag_point(i));

  for (Field f : {Field::Real, Field::Complex, Field::Quaternion, Field::Octonion}) {
    CAPTURE(field_tag(f));
    const AlgebraHandle a = h3(f);
    Rng rng(10);
    for (int t = 0; t < 50; ++t) {
      const Atom p = random_atom(a, rng), q = random_atom(a, rng);
      const PlanePoint pp = subplane_embedding(p), qq = subplane_embedding(q);
      CHECK(std::abs(plane_transition(pp, qq) - transition_probability(p, q.as_idempotent())) <= 1e-10);
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) CHECK(norm_form(pp.representative()(i, j).im) == 0.0);
      }
    }
    Rng orth(11);
    const auto [p, q] = sample_atom_pair(a, PairKind::Orthogonal, orth);
    CHECK(on_line(subplane_embedding(q), line_of(subplane_embedding(p))));
  }
}

TEST_CASE("tensor-unit complex embedding is not Hermitian") {
  const AlgebraHandle a = h3(Field::Complex);
  const Atom p = random_atom(a, 12);
  const BioctMatrix x = embed_matrix(*a, p.element().coeffs(), ComplexEmbedding::TensorUnit);
  CHECK(hermiticity_residual(x) > 0.1);
  CHECK_THROWS_AS(PlanePoint::certify(x), PreconditionError);
  // diagonal atoms carry no complex entries and embed either way
  CHECK(hermiticity_residual(embed_matrix(*a, a->basis_vector(0), ComplexEmbedding::TensorUnit)) == 0.0);
}

TEST_CASE("H3(C (x) O) is not formally real") {
  BioctMatrix x = scale({0.0, 1.0}, BioctMatrix::unit(0));
  CHECK(complex_trace(bioct_jordan_product(x, x)).real() == -1.0);

  const Bioctonion e1 = Bioctonion::from_octonion(Hypercomplex::unit(Field::Octonion, 1));
  const Bioctonion z = Bioctonion::one() + scale({0.0, 1.0}, e1);
  BioctMatrix n;
  n(0, 1) = z;
  n(1, 0) = octonion_conjugate(z);
  CHECK(bioct_norm(n) > 0.0);
  CHECK(bioct_norm(bioct_jordan_product(n, n)) == 0.0);

  Rng rng(13);
  const FormalRealityWitness w = formal_reality_counterexample(rng, 100);
  CHECK(w.found);
  CHECK(w.trace_square <= 0.0);
  CHECK(w.norm > 0.0);
  CHECK(hermiticity_residual(w.x) <= 1e-10);
}

TEST_CASE("midpoint search") {
  Rng rng(14);
  const PlanePoint p = random_point(rng);
  const PlaneMidpointResult same = plane_midpoint_search(p, p, rng);
  CHECK(same.defect == 0.0);
  CHECK(same.point == p);

  const AlgebraHandle a = h3(Field::Octonion);
  for (int t = 0; t < 3; ++t) {
    const Atom x = random_atom(a, rng), y = random_atom(a, rng);
    const PlanePoint seed = subplane_embedding(midpoint(x, y, rng));
    const PlaneMidpointResult m =
        plane_midpoint_search(subplane_embedding(x), subplane_embedding(y), rng, kMidpointBudget, seed);
    CHECK(m.defect <= 1e-6);
    CHECK(m.between_defect <= 1e-6);
  }

  const PlaneMidpointResult g = plane_midpoint_search(random_point(rng), random_point(rng), rng, 20000);
  CHECK(g.evaluations <= 20000);
  CHECK(is_point(g.point.representative()));
}
