#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jordan/automorphism.hpp"
#include "jordan/errors.hpp"
#include "jordan/spectral.hpp"

using namespace jordan;

namespace {

AlgebraHandle alg(const char* d) { return JordanAlgebra::build(parse_descriptor(d)); }

const char* const kMatrixFamilies[] = {"H(1,R)", "H(2,R)", "H(3,R)", "H(4,R)", "H(2,C)", "H(3,C)", "H(4,C)",
                                       "H(2,H)", "H(3,H)", "H(4,H)", "H(2,O)", "H(3,O)"};

}  // namespace

TEST_CASE("structure tensor matches the matrix oracle on basis pairs") {
  for (const char* d : kMatrixFamilies) {
    CAPTURE(d);
    const AlgebraHandle a = alg(d);
    double worst = 0.0;
    for (int i = 0; i < a->dimension(); ++i) {
      const HyperMatrix bi = to_hyper_matrix(*a, a->basis_vector(i));
      for (int j = 0; j < a->dimension(); ++j) {
        const HyperMatrix bj = to_hyper_matrix(*a, a->basis_vector(j));
        const Vec oracle = from_hyper_matrix(*a, jordan_matrix_product(bi, bj));
        worst = std::max(worst, (oracle - a->product(a->basis_vector(i), a->basis_vector(j))).cwiseAbs().maxCoeff());
      }
    }
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("spin factor product") {
  const AlgebraHandle a = alg("spin(3)");
  Vec x(4), y(4);
  x << 1.5, 1, 2, 3;
  y << -0.5, 0.25, -1, 2;
  Vec expect(4);
  expect << 1.5 * -0.5 + (0.25 - 2 + 6), 1.5 * 0.25 + -0.5 * 1, 1.5 * -1 + -0.5 * 2, 1.5 * 2 + -0.5 * 3;
  CHECK((a->product(x, y) - expect).norm() <= 1e-15);
  CHECK(a->trace(x) == doctest::Approx(3.0));
}

TEST_CASE("trace normalization and weights") {
  for (const char* d : {"spin(2)", "spin(5)", "H(3,R)", "H(3,O)", "H(4,H)", "sum(spin(3),H(3,C))"}) {
    CAPTURE(d);
    const AlgebraHandle a = alg(d);
    CHECK(a->trace(a->unit()) == doctest::Approx(a->rank()));
    for (int k = 0; k < a->dimension(); ++k) {
      const Vec e = a->basis_vector(k);
      CHECK(a->trace(a->product(e, e)) == doctest::Approx(a->weights()[k]));
    }
    CHECK((a->product(a->unit(), a->basis_vector(a->dimension() - 1)) - a->basis_vector(a->dimension() - 1)).norm() <=
          1e-15);
  }
}

TEST_CASE("Jordan identity and commutativity") {
  for (const char* d : {"spin(2)", "spin(8)", "H(3,R)", "H(4,C)", "H(4,H)", "H(3,O)", "sum(spin(3),H(3,O))"}) {
    CAPTURE(d);
    const AlgebraHandle a = alg(d);
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
      Vec x = a->random_vector(rng), y = a->random_vector(rng);
      x /= a->norm(x);
      y /= a->norm(y);
      const Vec x2 = a->product(x, x);
      CHECK(a->norm(a->product(a->product(x2, y), x) - a->product(x2, a->product(y, x))) <= 1e-12);
      CHECK(a->norm(a->product(x, y) - a->product(y, x)) <= 1e-15);
    }
  }
}

TEST_CASE("triple product is the quadratic representation") {
  const AlgebraHandle a = alg("H(3,O)");
  Rng rng(8);
  const JordanElement x(a, a->random_vector(rng));
  const JordanElement y(a, a->random_vector(rng));
  const Vec direct = 2.0 * jordan_product(x, jordan_product(x, y)).coeffs() - jordan_product(square(x), y).coeffs();
  CHECK((triple_product(x, y).coeffs() - direct).norm() <= 1e-12);
  CHECK((a->quadratic_representation(x.coeffs()) * y.coeffs() - direct).norm() <= 1e-12);
}

TEST_CASE("idempotents and atoms") {
  const AlgebraHandle a = alg("H(3,C)");
  const JordanElement e11 = JordanElement::basis(a, 0);
  const JordanElement e22 = JordanElement::basis(a, 1);
  CHECK(is_atom(e11));
  CHECK(is_idempotent(e11 + e22));
  CHECK_FALSE(is_atom(e11 + e22));
  CHECK_FALSE(is_atom(JordanElement::unit(a)));
  CHECK_FALSE(is_atom(JordanElement::zero(a)));
  CHECK_FALSE(is_atom(2.0 * e11));
  CHECK_THROWS_AS(Atom(e11 + e22), PreconditionError);
  CHECK_THROWS_AS(Idempotent(2.0 * e11), PreconditionError);

  const AlgebraHandle s = alg("spin(3)");
  Vec v(4);
  v << 0.5, 0.3, 0.4, 0.0;
  v.tail(3) *= 0.5 / v.tail(3).norm();
  CHECK(is_atom(JordanElement(s, v)));

  const AlgebraHandle r = alg("H(1,R)");
  CHECK(is_atom(JordanElement::unit(r)));
}

TEST_CASE("random atoms certify in every family") {
  for (const char* d : {"spin(2)", "spin(8)", "H(2,R)", "H(4,C)", "H(4,H)", "H(2,O)", "H(3,O)", "sum(H(2,R),spin(4))"}) {
    CAPTURE(d);
    const AlgebraHandle a = alg(d);
    for (std::uint64_t s = 0; s < 20; ++s) {
      const Atom p = random_atom(a, s);
      CHECK(trace(p) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("operands from different algebras are rejected") {
  const JordanElement x = JordanElement::unit(alg("H(2,R)"));
  const JordanElement y = JordanElement::unit(alg("H(2,R)"));
  CHECK_THROWS_AS(jordan_product(x, y), AlgebraMismatch);
  CHECK_THROWS_AS(JordanElement(x.algebra(), Vec::Zero(5)), DimensionError);
}

TEST_CASE("Peirce decomposition of an atom") {
  struct Case {
    const char* d;
    int half_dim;
    int zero_dim;
  };
  for (const Case c : {Case{"H(3,R)", 2, 3}, Case{"H(3,C)", 4, 4}, Case{"H(3,H)", 8, 6}, Case{"H(3,O)", 16, 10},
                       Case{"spin(5)", 4, 1}, Case{"H(4,H)", 12, 15}}) {
    CAPTURE(c.d);
    const AlgebraHandle a = alg(c.d);
    const Atom p = random_atom(a, 5);
    const PeirceProjections pp = peirce_projections(p.as_idempotent());
    const int n = a->dimension();
    CHECK((pp.one + pp.half + pp.zero - Mat::Identity(n, n)).norm() <= 1e-12);
    const Mat l = a->left_multiplication(p.element().coeffs());
    CHECK((l * pp.half - 0.5 * pp.half).norm() <= 1e-12);
    CHECK((l * pp.zero).norm() <= 1e-12);
    CHECK(numerical_rank(pp.one, 1e-8) == 1);
    CHECK(numerical_rank(pp.half, 1e-8) == c.half_dim);
    CHECK(numerical_rank(pp.zero, 1e-8) == c.zero_dim);
  }
}

TEST_CASE("orthogonal rank") {
  for (const char* d : {"spin(2)", "spin(3)", "spin(8)"}) CHECK(orthogonal_rank(alg(d)) == 2);
  for (const char* d : kMatrixFamilies) {
    CAPTURE(d);
    const AlgebraHandle a = alg(d);
    CHECK(orthogonal_rank(a, 4) == a->descriptor().n);
  }
  CHECK(orthogonal_rank(alg("sum(spin(3),H(3,C))")) == 5);
}

TEST_CASE("derivation algebra dimensions") {
  struct Case {
    const char* d;
    std::size_t dim;
  };
  // so(3), su(3), sp(3), f4, so(n)
  for (const Case c : {Case{"H(3,R)", 3}, Case{"H(3,C)", 8}, Case{"H(3,H)", 21}, Case{"H(3,O)", 52},
                       Case{"spin(5)", 10}, Case{"H(2,O)", 36}}) {
    CAPTURE(c.d);
    CHECK(derivation_basis(*alg(c.d)).size() == c.dim);
  }
}

TEST_CASE("automorphism certification") {
  const AlgebraHandle a = alg("H(3,O)");
  Rng rng(2);
  const Automorphism t = random_derivation_automorphism(a, rng);
  CHECK(t.certificate().worst() <= 1e-8);
  const Automorphism u = random_automorphism(a, rng);
  const Automorphism tu = t.compose(u);
  const Vec x = a->random_vector(rng);
  CHECK((tu.matrix() * x - t.matrix() * (u.matrix() * x)).norm() <= 1e-12);
  CHECK((t.inverse().matrix() * (t.matrix() * x) - x).norm() <= 1e-10);
  const int n = a->dimension();
  CHECK_THROWS_AS(Automorphism::certify(a, 2.0 * Mat::Identity(n, n)), CertificationError);
  Mat shear = Mat::Identity(n, n);
  shear(n - 1, 0) = 0.3;
  CHECK_THROWS_AS(Automorphism::certify(a, shear), CertificationError);

  const AlgebraHandle h = alg("H(3,H)");
  const Automorphism c = conjugation_automorphism(h, random_unitary(Field::Quaternion, 3, rng));
  CHECK(c.certificate().worst() <= 1e-9);
  CHECK_THROWS_AS(conjugation_automorphism(a, HyperMatrix::identity(Field::Octonion, 3)), PreconditionError);
}
