#include "jordan/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "jordan/errors.hpp"

namespace jordan {

PeirceProjections peirce_projections(const Idempotent& p) {
  const JordanAlgebra& alg = *p.element().algebra();
  const Mat l = alg.left_multiplication(p.element().coeffs());
  const Mat id = Mat::Identity(alg.dimension(), alg.dimension());
  return {l * (2.0 * l - id), 4.0 * l * (id - l), (2.0 * l - id) * (l - id)};
}

namespace {

// Powers r, a, a^2, ... until a^m falls into the span of the lower powers.
// Returns the monic minimal polynomial coefficients c_0..c_{m-1} with
// a^m = -(c_0 r + ... + c_{m-1} a^{m-1}).
std::vector<double> minimal_polynomial(const JordanAlgebra& alg, const Vec& r, const Vec& a) {
  const Vec w = alg.weights().cwiseSqrt();
  std::vector<Vec> powers{r};
  const int cap = alg.rank() + 1;
  for (int m = 1; m <= cap; ++m) {
    const Vec next = alg.product(a, powers.back());
    Mat basis(alg.dimension(), m);
    for (int k = 0; k < m; ++k) basis.col(k) = w.cwiseProduct(powers[static_cast<std::size_t>(k)]);
    const Vec target = w.cwiseProduct(next);
    const Vec coef = basis.colPivHouseholderQr().solve(target);
    const double residual = (basis * coef - target).norm();
    if (residual <= 1e-9 * std::max(1.0, target.norm())) {
      std::vector<double> c(static_cast<std::size_t>(m));
      for (int k = 0; k < m; ++k) c[static_cast<std::size_t>(k)] = -coef[k];
      return c;
    }
    powers.push_back(next);
  }
  return {};
}

}  // namespace

Atom atom_under(const Idempotent& r, Rng& rng) {
  const AlgebraHandle& handle = r.element().algebra();
  const JordanAlgebra& alg = *handle;
  const Vec& rv = r.element().coeffs();
  if (alg.norm(rv) < 0.5) throw PreconditionError("atom_under: idempotent is zero");
  const Mat ur = alg.quadratic_representation(rv);

  for (int attempt = 0; attempt < 32; ++attempt) {
    Vec a = ur * alg.random_vector(rng);
    const double scale = alg.norm(a);
    if (scale < 1e-12) continue;
    a /= scale;

    const std::vector<double> c = minimal_polynomial(alg, rv, a);
    if (c.empty()) continue;
    const auto m = static_cast<Eigen::Index>(c.size());
    if (m == 1) {
      // a is a multiple of r: r itself is the only spectral idempotent.
      if (auto atom = Atom::try_make(r.element())) return *atom;
      continue;
    }
    Mat companion = Mat::Zero(m, m);
    for (Eigen::Index k = 1; k < m; ++k) companion(k, k - 1) = 1.0;
    for (Eigen::Index k = 0; k < m; ++k) companion(k, m - 1) = -c[static_cast<std::size_t>(k)];
    const Eigen::VectorXcd roots = companion.eigenvalues();
    std::vector<double> lambda;
    bool real_roots = true;
    for (Eigen::Index k = 0; k < m; ++k) {
      if (std::abs(roots[k].imag()) > 1e-7) real_roots = false;
      lambda.push_back(roots[k].real());
    }
    if (!real_roots) continue;
    std::sort(lambda.begin(), lambda.end());
    double gap = 1e300;
    for (std::size_t k = 1; k < lambda.size(); ++k) gap = std::min(gap, lambda[k] - lambda[k - 1]);
    if (gap < 1e-3) continue;

    // Lagrange idempotent for the largest root, evaluated inside R[a].
    const double top = lambda.back();
    Vec e = rv;
    for (std::size_t k = 0; k + 1 < lambda.size(); ++k) {
      e = alg.product(e, a - lambda[k] * rv) / (top - lambda[k]);
    }
    // Purification e <- 3e^2 - 2e^3.
    for (int it = 0; it < 4; ++it) {
      const Vec e2 = alg.product(e, e);
      e = 3.0 * e2 - 2.0 * alg.product(e, e2);
    }
    if (auto atom = Atom::try_make(JordanElement(handle, e))) return *atom;
  }
  throw SearchExhausted("atom_under: no certified atom found");
}

std::vector<Atom> orthogonal_atom_chain(const AlgebraHandle& algebra, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Atom> chain;
  JordanElement rest = JordanElement::unit(algebra);
  for (int k = 0; k < algebra->dimension() && norm(rest) > 0.5; ++k) {
    Atom p = atom_under(Idempotent(rest), rng);
    rest -= p.element();
    chain.push_back(std::move(p));
  }
  return chain;
}

int orthogonal_rank(const AlgebraHandle& algebra, std::uint64_t seed) {
  return static_cast<int>(orthogonal_atom_chain(algebra, seed).size());
}

}  // namespace jordan
