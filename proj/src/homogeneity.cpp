#include "jordan/homogeneity.hpp"

#include <algorithm>
#include <cmath>

#include "jordan/errors.hpp"
#include "jordan/spectral.hpp"

namespace jordan {

double witness_residual(const Automorphism& t, const WitnessProblem& problem) {
  return std::max(distance(t.apply(problem.p1.element()), problem.p2),
                  distance(t.apply(problem.q1.element()), problem.q2));
}

namespace {

double max_pair_residual(const JordanAlgebra& alg, const Mat& t, const std::vector<std::pair<Vec, Vec>>& pairs) {
  double worst = 0.0;
  for (const auto& [x, y] : pairs) worst = std::max(worst, alg.norm(t * x - y));
  return worst;
}

}  // namespace

SearchOutcome orbit_search(const AlgebraHandle& algebra, const std::vector<std::pair<Vec, Vec>>& pairs, Rng& rng,
                           const SearchOptions& options) {
  const JordanAlgebra& alg = *algebra;
  const int n = alg.dimension();
  const std::vector<Mat> basis = derivation_basis(alg);
  const Vec w = alg.weights().cwiseSqrt();
  const auto m = static_cast<Eigen::Index>(pairs.size()) * n;

  auto stacked_residual = [&](const Mat& t) {
    Vec r(m);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      r.segment(static_cast<Eigen::Index>(k) * n, n) = w.cwiseProduct(pairs[k].second - t * pairs[k].first);
    }
    return r;
  };

  SearchOutcome outcome;
  outcome.best_residual = std::numeric_limits<double>::infinity();
  std::vector<Mat> starts;
  if (options.include_identity) starts.push_back(Mat::Identity(n, n));
  for (const auto& s : options.starts) starts.push_back(s.matrix());
  const int total = static_cast<int>(starts.size()) + options.restarts;

  for (int start = 0; start < total; ++start) {
    Mat t = start < static_cast<int>(starts.size()) ? starts[static_cast<std::size_t>(start)]
                                                    : random_derivation_automorphism(algebra, rng).matrix();
    outcome.restarts_used = start + 1;
    Vec r = stacked_residual(t);
    if (!basis.empty()) {
      for (int it = 0; it < options.iterations && r.norm() > options.target; ++it) {
        Mat jac(m, static_cast<Eigen::Index>(basis.size()));
        for (std::size_t b = 0; b < basis.size(); ++b) {
          for (std::size_t k = 0; k < pairs.size(); ++k) {
            jac.block(static_cast<Eigen::Index>(k) * n, static_cast<Eigen::Index>(b), n, 1) =
                w.cwiseProduct(basis[b] * (t * pairs[k].first));
          }
        }
        Vec theta = solve_min_norm(jac, r);
        const double len = theta.norm();
        if (len > 1.0) theta /= len;
        bool accepted = false;
        for (double step = 1.0; step > 1e-4; step *= 0.5) {
          Mat d = Mat::Zero(n, n);
          for (std::size_t b = 0; b < basis.size(); ++b) d += (step * theta[static_cast<Eigen::Index>(b)]) * basis[b];
          Mat candidate = expm(d) * t;
          Vec rc = stacked_residual(candidate);
          if (rc.norm() < r.norm()) {
            t = std::move(candidate);
            r = std::move(rc);
            accepted = true;
            break;
          }
        }
        if (!accepted) break;
      }
    }
    const double residual = max_pair_residual(alg, t, pairs);
    outcome.best_residual = std::min(outcome.best_residual, residual);
    if (residual <= kWitnessTolerance) {
      try {
        outcome.witness = Automorphism::certify(algebra, t);
        outcome.best_residual = residual;
        return outcome;
      } catch (const CertificationError&) {
        // drift from repeated exponentials; keep searching
      }
    }
  }
  return outcome;
}

namespace {

// Orthonormal completion over K with right scalars: greedily appends the
// standard vector with the largest residual after projection.
HyperMatrix complete_frame(const std::vector<HyperMatrix>& seed, Field field, std::size_t n) {
  std::vector<HyperMatrix> frame = seed;
  while (frame.size() < n) {
    HyperMatrix best(field, n, 1);
    double best_norm = -1.0;
    for (std::size_t k = 0; k < n; ++k) {
      HyperMatrix v(field, n, 1);
      v(k, 0) = Hypercomplex::real(field, 1.0);
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& f : frame) v -= f.right_scaled(hermitian_inner(f, v));
      }
      const double nv = std::sqrt(v.frobenius_norm_sq());
      if (nv > best_norm) {
        best_norm = nv;
        best = v * (1.0 / nv);
      }
    }
    frame.push_back(best);
  }
  HyperMatrix out(field, n, n);
  for (std::size_t j = 0; j < n; ++j) out.set_column(j, frame[j]);
  return out;
}

// Unit vector phi with p = phi phi^dagger (defined up to a right phase).
HyperMatrix ray_of(const Atom& p) {
  const JordanAlgebra& alg = *p.element().algebra();
  const HyperMatrix m = to_hyper_matrix(alg, p.element().coeffs());
  std::size_t j = 0;
  for (std::size_t k = 1; k < m.rows(); ++k) {
    if (m(k, k)[0] > m(j, j)[0]) j = k;
  }
  return m.column(j) * (1.0 / std::sqrt(m(j, j)[0]));
}

HyperMatrix unit_vector(const HyperMatrix& v) { return v * (1.0 / std::sqrt(v.frobenius_norm_sq())); }

// Rotates psi by a right phase so that phi^dagger psi is real and non-negative.
HyperMatrix align_phase(const HyperMatrix& phi, const HyperMatrix& psi) {
  const Hypercomplex a = hermitian_inner(phi, psi);
  const double len = abs(a);
  if (len < 1e-12) return psi;
  return psi.right_scaled(conjugate(a) * (1.0 / len));
}

// Frame starting at phi and continuing towards psi when psi is not parallel.
std::vector<HyperMatrix> pair_frame(const HyperMatrix& phi, const HyperMatrix& psi) {
  std::vector<HyperMatrix> frame{phi};
  HyperMatrix rest = psi - phi.right_scaled(hermitian_inner(phi, psi));
  if (std::sqrt(rest.frobenius_norm_sq()) > 1e-9) frame.push_back(unit_vector(rest));
  return frame;
}

Automorphism matrix_witness(const WitnessProblem& problem) {
  const AlgebraHandle& alg = problem.p1.element().algebra();
  const Field field = alg->descriptor().field;
  const auto n = static_cast<std::size_t>(alg->descriptor().n);

  const HyperMatrix phi1 = ray_of(problem.p1);
  const HyperMatrix psi1 = ray_of(problem.q1);
  const HyperMatrix phi2 = ray_of(problem.p2);
  const HyperMatrix psi2 = ray_of(problem.q2);

  // Step 1: u1 phi1 = phi2.
  const HyperMatrix u1 = complete_frame({phi2}, field, n) * complete_frame({phi1}, field, n).adjoint();
  // Step 2: u2 fixes phi2 and carries u1 psi1 to psi2 (up to a right phase).
  const HyperMatrix moved = align_phase(phi2, u1 * psi1);
  const HyperMatrix target = align_phase(phi2, psi2);
  const HyperMatrix u2 =
      complete_frame(pair_frame(phi2, target), field, n) * complete_frame(pair_frame(phi2, moved), field, n).adjoint();
  return conjugation_automorphism(alg, u2 * u1);
}

Mat spin_frame(const Vec& u, const Vec& v) {
  const auto n = u.size();
  std::vector<Vec> frame{u};
  Vec rest = v - v.dot(u) * u;
  if (rest.norm() > 1e-9) frame.push_back(rest.normalized());
  while (static_cast<Eigen::Index>(frame.size()) < n) {
    Vec best;
    double best_norm = -1.0;
    for (Eigen::Index k = 0; k < n; ++k) {
      Vec e = Vec::Unit(n, k);
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& f : frame) e -= f.dot(e) * f;
      }
      if (e.norm() > best_norm) {
        best_norm = e.norm();
        best = e / best_norm;
      }
    }
    frame.push_back(best);
  }
  Mat out(n, n);
  for (Eigen::Index j = 0; j < n; ++j) out.col(j) = frame[static_cast<std::size_t>(j)];
  return out;
}

Automorphism spin_witness(const WitnessProblem& problem) {
  const AlgebraHandle& alg = problem.p1.element().algebra();
  const int n = alg->descriptor().n;
  auto direction = [n](const Atom& a) -> Vec { return a.element().coeffs().tail(n).normalized(); };
  const Mat f = spin_frame(direction(problem.p1), direction(problem.q1));
  const Mat g = spin_frame(direction(problem.p2), direction(problem.q2));
  return spin_automorphism(alg, g * f.transpose());
}

Automorphism search_witness(const WitnessProblem& problem, std::uint64_t seed) {
  const AlgebraHandle& alg = problem.p1.element().algebra();
  Rng rng(seed);
  std::vector<std::pair<Vec, Vec>> pairs{{problem.p1.element().coeffs(), problem.p2.element().coeffs()},
                                         {problem.q1.element().coeffs(), problem.q2.element().coeffs()}};
  SearchOutcome out = orbit_search(alg, pairs, rng);
  if (!out.witness) {
    throw SearchExhausted("homogeneity_witness: orbit search exhausted (best residual " +
                          std::to_string(out.best_residual) + ")");
  }
  return *out.witness;
}

}  // namespace

Automorphism homogeneity_witness(const WitnessProblem& problem, std::uint64_t seed) {
  const AlgebraHandle& alg = problem.p1.element().algebra();
  for (const Atom* a : {&problem.q1, &problem.p2, &problem.q2}) {
    if (a->element().algebra() != alg) throw AlgebraMismatch("witness problem mixes algebras");
  }
  const double c1 = transition_probability(problem.p1, problem.q1.as_idempotent());
  const double c2 = transition_probability(problem.p2, problem.q2.as_idempotent());
  if (std::abs(c1 - c2) > problem.tolerance) {
    throw IllPosedError("transition values differ: " + std::to_string(c1) + " vs " + std::to_string(c2));
  }

  const auto& d = alg->descriptor();
  std::optional<Automorphism> t;
  if (d.kind == AlgebraDescriptor::Kind::Spin) {
    t = spin_witness(problem);
  } else if (d.kind == AlgebraDescriptor::Kind::Matrix && d.field != Field::Octonion) {
    t = matrix_witness(problem);
  } else {
    return search_witness(problem, seed);
  }
  const double residual = witness_residual(*t, problem);
  if (residual > kWitnessTolerance) {
    throw SearchExhausted("homogeneity_witness: construction residual " + std::to_string(residual));
  }
  return *t;
}

Automorphism bit_symmetry_witness(const Atom& p1, const Atom& q1, const Atom& p2, const Atom& q2,
                                  std::uint64_t seed) {
  if (transition_probability(p1, q1.as_idempotent()) > 1e-9 || transition_probability(p2, q2.as_idempotent()) > 1e-9) {
    throw PreconditionError("bit_symmetry_witness: pairs must be orthogonal");
  }
  return homogeneity_witness(WitnessProblem{p1, q1, p2, q2}, seed);
}

WitnessProblem plant_problem(const AlgebraHandle& algebra, Rng& rng, bool orthogonal) {
  auto [p1, q1] = sample_atom_pair(algebra, orthogonal ? PairKind::Orthogonal : PairKind::Random, rng);
  const Automorphism t0 = random_automorphism(algebra, rng);
  return WitnessProblem{p1, q1, t0.apply(p1), t0.apply(q1)};
}

namespace {

// Permutation exchanging two isomorphic summands.
std::optional<Automorphism> summand_swap(const AlgebraHandle& algebra) {
  const auto& blocks = algebra->blocks();
  if (blocks.size() != 2 || !(blocks[0].algebra->descriptor() == blocks[1].algebra->descriptor())) {
    return std::nullopt;
  }
  const int n = algebra->dimension();
  const int half = blocks[0].algebra->dimension();
  Mat t = Mat::Zero(n, n);
  t.topRightCorner(half, half) = Mat::Identity(half, half);
  t.bottomLeftCorner(half, half) = Mat::Identity(half, half);
  return Automorphism::certify(algebra, t);
}

}  // namespace

ReducibleDemoReport reducible_nonhomogeneity_demo(const AlgebraDescriptor& a1, const AlgebraDescriptor& a2,
                                                  std::uint64_t seed, int samples) {
  if (!a1.is_simple() || a1.is_real_line()) {
    throw PreconditionError("reducible demo: first summand must be simple and different from R");
  }
  ReducibleDemoReport report;
  report.algebra = AlgebraDescriptor::sum({a1, a2});
  const AlgebraHandle alg = JordanAlgebra::build(report.algebra);
  const auto& blocks = alg->blocks();
  const int n = alg->dimension();
  const auto first_dim = static_cast<Eigen::Index>(blocks[0].algebra->dimension());

  Rng rng(seed);
  const Atom p(JordanElement(alg, embed_block(*alg, 0, random_atom(blocks[0].algebra, rng).element().coeffs())));
  const JordanElement unit1(alg, embed_block(*alg, 0, blocks[0].algebra->unit()));
  const Atom q1 = atom_under(Idempotent(unit1 - p.element()), rng);
  const Atom q2(JordanElement(alg, embed_block(*alg, 1, random_atom(blocks[1].algebra, rng).element().coeffs())));
  report.transition_q1 = transition_probability(p, q1.as_idempotent());
  report.transition_q2 = transition_probability(p, q2.as_idempotent());

  const PeirceProjections pp = peirce_projections(p.as_idempotent());
  const std::optional<Automorphism> swap = summand_swap(alg);

  auto stabilizer_element = [&](Rng& r) -> Vec {
    return standard_normal(r) * p.element().coeffs() + pp.zero * alg->random_vector(r);
  };

  report.samples = samples;
  for (int s = 0; s < samples; ++s) {
    Rng r(derive_seed(seed, static_cast<std::uint64_t>(s)));
    Mat t;
    switch (s % 4) {
      case 3: {
        // General flow, composed with the summand swap when one exists.
        t = random_derivation_automorphism(alg, r).matrix();
        if (swap && (s / 4) % 2 == 1) t = swap->matrix() * t;
        break;
      }
      default: {
        Mat d = Mat::Zero(n, n);
        const double scale = 1.0 / n;
        for (int k = 0; k < 2; ++k) d += inner_derivation(*alg, scale * stabilizer_element(r), stabilizer_element(r));
        t = expm(d * n);
        break;
      }
    }
    std::optional<Automorphism> aut;
    try {
      aut = Automorphism::certify(alg, t);
    } catch (const CertificationError&) {
      continue;
    }
    ++report.certified;
    if (distance(aut->apply(p.element()), p) > 1e-8) continue;
    ++report.fixing_p;
    const Vec image = aut->apply(q1.element()).coeffs();
    Vec outside = image;
    outside.head(first_dim).setZero();
    const double leak = alg->norm(outside);
    report.max_leak = std::max(report.max_leak, leak);
    if (leak <= 1e-8) ++report.block_preserved;
    if (distance(aut->apply(q1.element()), q2) <= kWitnessTolerance) ++report.witnesses_found;
  }

  std::vector<std::pair<Vec, Vec>> pairs{{p.element().coeffs(), p.element().coeffs()},
                                         {q1.element().coeffs(), q2.element().coeffs()}};
  report.searches = samples;
  report.search_best_residual = std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    Rng r(derive_seed(~seed, static_cast<std::uint64_t>(s)));
    SearchOptions options;
    options.restarts = 0;
    options.iterations = 20;
    options.include_identity = false;
    Automorphism start = random_derivation_automorphism(alg, r);
    if (swap && s % 2 == 1) start = swap->compose(start);
    options.starts.push_back(start);
    const SearchOutcome search = orbit_search(alg, pairs, r, options);
    if (search.witness) ++report.search_witnesses;
    report.search_best_residual = std::min(report.search_best_residual, search.best_residual);
  }
  report.search_found_witness = report.search_witnesses > 0;

  report.demonstrated = report.fixing_p > 0 && report.witnesses_found == 0 &&
                        report.block_preserved == report.fixing_p && !report.search_found_witness &&
                        report.transition_q1 <= 1e-9 && report.transition_q2 <= 1e-9;
  return report;
}

}  // namespace jordan
