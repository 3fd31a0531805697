#include "jordan/transition.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jordan/errors.hpp"
#include "jordan/spectral.hpp"

namespace jordan {

namespace {

constexpr double kClampSlack = 1e-9;

double clamp_unit(double v, const char* what) {
  if (v < -kClampSlack || v > 1.0 + kClampSlack || std::isnan(v)) {
    throw PreconditionError(std::string(what) + " outside [0, 1]: " + std::to_string(v));
  }
  return std::clamp(v, 0.0, 1.0);
}

double pair_transition(const JordanElement& p, const JordanElement& q) {
  return std::clamp(trace(jordan_product(p, q)), 0.0, 1.0);
}

// (sqrt(c), sqrt(1 - c)) for atoms p, q with c = trace(p o q). Near c = 0 the
// root is read off the Peirce-1/2 part of q, ||q_half||^2 = 2 c (1 - c), which
// has absolute rather than square-root error.
std::pair<double, double> transition_roots(const Atom& p, const Atom& q) {
  const double s = separation(p, q);
  const double c = pair_transition(p, q);
  if (c >= 0.5) return {std::sqrt(c), std::sqrt(s)};
  const Vec half = peirce_projections(p.as_idempotent()).half * q.element().coeffs();
  const double root = std::min(1.0, p.element().algebra()->norm(half) / std::sqrt(2.0 * s));
  return {root, std::sqrt(s)};
}

JordanElement purify(JordanElement e) {
  for (int it = 0; it < 3 && !is_idempotent(e, 1e-14); ++it) {
    const JordanElement e2 = square(e);
    e = 3.0 * e2 - 2.0 * jordan_product(e, e2);
  }
  return e;
}

}  // namespace

TransitionValue::TransitionValue(double v) : v_(clamp_unit(v, "transition value")) {}

MetricValue::MetricValue(double v) : v_(clamp_unit(v, "metric value")) {}

TransitionValue transition_probability(const Atom& p, const Idempotent& q) {
  require_same_algebra(p, q);
  return TransitionValue(trace(jordan_product(p, q)));
}

std::optional<TransitionValue> transition_exists(const Idempotent& p, const Idempotent& q) {
  require_same_algebra(p, q);
  const JordanElement& pe = p.element();
  const JordanElement t = triple_product(pe, q.element());
  const double pp = inner(pe, pe);
  if (pp <= 0.0) return std::nullopt;
  const double s = inner(t, pe) / pp;
  if (norm(t - s * pe) > 1e-8 * std::sqrt(pp)) return std::nullopt;
  return TransitionValue(s);
}

double separation(const Atom& p, const Atom& q) {
  require_same_algebra(p, q);
  const double d = distance(p, q);
  return std::clamp(0.5 * d * d, 0.0, 1.0);
}

MetricValue geodesic_distance(const Atom& p, const Atom& q) {
  require_same_algebra(p, q);
  const auto [rc, rs] = transition_roots(p, q);
  return MetricValue(2.0 / std::numbers::pi * std::atan2(rs, rc));
}

JordanElement find_symmetry(const Atom& p, const Atom& q, Rng& rng) {
  require_same_algebra(p, q);
  if (std::abs(trace(jordan_product(p, q))) > 1e-9) throw PreconditionError("find_symmetry: atoms are not orthogonal");
  const JordanAlgebra& alg = *p.element().algebra();
  const Mat project = peirce_projections(p.as_idempotent()).half * peirce_projections(q.as_idempotent()).half;
  const JordanElement target = p.element() + q.element();
  for (int attempt = 0; attempt < 32; ++attempt) {
    const Vec x = alg.random_vector(rng);
    Vec v = project * x;
    const double nv = alg.norm(v);
    if (nv <= 1e-8 * alg.norm(x)) continue;
    v *= std::sqrt(2.0) / nv;  // trace(v o v) = 2
    JordanElement sym(p.element().algebra(), v);
    if (distance(square(sym), target) <= 1e-9) return sym;
  }
  throw NoSymmetryError("find_symmetry: joint Peirce space carries no symmetry (atoms in different summands?)");
}

Atom midpoint(const Atom& p, const Atom& q, Rng& rng) {
  require_same_algebra(p, q);
  const double c = pair_transition(p, q);
  const double s = separation(p, q);
  if (s <= kEqualSeparation) return p;
  const AlgebraHandle& alg = p.element().algebra();

  if (c >= 0.5) {
    const double root = std::sqrt(c);
    JordanElement e = (p.element() + q.element() + (2.0 / root) * jordan_product(p, q)) / (2.0 + 2.0 * root);
    return Atom(purify(std::move(e)));
  }

  // Peirce frame of the pair: q = c p + sqrt(c s) v + s p' with p' = q_0 / s
  // and v a symmetry between p and p'; the midpoint is the half-angle atom.
  const PeirceProjections pp = peirce_projections(p.as_idempotent());
  const Vec& qc = q.element().coeffs();
  JordanElement complement(alg, pp.zero * qc / s);
  std::optional<Atom> p_perp = Atom::try_make(purify(std::move(complement)));
  if (!p_perp) throw NoMidpointError("midpoint: Peirce-0 part of q is not an atom");

  const Mat joint = peirce_projections(p_perp->as_idempotent()).half * pp.half;
  Vec v = joint * qc;
  const double nv = alg->norm(v);
  JordanElement sym = JordanElement::zero(alg);
  if (nv > 1e-14) {
    sym = JordanElement(alg, v * (std::sqrt(2.0) / nv));
  } else {
    try {
      sym = find_symmetry(p, *p_perp, rng);
    } catch (const NoSymmetryError& err) {
      throw NoMidpointError(std::string("midpoint: ") + err.what());
    }
  }
  const auto [rc, rs] = transition_roots(p, q);
  const double half = 0.5 * std::atan2(rs, rc);
  const double ch = std::cos(half);
  const double sh = std::sin(half);
  return Atom(purify(ch * ch * p.element() + sh * sh * p_perp->element() + sh * ch * sym));
}

std::pair<Atom, Atom> sample_atom_pair(const AlgebraHandle& algebra, PairKind kind, Rng& rng) {
  Atom p = random_atom(algebra, rng);
  switch (kind) {
    case PairKind::Random:
      return {p, random_atom(algebra, rng)};
    case PairKind::Orthogonal: {
      Atom q = atom_under(Idempotent(JordanElement::unit(algebra) - p.element()), rng);
      return {p, q};
    }
    case PairKind::NearEqual: {
      const JordanAlgebra& alg = *algebra;
      const double eps = 1e-5 / alg.dimension();
      const Mat t = expm(inner_derivation(alg, eps * alg.random_vector(rng), alg.random_vector(rng)));
      Atom q(JordanElement(algebra, t * p.element().coeffs()));
      return {p, q};
    }
  }
  return {p, p};
}

ConvexityRecord check_midpoint(const Atom& p, const Atom& q, Rng& rng, std::uint64_t trial) {
  const Atom e = midpoint(p, q, rng);
  ConvexityRecord r{};
  r.trial = trial;
  r.transition = pair_transition(p, q);
  r.d_pq = geodesic_distance(p, q);
  r.d_pe = geodesic_distance(p, e);
  r.d_eq = geodesic_distance(e, q);
  r.between_defect = std::abs(r.d_pe + r.d_eq - r.d_pq);
  r.halving_defect = std::max(std::abs(r.d_pe - r.d_pq / 2), std::abs(r.d_eq - r.d_pq / 2));
  r.atom_residual = distance(square(e), e);
  return r;
}

ConvexityReport convexity_check(const AlgebraHandle& algebra, int trials, std::uint64_t seed, PairKind kind) {
  if (!algebra->is_simple()) throw PreconditionError("convexity_check requires a simple algebra");
  ConvexityReport report;
  for (int t = 0; t < trials; ++t) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(t)));
    const auto [p, q] = sample_atom_pair(algebra, kind, rng);
    const ConvexityRecord r = check_midpoint(p, q, rng, static_cast<std::uint64_t>(t));
    report.max_between_defect = std::max(report.max_between_defect, r.between_defect);
    report.max_halving_defect = std::max(report.max_halving_defect, r.halving_defect);
    report.max_atom_residual = std::max(report.max_atom_residual, r.atom_residual);
    report.records.push_back(r);
  }
  return report;
}

}  // namespace jordan
