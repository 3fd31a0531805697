#include "jordan/bioct_plane.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "jordan/errors.hpp"

namespace jordan {

BioctMatrix BioctMatrix::identity() {
  BioctMatrix m;
  for (int i = 0; i < 3; ++i) m(i, i) = Bioctonion::one();
  return m;
}

BioctMatrix BioctMatrix::unit(int i) {
  BioctMatrix m;
  m(i, i) = Bioctonion::one();
  return m;
}

BioctMatrix& BioctMatrix::operator+=(const BioctMatrix& o) {
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

BioctMatrix& BioctMatrix::operator-=(const BioctMatrix& o) {
  for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

BioctMatrix& BioctMatrix::operator*=(double s) {
  for (auto& x : e_) x *= s;
  return *this;
}

BioctMatrix scale(std::complex<double> c, const BioctMatrix& x) {
  BioctMatrix out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out(i, j) = scale(c, x(i, j));
  }
  return out;
}

BioctMatrix matrix_product(const BioctMatrix& a, const BioctMatrix& b) {
  BioctMatrix out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

BioctMatrix complex_conjugate(const BioctMatrix& x) {
  BioctMatrix out;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out(i, j) = complex_conjugate(x(i, j));
  }
  return out;
}

double hermiticity_residual(const BioctMatrix& x) {
  double sq = 0.0;
  for (int i = 0; i < 3; ++i) {
    Bioctonion d = x(i, i);
    d.re[0] = 0.0;
    d.im[0] = 0.0;
    sq += euclidean_norm_form(d);
    for (int j = i + 1; j < 3; ++j) sq += euclidean_norm_form(x(j, i) - octonion_conjugate(x(i, j)));
  }
  return std::sqrt(sq);
}

void require_hermitian(const BioctMatrix& x) {
  const double r = hermiticity_residual(x);
  if (r > kHermitianTolerance) throw PreconditionError("matrix is not octonion-Hermitian (residual " + std::to_string(r) + ")");
}

BioctMatrix bioct_jordan_product(const BioctMatrix& x, const BioctMatrix& y) {
  return (matrix_product(x, y) + matrix_product(y, x)) * 0.5;
}

std::complex<double> complex_trace(const BioctMatrix& x) {
  return complex_part(x(0, 0)) + complex_part(x(1, 1)) + complex_part(x(2, 2));
}

double bioct_inner(const BioctMatrix& x, const BioctMatrix& y) {
  require_hermitian(x);
  require_hermitian(y);
  const std::complex<double> t =
      0.5 * (complex_trace(bioct_jordan_product(x, complex_conjugate(y))) +
             complex_trace(bioct_jordan_product(y, complex_conjugate(x))));
  const double scale_ref = std::max(1.0, bioct_norm(x) * bioct_norm(y));
  if (std::abs(t.imag()) > 1e-10 * scale_ref) {
    throw PreconditionError("inner product acquired an imaginary part " + std::to_string(t.imag()));
  }
  return t.real();
}

double entry_pairing(const BioctMatrix& x, const BioctMatrix& y) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) s += real_inner(x(i, j).re, y(i, j).re) + real_inner(x(i, j).im, y(i, j).im);
  }
  return s;
}

double bioct_norm(const BioctMatrix& x) { return std::sqrt(entry_pairing(x, x)); }

BioctMatrix freudenthal_square(const BioctMatrix& x) {
  const BioctMatrix x2 = matrix_product(x, x);
  const double t = complex_trace(x).real();
  const double t2 = complex_trace(x2).real();
  return x2 - x * t - BioctMatrix::identity() * (0.5 * (t2 - t * t));
}

bool is_point(const BioctMatrix& p, double tolerance) {
  if (hermiticity_residual(p) > kHermitianTolerance) return false;
  return std::abs(entry_pairing(p, p) - 1.0) <= tolerance && bioct_norm(freudenthal_square(p)) <= tolerance;
}

std::array<std::complex<double>, 27> plane_coordinates(const BioctMatrix& x) {
  std::array<std::complex<double>, 27> c{};
  for (int i = 0; i < 3; ++i) c[static_cast<std::size_t>(i)] = complex_part(x(i, i));
  std::size_t k = 3;
  for (const auto& [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}}) {
    for (std::size_t u = 0; u < 8; ++u) c[k++] = {x(i, j).re[u], x(i, j).im[u]};
  }
  return c;
}

PlanePoint PlanePoint::certify(const BioctMatrix& p) {
  require_hermitian(p);
  if (!is_point(p)) throw PreconditionError("matrix is not a point of the plane");
  for (const auto& c : plane_coordinates(p)) {
    if (std::abs(c) <= 1e-12) continue;
    const bool negative = std::abs(c.real()) > 1e-12 ? c.real() < 0.0 : c.imag() < 0.0;
    return PlanePoint(negative ? -p : p);
  }
  return PlanePoint(p);
}

bool PlanePoint::operator==(const PlanePoint& o) const {
  return std::min(bioct_norm(p_ - o.p_), bioct_norm(p_ + o.p_)) <= kPointTolerance;
}

const PlanePoint& LogicElement::anchor() const {
  if (!p_) throw PreconditionError("zero and unit carry no anchor point");
  return *p_;
}

LogicElement LogicElement::orthocomplement() const {
  switch (kind_) {
    case Kind::Zero:
      return unit();
    case Kind::Unit:
      return zero();
    case Kind::Point:
      return line(*p_);
    case Kind::Line:
      return point(*p_);
  }
  return zero();
}

bool LogicElement::operator==(const LogicElement& o) const {
  if (kind_ != o.kind_) return false;
  return !p_ || *p_ == *o.p_;
}

LogicElement line_of(const PlanePoint& p) { return LogicElement::line(p); }

bool on_line(const PlanePoint& q, const LogicElement& line) {
  if (line.kind() != LogicElement::Kind::Line) throw PreconditionError("on_line expects a line");
  return std::abs(entry_pairing(line.anchor().representative(), q.representative())) <= kPointTolerance;
}

double state_eval(const PlaneState& state, const LogicElement& v) {
  switch (v.kind()) {
    case LogicElement::Kind::Zero:
      return 0.0;
    case LogicElement::Kind::Unit:
      return 1.0;
    case LogicElement::Kind::Point:
      return plane_transition(state.anchor, v.anchor());
    case LogicElement::Kind::Line:
      return 1.0 - plane_transition(state.anchor, v.anchor());
  }
  return 0.0;
}

TransitionValue plane_transition(const PlanePoint& p, const PlanePoint& q) {
  return TransitionValue(std::abs(entry_pairing(p.representative(), q.representative())));
}

namespace {

// arccos(sqrt(|<p|q>|)) for unit p, q; 1 - |<p|q>| comes from the nearer of
// p - q and p + q so that nearby points keep relative accuracy.
double metric_of(const BioctMatrix& p, const BioctMatrix& q) {
  const double a = std::min(1.0, std::abs(entry_pairing(p, q)));
  const double dm = bioct_norm(p - q);
  const double dp = bioct_norm(p + q);
  const double s = std::clamp(0.5 * std::min(dm, dp) * std::min(dm, dp), 0.0, 1.0);
  return std::atan2(std::sqrt(s), std::sqrt(a));
}

Bioctonion slot_value(const PointParameters& params, int slot, std::size_t& k) {
  Bioctonion v;
  if (slot == params.complex_slot) {
    v.re[0] = params.theta[k++];
    v.im[0] = params.theta[k++];
    return v;
  }
  for (std::size_t u = 0; u < 8; ++u) v.re[u] = params.theta[k++];
  for (std::size_t u = 0; u < 8; ++u) v.im[u] = params.theta[k++];
  return v;
}

BioctMatrix outer(const std::array<Bioctonion, 3>& v) {
  BioctMatrix p;
  for (int i = 0; i < 3; ++i) {
    p(i, i) = Bioctonion::from_complex(complex_norm_form(v[static_cast<std::size_t>(i)]));
    for (int j = i + 1; j < 3; ++j) {
      p(i, j) = v[static_cast<std::size_t>(i)] * octonion_conjugate(v[static_cast<std::size_t>(j)]);
      p(j, i) = octonion_conjugate(p(i, j));
    }
  }
  return p;
}

}  // namespace

double plane_metric(const PlanePoint& p, const PlanePoint& q) {
  return metric_of(p.representative(), q.representative());
}

BioctMatrix point_from_parameters(const PointParameters& params) {
  std::array<Bioctonion, 3> v;
  std::size_t k = 0;
  for (int s = 0; s < 3; ++s) v[static_cast<std::size_t>(s)] = slot_value(params, s, k);
  std::complex<double> b = 0.0;
  for (const auto& x : v) b += complex_norm_form(x);
  if (std::abs(b) > 0.0) {
    const std::complex<double> phase = std::polar(1.0, -0.5 * std::arg(b));
    for (auto& x : v) x = scale(phase, x);
  }
  BioctMatrix p = outer(v);
  const double n = bioct_norm(p);
  if (n > 0.0) p *= 1.0 / n;
  return p;
}

std::optional<PointParameters> parameters_of(const BioctMatrix& p) {
  std::array<int, 3> order{0, 1, 2};
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return std::abs(complex_part(p(a, a))) > std::abs(complex_part(p(b, b))); });
  for (int j : order) {
    const std::complex<double> vj = std::sqrt(complex_part(p(j, j)));
    if (std::abs(vj) < 1e-8) continue;
    PointParameters params;
    params.complex_slot = j;
    std::size_t k = 0;
    for (int i = 0; i < 3; ++i) {
      if (i == j) {
        params.theta[k++] = vj.real();
        params.theta[k++] = vj.imag();
        continue;
      }
      const Bioctonion vi = scale(1.0 / vj, p(i, j));
      for (std::size_t u = 0; u < 8; ++u) params.theta[k++] = vi.re[u];
      for (std::size_t u = 0; u < 8; ++u) params.theta[k++] = vi.im[u];
    }
    const BioctMatrix back = point_from_parameters(params);
    const double n = bioct_norm(p);
    if (n > 0.0 && std::min(bioct_norm(back - p * (1.0 / n)), bioct_norm(back + p * (1.0 / n))) <= 1e-9) {
      return params;
    }
  }
  return std::nullopt;
}

PlanePoint random_point(Rng& rng, PointSampling sampling) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    PointParameters params;
    params.complex_slot = static_cast<int>(rng() % 3);
    std::size_t k = 0;
    for (int s = 0; s < 3; ++s) {
      const std::size_t width = s == params.complex_slot ? 2 : 16;
      for (std::size_t u = 0; u < width; ++u) {
        const bool imaginary = u >= width / 2;
        params.theta[k++] = sampling.real_octonion && imaginary ? 0.0 : standard_normal(rng);
      }
    }
    const BioctMatrix p = point_from_parameters(params);
    if (is_point(p)) return PlanePoint::certify(p);
  }
  throw SearchExhausted("random_point: sampler failed certification");
}

PlanePoint random_point(std::uint64_t seed, PointSampling sampling) {
  Rng rng(seed);
  return random_point(rng, sampling);
}

BioctMatrix embed_matrix(const JordanAlgebra& algebra, const Vec& coeffs, ComplexEmbedding complex_embedding) {
  const auto& d = algebra.descriptor();
  if (d.kind != AlgebraDescriptor::Kind::Matrix || d.n != 3) {
    throw PreconditionError("subplane embedding needs an H(3,K) algebra");
  }
  const HyperMatrix m = to_hyper_matrix(algebra, coeffs);
  const bool tensor = d.field == Field::Complex && complex_embedding == ComplexEmbedding::TensorUnit;
  BioctMatrix x;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const Hypercomplex& h = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      Bioctonion b;
      if (tensor) {
        b.re[0] = h[0];
        b.im[0] = h[1];
      } else {
        for (std::size_t u = 0; u < h.dim(); ++u) b.re[u] = h[u];
      }
      x(i, j) = b;
    }
  }
  return x;
}

PlanePoint subplane_embedding(const Atom& atom) {
  const JordanElement& e = atom.element();
  return PlanePoint::certify(embed_matrix(*e.algebra(), e.coeffs()));
}

Vec restrict_to_octonions(const JordanAlgebra& h3o, const BioctMatrix& x) {
  const auto& d = h3o.descriptor();
  if (d.kind != AlgebraDescriptor::Kind::Matrix || d.n != 3 || d.field != Field::Octonion) {
    throw PreconditionError("restrict_to_octonions needs H(3,O)");
  }
  HyperMatrix m(Field::Octonion, 3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (norm_form(x(i, j).im) > 1e-20) throw PreconditionError("entry has an imaginary tensor component");
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = x(i, j).re;
    }
  }
  return from_hyper_matrix(h3o, m);
}

namespace {

struct HalvingResidual {
  double a;  // d(p,e) - d/2
  double b;  // d(e,q) - d/2
  double sq() const { return a * a + b * b; }
};

class MidpointObjective {
 public:
  MidpointObjective(const BioctMatrix& p, const BioctMatrix& q) : p_(p), q_(q), half_(0.5 * metric_of(p, q)) {}

  HalvingResidual operator()(const PointParameters& x) {
    ++evaluations;
    const BioctMatrix e = point_from_parameters(x);
    return {metric_of(p_, e) - half_, metric_of(e, q_) - half_};
  }

  long evaluations = 0;

 private:
  BioctMatrix p_;
  BioctMatrix q_;
  double half_;
};

// Gauss-Newton on the two halving residuals; the system is underdetermined,
// so the minimum-norm step is used with backtracking on the squared residual.
void descend(MidpointObjective& f, PointParameters& x, HalvingResidual& r, long budget) {
  constexpr double h = 1e-6;
  double step_cap = 1.0;
  while (f.evaluations + 80 < budget && std::sqrt(r.sq()) > 1e-13) {
    Eigen::Matrix<double, 2, 34> jac;
    for (std::size_t k = 0; k < 34; ++k) {
      PointParameters plus = x;
      PointParameters minus = x;
      plus.theta[k] += h;
      minus.theta[k] -= h;
      const HalvingResidual rp = f(plus);
      const HalvingResidual rm = f(minus);
      jac(0, static_cast<Eigen::Index>(k)) = (rp.a - rm.a) / (2 * h);
      jac(1, static_cast<Eigen::Index>(k)) = (rp.b - rm.b) / (2 * h);
    }
    Eigen::Vector2d rv(r.a, r.b);
    Vec delta = solve_min_norm(jac, -rv);
    double xn = 0.0;
    for (double t : x.theta) xn += t * t;
    const double limit = step_cap * std::max(1.0, std::sqrt(xn));
    if (delta.norm() > limit) delta *= limit / delta.norm();
    bool accepted = false;
    for (double t = 1.0; t > 1e-6; t *= 0.5) {
      PointParameters trial = x;
      for (std::size_t k = 0; k < 34; ++k) trial.theta[k] += t * delta[static_cast<Eigen::Index>(k)];
      const HalvingResidual rt = f(trial);
      if (rt.sq() < r.sq()) {
        x = trial;
        r = rt;
        accepted = true;
        break;
      }
    }
    if (!accepted) return;
  }
}

}  // namespace

PlaneMidpointResult plane_midpoint_search(const PlanePoint& p, const PlanePoint& q, Rng& rng, long budget,
                                          const std::optional<PlanePoint>& seed) {
  const BioctMatrix& pm = p.representative();
  const BioctMatrix& qm = q.representative();
  if (p == q) return {p, 0.0, 0.0, 0};
  MidpointObjective f(pm, qm);

  std::optional<PointParameters> best;
  double best_sq = std::numeric_limits<double>::infinity();
  auto run = [&](PointParameters x) {
    HalvingResidual r = f(x);
    descend(f, x, r, std::min(budget, f.evaluations + budget / 4));
    if (r.sq() < best_sq && is_point(point_from_parameters(x))) {
      best_sq = r.sq();
      best = x;
    }
  };

  if (seed) {
    if (auto x = parameters_of(seed->representative())) run(*x);
  }
  for (const PlanePoint* end : {&p, &q}) {
    if (best_sq <= 1e-26 || f.evaluations + 100 >= budget) break;
    if (auto x = parameters_of(end->representative())) {
      // nudge off the endpoint, where the metric is not smooth
      for (double& t : x->theta) t += 0.1 * standard_normal(rng);
      run(*x);
    }
  }
  while (best_sq > 1e-26 && f.evaluations + 100 < budget) {
    std::optional<PointParameters> x = parameters_of(random_point(rng).representative());
    if (x) run(*x);
  }
  if (!best) throw SearchExhausted("plane_midpoint_search: no certified candidate within budget");

  const PlanePoint e = PlanePoint::certify(point_from_parameters(*best));
  const double d = plane_metric(p, q);
  const double dpe = plane_metric(p, e);
  const double deq = plane_metric(e, q);
  return {e, std::max(std::abs(dpe - d / 2), std::abs(deq - d / 2)), std::abs(dpe + deq - d), f.evaluations};
}

FormalRealityWitness formal_reality_counterexample(Rng& rng, int budget) {
  FormalRealityWitness w;
  for (w.tried = 1; w.tried <= budget; ++w.tried) {
    BioctMatrix x;
    for (int i = 0; i < 3; ++i) {
      x(i, i) = Bioctonion::from_complex({0.3 * standard_normal(rng), standard_normal(rng)});
    }
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        // u + i w with |u| = |w| and u orthogonal to w has vanishing norm form
        Bioctonion z;
        for (std::size_t k = 0; k < 8; ++k) z.re[k] = standard_normal(rng);
        for (std::size_t k = 0; k < 8; ++k) z.im[k] = standard_normal(rng);
        z.im -= z.re * (real_inner(z.re, z.im) / norm_form(z.re));
        z.im *= abs(z.re) / abs(z.im);
        x(i, j) = z;
        x(j, i) = octonion_conjugate(z);
      }
    }
    const double t = complex_trace(bioct_jordan_product(x, x)).real();
    if (t <= 0.0) {
      w.found = true;
      w.x = x;
      w.trace_square = t;
      w.norm = bioct_norm(x);
      return w;
    }
  }
  w.tried = budget;
  return w;
}

}  // namespace jordan
