#include "jordan/algebra.hpp"

#include <cmath>
#include <map>
#include <tuple>

#include "jordan/errors.hpp"

namespace jordan {

namespace {

struct SignedUnit {
  int sign;
  int index;
};

SignedUnit unit_conjugate(SignedUnit u) { return {u.index == 0 ? u.sign : -u.sign, u.index}; }

SignedUnit unit_product(SignedUnit a, SignedUnit b) {
  const UnitProduct& p = unit_table()[static_cast<std::size_t>(a.index)][static_cast<std::size_t>(b.index)];
  return {a.sign * b.sign * p.sign, static_cast<int>(p.index)};
}

// Accumulates structure constants, merging duplicates so the tensor stays sparse.
class TensorBuilder {
 public:
  void add(int i, int j, int k, double c) { acc_[{i, j, k}] += c; }
  void add_symmetric(int i, int j, int k, double c) {
    add(i, j, k, c);
    if (i != j) add(j, i, k, c);
  }
  std::vector<StructureEntry> finish() const {
    std::vector<StructureEntry> out;
    out.reserve(acc_.size());
    for (const auto& [key, c] : acc_) {
      if (c != 0.0) out.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), c});
    }
    return out;
  }

 private:
  std::map<std::tuple<int, int, int>, double> acc_;
};

class MatrixIndex {
 public:
  MatrixIndex(int n, int d) : n_(n), d_(d) {}
  int diag(int i) const { return i; }
  // Basis index of X_ab^u for a < b.
  int off(int a, int b, int u) const {
    int pair = 0;
    for (int i = 0; i < a; ++i) pair += n_ - 1 - i;
    pair += b - a - 1;
    return n_ + pair * d_ + u;
  }

 private:
  int n_;
  int d_;
};

}  // namespace

AlgebraHandle JordanAlgebra::build(const AlgebraDescriptor& descriptor) {
  validate(descriptor);
  std::shared_ptr<JordanAlgebra> alg(new JordanAlgebra());
  alg->desc_ = descriptor;
  const int dim = descriptor.dimension();
  alg->unit_ = Vec::Zero(dim);
  alg->trace_ = Vec::Zero(dim);
  TensorBuilder t;

  switch (descriptor.kind) {
    case AlgebraDescriptor::Kind::Spin: {
      const int n = descriptor.n;
      alg->labels_.push_back("1");
      for (int i = 1; i <= n; ++i) alg->labels_.push_back("f" + std::to_string(i));
      t.add(0, 0, 0, 1.0);
      for (int i = 1; i <= n; ++i) {
        t.add_symmetric(0, i, i, 1.0);
        t.add(i, i, 0, 1.0);
      }
      alg->unit_[0] = 1.0;
      alg->trace_[0] = 2.0;
      break;
    }
    case AlgebraDescriptor::Kind::Matrix: {
      const int n = descriptor.n;
      const int d = static_cast<int>(field_dimension(descriptor.field));
      const MatrixIndex idx(n, d);
      for (int i = 0; i < n; ++i) {
        alg->labels_.push_back("E" + std::to_string(i + 1) + std::to_string(i + 1));
        alg->roles_.push_back({i, i, 0});
        alg->unit_[i] = 1.0;
        alg->trace_[i] = 1.0;
      }
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          for (int u = 0; u < d; ++u) {
            alg->labels_.push_back("X" + std::to_string(a + 1) + std::to_string(b + 1) + ".e" + std::to_string(u));
            alg->roles_.push_back({a, b, u});
          }
        }
      }
      // Y(x, y, w) for x != y names the basis vector carrying w at (x, y).
      auto y_index = [&](int x, int y, SignedUnit w) -> SignedUnit {
        if (x < y) return {w.sign, idx.off(x, y, w.index)};
        const SignedUnit c = unit_conjugate(w);
        return {c.sign, idx.off(y, x, c.index)};
      };

      for (int i = 0; i < n; ++i) t.add(idx.diag(i), idx.diag(i), idx.diag(i), 1.0);
      for (int i = 0; i < n; ++i) {
        for (int a = 0; a < n; ++a) {
          for (int b = a + 1; b < n; ++b) {
            if (i != a && i != b) continue;
            for (int u = 0; u < d; ++u) t.add_symmetric(idx.diag(i), idx.off(a, b, u), idx.off(a, b, u), 0.5);
          }
        }
      }
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          for (int u = 0; u < d; ++u) {
            // Same position: X^u o X^v = <u, v> (E_aa + E_bb).
            t.add(idx.off(a, b, u), idx.off(a, b, u), idx.diag(a), 1.0);
            t.add(idx.off(a, b, u), idx.off(a, b, u), idx.diag(b), 1.0);
            for (int c = 0; c < n; ++c) {
              for (int e = c + 1; e < n; ++e) {
                const bool share_a = (c == a || e == a);
                const bool share_b = (c == b || e == b);
                if (share_a == share_b) continue;  // disjoint or identical position
                const int m = share_a ? a : b;
                const int x = share_a ? b : a;
                const int y = (c == m) ? e : c;
                for (int v = 0; v < d; ++v) {
                  // First factor as Y(x, m, u'), second as Y(m, y, v').
                  const SignedUnit u1 = (x == a) ? SignedUnit{1, u} : unit_conjugate({1, u});
                  const SignedUnit v1 = (m == c) ? SignedUnit{1, v} : unit_conjugate({1, v});
                  const SignedUnit w = unit_product(u1, v1);
                  const SignedUnit target = y_index(x, y, w);
                  t.add(idx.off(a, b, u), idx.off(c, e, v), target.index, 0.5 * target.sign);
                }
              }
            }
          }
        }
      }
      break;
    }
    case AlgebraDescriptor::Kind::Sum: {
      std::size_t offset = 0;
      for (std::size_t s = 0; s < descriptor.summands.size(); ++s) {
        AlgebraHandle part = build(descriptor.summands[s]);
        const int off = static_cast<int>(offset);
        for (const auto& e : part->structure()) t.add(e.i + off, e.j + off, e.k + off, e.c);
        for (const auto& label : part->labels()) alg->labels_.push_back("s" + std::to_string(s + 1) + ":" + label);
        alg->unit_.segment(off, part->dimension()) = part->unit();
        alg->trace_.segment(off, part->dimension()) = part->trace_functional();
        alg->blocks_.push_back({offset, part});
        offset += static_cast<std::size_t>(part->dimension());
      }
      break;
    }
  }
  alg->entries_ = t.finish();
  alg->finalize();
  return alg;
}

void JordanAlgebra::finalize() {
  const int dim = dimension();
  weights_ = Vec::Zero(dim);
  for (const auto& e : entries_) {
    if (e.i == e.j) weights_[e.i] += e.c * trace_[e.k];
  }
}

Vec JordanAlgebra::product(const Vec& a, const Vec& b) const {
  Vec out = Vec::Zero(dimension());
  for (const auto& e : entries_) out[e.k] += e.c * a[e.i] * b[e.j];
  return out;
}

Mat JordanAlgebra::left_multiplication(const Vec& a) const {
  Mat out = Mat::Zero(dimension(), dimension());
  for (const auto& e : entries_) out(e.k, e.j) += e.c * a[e.i];
  return out;
}

Mat JordanAlgebra::quadratic_representation(const Vec& x) const {
  const Mat lx = left_multiplication(x);
  return 2.0 * lx * lx - left_multiplication(product(x, x));
}

double JordanAlgebra::norm(const Vec& a) const { return std::sqrt(std::max(0.0, inner(a, a))); }

Vec JordanAlgebra::basis_vector(int k) const {
  Vec v = Vec::Zero(dimension());
  v[k] = 1.0;
  return v;
}

std::size_t JordanAlgebra::block_of(int k) const {
  if (blocks_.empty()) return 0;
  for (std::size_t b = blocks_.size(); b-- > 0;) {
    if (static_cast<std::size_t>(k) >= blocks_[b].offset) return b;
  }
  return 0;
}

Vec JordanAlgebra::random_vector(Rng& rng) const {
  Vec v(dimension());
  for (int k = 0; k < dimension(); ++k) v[k] = standard_normal(rng) / std::sqrt(weights_[k]);
  return v;
}

JordanElement::JordanElement(AlgebraHandle algebra, Vec coeffs) : alg_(std::move(algebra)), c_(std::move(coeffs)) {
  if (!alg_) throw PreconditionError("element without an algebra");
  if (c_.size() != alg_->dimension()) throw DimensionError("coefficient vector length differs from algebra dimension");
}

JordanElement JordanElement::zero(const AlgebraHandle& algebra) {
  return {algebra, Vec::Zero(algebra->dimension())};
}

JordanElement JordanElement::unit(const AlgebraHandle& algebra) { return {algebra, algebra->unit()}; }

JordanElement JordanElement::basis(const AlgebraHandle& algebra, int k) { return {algebra, algebra->basis_vector(k)}; }

JordanElement& JordanElement::operator+=(const JordanElement& o) {
  require_same_algebra(*this, o);
  c_ += o.c_;
  return *this;
}

JordanElement& JordanElement::operator-=(const JordanElement& o) {
  require_same_algebra(*this, o);
  c_ -= o.c_;
  return *this;
}

JordanElement& JordanElement::operator*=(double s) {
  c_ *= s;
  return *this;
}

void require_same_algebra(const JordanElement& a, const JordanElement& b) {
  if (a.algebra() != b.algebra()) throw AlgebraMismatch("elements belong to different algebras");
}

JordanElement jordan_product(const JordanElement& a, const JordanElement& b) {
  require_same_algebra(a, b);
  return {a.algebra(), a.algebra()->product(a.coeffs(), b.coeffs())};
}

JordanElement square(const JordanElement& a) { return jordan_product(a, a); }

JordanElement triple_product(const JordanElement& x, const JordanElement& y) {
  require_same_algebra(x, y);
  return 2.0 * jordan_product(x, jordan_product(x, y)) - jordan_product(square(x), y);
}

double trace(const JordanElement& a) { return a.algebra()->trace(a.coeffs()); }

double inner(const JordanElement& a, const JordanElement& b) {
  require_same_algebra(a, b);
  return a.algebra()->inner(a.coeffs(), b.coeffs());
}

double norm(const JordanElement& a) { return a.algebra()->norm(a.coeffs()); }

double distance(const JordanElement& a, const JordanElement& b) { return norm(a - b); }

bool is_idempotent(const JordanElement& a, double tolerance) { return distance(square(a), a) <= tolerance; }

bool is_atom(const JordanElement& a, double tolerance) {
  if (!is_idempotent(a, tolerance)) return false;
  if (norm(a) < 0.5) return false;  // non-zero idempotents have norm >= 1
  const JordanAlgebra& alg = *a.algebra();
  const Vec s = alg.weights().cwiseSqrt();
  // Conjugate to orthonormal coordinates so singular values are basis independent.
  const Mat u = s.asDiagonal() * alg.quadratic_representation(a.coeffs()) * s.cwiseInverse().asDiagonal();
  return numerical_rank(u, tol::kRankCutoff) == 1;
}

Idempotent::Idempotent(JordanElement a) : e_(std::move(a)) {
  if (!is_idempotent(e_)) throw PreconditionError("element is not idempotent");
}

Atom::Atom(JordanElement a) : e_(std::move(a)) {
  if (!is_atom(e_)) throw PreconditionError("element is not an atom");
}

std::optional<Atom> Atom::try_make(JordanElement a) {
  if (!is_atom(a)) return std::nullopt;
  return Atom(std::move(a), Unchecked{});
}

Mat inner_derivation(const JordanAlgebra& algebra, const Vec& a, const Vec& b) {
  const Mat la = algebra.left_multiplication(a);
  const Mat lb = algebra.left_multiplication(b);
  return la * lb - lb * la;
}

Vec embed_block(const JordanAlgebra& algebra, std::size_t block, const Vec& local) {
  const auto& blk = algebra.blocks().at(block);
  Vec out = Vec::Zero(algebra.dimension());
  out.segment(static_cast<Eigen::Index>(blk.offset), local.size()) = local;
  return out;
}

HyperMatrix to_hyper_matrix(const JordanAlgebra& algebra, const Vec& coeffs) {
  const auto& d = algebra.descriptor();
  if (d.kind != AlgebraDescriptor::Kind::Matrix) throw PreconditionError("matrix model requires an H(n,K) algebra");
  HyperMatrix m(d.field, static_cast<std::size_t>(d.n), static_cast<std::size_t>(d.n));
  const auto& roles = algebra.matrix_roles();
  for (std::size_t k = 0; k < roles.size(); ++k) {
    const auto r = roles[k];
    const auto row = static_cast<std::size_t>(r.row);
    const auto col = static_cast<std::size_t>(r.col);
    if (r.row == r.col) {
      m(row, row)[0] += coeffs[static_cast<Eigen::Index>(k)];
    } else {
      m(row, col)[static_cast<std::size_t>(r.unit)] += coeffs[static_cast<Eigen::Index>(k)];
      const Hypercomplex c = conjugate(Hypercomplex::unit(d.field, static_cast<std::size_t>(r.unit)));
      m(col, row) += c * coeffs[static_cast<Eigen::Index>(k)];
    }
  }
  return m;
}

Vec from_hyper_matrix(const JordanAlgebra& algebra, const HyperMatrix& m) {
  const auto& d = algebra.descriptor();
  if (d.kind != AlgebraDescriptor::Kind::Matrix) throw PreconditionError("matrix model requires an H(n,K) algebra");
  if (m.rows() != static_cast<std::size_t>(d.n) || m.cols() != m.rows() || m.field() != d.field) {
    throw DimensionError("matrix does not match the algebra's model");
  }
  const HyperMatrix h = (m + m.adjoint()) * 0.5;
  const auto& roles = algebra.matrix_roles();
  Vec out(algebra.dimension());
  for (std::size_t k = 0; k < roles.size(); ++k) {
    const auto r = roles[k];
    out[static_cast<Eigen::Index>(k)] =
        h(static_cast<std::size_t>(r.row), static_cast<std::size_t>(r.col))[static_cast<std::size_t>(r.unit)];
  }
  return out;
}

namespace {

Vec random_rank_one(const JordanAlgebra& alg, Rng& rng) {
  const auto& d = alg.descriptor();
  const auto n = static_cast<std::size_t>(d.n);
  HyperMatrix v(d.field, n, 1);
  // Octonionic rank-one projections need associating entries: keep one slot real.
  const std::size_t real_slot =
      d.field == Field::Octonion ? std::uniform_int_distribution<std::size_t>(0, n - 1)(rng) : n;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t coords = (i == real_slot) ? 1 : v(i, 0).dim();
    for (std::size_t c = 0; c < coords; ++c) v(i, 0)[c] = standard_normal(rng);
  }
  v *= 1.0 / std::sqrt(v.frobenius_norm_sq());
  return from_hyper_matrix(alg, v * v.adjoint());
}

Vec random_atom_coeffs(const JordanAlgebra& alg, Rng& rng) {
  const auto& d = alg.descriptor();
  switch (d.kind) {
    case AlgebraDescriptor::Kind::Spin: {
      Vec u(d.n);
      for (int i = 0; i < d.n; ++i) u[i] = standard_normal(rng);
      u.normalize();
      Vec p(d.n + 1);
      p[0] = 0.5;
      p.tail(d.n) = 0.5 * u;
      return p;
    }
    case AlgebraDescriptor::Kind::Matrix: {
      Vec p = random_rank_one(alg, rng);
      if (d.field == Field::Octonion) {
        // Mix with a random automorphism exp(sum of inner derivations).
        const double scale = 1.0 / alg.dimension();
        Mat der = Mat::Zero(alg.dimension(), alg.dimension());
        for (int k = 0; k < 3; ++k) {
          der += inner_derivation(alg, scale * alg.random_vector(rng), alg.random_vector(rng));
        }
        p = expm(der) * p;
      }
      return p;
    }
    case AlgebraDescriptor::Kind::Sum: {
      const auto& blocks = alg.blocks();
      const std::size_t b = std::uniform_int_distribution<std::size_t>(0, blocks.size() - 1)(rng);
      return embed_block(alg, b, random_atom_coeffs(*blocks[b].algebra, rng));
    }
  }
  return {};
}

}  // namespace

Atom random_atom(const AlgebraHandle& algebra, Rng& rng) {
  for (int attempt = 0; attempt < 16; ++attempt) {
    auto atom = Atom::try_make(JordanElement(algebra, random_atom_coeffs(*algebra, rng)));
    if (atom) return *atom;
  }
  throw SearchExhausted("random_atom: sampler failed certification");
}

Atom random_atom(const AlgebraHandle& algebra, std::uint64_t seed) {
  Rng rng(seed);
  return random_atom(algebra, rng);
}

}  // namespace jordan
