#include "pqh/subspace.hpp"

#include "pqh/error.hpp"

namespace pqh {

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::span(Matrix m) {
  Subspace s;
  s.ambient_ = m.cols();
  auto ech = kernels::rref(std::move(m));
  s.basis_ = std::move(ech.reduced);
  if (s.basis_.cols() != s.ambient_) s.basis_ = Matrix(0, s.ambient_);
  s.pivots_ = std::move(ech.pivots);
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vs) {
  Matrix m(0, ambient);
  for (const auto& v : vs) {
    if (v.coords().size() != ambient) throw InvariantError("subspace: vector dimension mismatch");
    m.append_row(v.coords());
  }
  return span(std::move(m));
}

Subspace Subspace::whole(std::size_t ambient) { return span(Matrix::identity(ambient)); }

std::vector<Rational> Subspace::residual(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw InvariantError("subspace: vector dimension mismatch");
  std::vector<Rational> r(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    const Rational c = r[pivots_[i]];
    if (sgn(c) == 0) continue;
    const auto row = basis_.row(i);
    for (std::size_t j = 0; j < ambient_; ++j)
      if (sgn(row[j]) != 0) r[j] -= c * row[j];
  }
  return r;
}

bool Subspace::contains(std::span<const Rational> v) const {
  for (const auto& x : residual(v))
    if (sgn(x) != 0) return false;
  return true;
}

std::vector<Rational> Subspace::coordinates(std::span<const Rational> v) const {
  std::vector<Rational> c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

namespace {

void check_ambient(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw InvariantError("subspace: ambient dimension mismatch");
}

Matrix apply_rows(const Matrix& m, const Matrix& rows) {
  // rows * m^T: each row x becomes (m x)^T.
  return kernels::matmul(rows, m.transpose());
}

} // namespace

Subspace sum(const Subspace& a, const Subspace& b) {
  check_ambient(a, b);
  return Subspace::span(vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  check_ambient(a, b);
  if (a.is_zero() || b.is_zero()) return Subspace(a.ambient());
  // (c, d) with c A + d B = 0 gives c A in both.
  const Matrix rel = kernels::left_nullspace(vstack(a.basis(), b.basis()));
  Matrix out(0, a.ambient());
  for (std::size_t r = 0; r < rel.rows(); ++r) {
    std::vector<Rational> c(rel.row(r).begin(), rel.row(r).begin() + static_cast<std::ptrdiff_t>(a.dim()));
    out.append_row(row_times(c, a.basis()));
  }
  return Subspace::span(std::move(out));
}

bool contains(const Subspace& u, const Subspace& w) {
  check_ambient(u, w);
  for (std::size_t i = 0; i < w.dim(); ++i)
    if (!u.contains(w.basis().row(i))) return false;
  return true;
}

Subspace image(const Matrix& m, const Subspace& u) {
  if (m.cols() != u.ambient()) throw InvariantError("image: dimension mismatch");
  if (u.is_zero()) return Subspace(m.rows());
  return Subspace::span(apply_rows(m, u.basis()));
}

Subspace preimage(const Matrix& m, const Subspace& w) {
  if (m.rows() != w.ambient()) throw InvariantError("preimage: dimension mismatch");
  // Annihilator rows y with y . w = 0 for all w in W.
  const Matrix ann = w.is_zero() ? Matrix::identity(w.ambient()) : kernels::nullspace(w.basis());
  if (ann.rows() == 0) return Subspace::whole(m.cols());
  return Subspace::span(kernels::nullspace(kernels::matmul(ann, m)));
}

Subspace image(const Operator& a, const Subspace& u) {
  return image(operator_matrix(a, u.ambient() / 4), u);
}

Subspace echelon_complement(const Subspace& u, const Subspace& w) {
  check_ambient(u, w);
  Subspace acc = w;
  Matrix kept(0, u.ambient());
  for (std::size_t i = 0; i < u.dim(); ++i) {
    const auto row = u.basis().row(i);
    if (acc.contains(row)) continue;
    kept.append_row(row);
    acc = sum(acc, Subspace::span(Matrix::from_rows({u.basis().row_vector(i)}, u.ambient())));
  }
  if (acc.dim() != u.dim()) throw InvariantError("echelon_complement: subspace is not contained");
  return Subspace::span(std::move(kept));
}

Subspace tensor(const std::array<Rational, 2>& h, const Subspace& f_space) {
  Matrix m(0, 2 * f_space.ambient());
  for (std::size_t i = 0; i < f_space.dim(); ++i) m.append_row(Vector::decomposable(h, f_space.basis().row(i)).coords());
  return Subspace::span(std::move(m));
}

Subspace tensor_h(const Subspace& f_space) {
  return sum(tensor({1, 0}, f_space), tensor({0, 1}, f_space));
}

Subspace fiber(const Subspace& u, const std::array<Rational, 2>& h) {
  const std::size_t d = u.ambient() / 2;
  // Map e -> h (x) e as a (2d x d) matrix, then pull u back.
  Matrix m(2 * d, d);
  for (std::size_t i = 0; i < d; ++i) {
    m(i, i) = h[0];
    m(d + i, i) = h[1];
  }
  return preimage(m, u);
}

P1P2 p1p2(const Subspace& u, const HBasisChange& basis) {
  const std::size_t d = u.ambient() / 2;
  Matrix a(0, d), b(0, d);
  for (std::size_t i = 0; i < u.dim(); ++i) {
    const Vector x = to_basis(basis, u.vector(i));
    a.append_row(x.h1_part());
    b.append_row(x.h2_part());
  }
  return {Subspace::span(std::move(a)), Subspace::span(std::move(b))};
}

Matrix gram(const ModelSpace& space, const Subspace& u) {
  if (u.ambient() != space.dim()) throw InvariantError("gram: subspace does not belong to the model space");
  const Matrix& b = u.basis();
  return kernels::matmul(kernels::matmul(b, space.gram()), b.transpose());
}

SignatureTriple signature(const ModelSpace& space, const Subspace& u) { return kernels::inertia(gram(space, u)); }

Subspace ortho_complement(const ModelSpace& space, const Subspace& u) {
  if (u.ambient() != space.dim()) throw InvariantError("ortho_complement: subspace does not belong to the model space");
  if (u.is_zero()) return Subspace::whole(space.dim());
  return Subspace::span(kernels::nullspace(kernels::matmul(u.basis(), space.gram())));
}

Subspace maximal_pq(const Subspace& u) {
  Subspace r = u;
  for (const Operator& a : {Operator::I(), Operator::J(), Operator::K()}) r = intersect(r, image(a, u));
  return r;
}

Subspace maximal_invariant_subspace(const Operator& a, const Subspace& u) {
  const Matrix m = operator_matrix(a, u.ambient() / 4);
  if (sgn(a.q()) != 0) return intersect(u, preimage(m, u));
  Subspace w = u;
  for (;;) {
    Subspace next = intersect(w, preimage(m, w));
    if (next.dim() == w.dim()) return w;
    w = std::move(next);
  }
}

} // namespace pqh
