#pragma once

#include "pqh/kernels.hpp"
#include "pqh/model.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace pqh {

/// Linear subspace of Q^N stored by its reduced row echelon basis, so two
/// subspaces are equal iff their bases are equal.
class Subspace {
public:
  Subspace() = default;
  /// The zero subspace of Q^ambient.
  explicit Subspace(std::size_t ambient);
  /// Span of the rows of m.
  static Subspace span(Matrix m);
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vs);
  static Subspace whole(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  /// RREF rows; row i has its pivot at pivots()[i].
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector vector(std::size_t i) const { return Vector(basis_.row_vector(i)); }

  /// v minus its reduction by the basis; zero iff v lies in the subspace.
  std::vector<Rational> residual(std::span<const Rational> v) const;
  bool contains(std::span<const Rational> v) const;
  /// Coordinates of v (assumed to lie in the subspace) in the RREF basis.
  std::vector<Rational> coordinates(std::span<const Rational> v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

using SignatureTriple = kernels::Inertia;

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
bool contains(const Subspace& u, const Subspace& w);

/// m (applied to column vectors) restricted to u.
Subspace image(const Matrix& m, const Subspace& u);
/// {x : m x in w}.
Subspace preimage(const Matrix& m, const Subspace& w);

Subspace image(const Operator& a, const Subspace& u);

/// Complement of w inside u (w must lie in u) by echelon completion: the
/// RREF rows of u are scanned in order and kept when independent of w and
/// the rows already kept.
Subspace echelon_complement(const Subspace& u, const Subspace& w);

/// h (x) f for f in f_space, as a subspace of V; f_space lives in E.
Subspace tensor(const std::array<Rational, 2>& h, const Subspace& f_space);
/// H (x) f_space.
Subspace tensor_h(const Subspace& f_space);

/// {e in E : h (x) e in u}.
Subspace fiber(const Subspace& u, const std::array<Rational, 2>& h);

struct P1P2 {
  Subspace e1;
  Subspace e2;
};
/// Images of the two projections X = h1' (x) e + h2' (x) e' -> e, e'.
P1P2 p1p2(const Subspace& u, const HBasisChange& basis = {});

Matrix gram(const ModelSpace& space, const Subspace& u);
SignatureTriple signature(const ModelSpace& space, const Subspace& u);
Subspace ortho_complement(const ModelSpace& space, const Subspace& u);

/// U0 = U cap IU cap JU cap KU.
Subspace maximal_pq(const Subspace& u);

/// Largest A-invariant subspace of u: u cap A^{-1}u when q(A) != 0 (one
/// step suffices since A^2 is scalar), otherwise the fixpoint of
/// W -> W cap A^{-1}W.
Subspace maximal_invariant_subspace(const Operator& a, const Subspace& u);

} // namespace pqh
